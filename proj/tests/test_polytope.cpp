#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyproj/gale.hpp"
#include "polyproj/polytope.hpp"

#include <random>

using namespace polyproj;

namespace {

HPolytope unit_square() {
    HPolytope h;
    h.a = RationalMatrix::from_long({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    h.b = {Rational(1), Rational(1), Rational(1), Rational(1)};
    return h;
}

VPolytope points(std::vector<std::vector<long>> v) {
    VPolytope q;
    q.v = RationalMatrix::from_long(v);
    return q;
}

} // namespace

TEST_CASE("vertex_from_equality_set on the unit square") {
    HPolytope sq = unit_square();
    auto x = vertex_from_equality_set(sq, {0, 2});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(vertex_from_equality_set(sq, {0, 1}).has_value()); // singular pair
}

TEST_CASE("brute_force_vertices: unit square") {
    VPolytope v = brute_force_vertices(unit_square());
    CHECK(v.size() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) CHECK(abs_rat(v.v.at(i, j)) == 1);
}

TEST_CASE("brute_force_vertices: product of two triangles has 9 vertices") {
    // triangle x >= 0, y >= 0, x + y <= 1 in each plane factor
    HPolytope h;
    h.a = RationalMatrix::from_long({{-1, 0, 0, 0},
                                     {0, -1, 0, 0},
                                     {1, 1, 0, 0},
                                     {0, 0, -1, 0},
                                     {0, 0, 0, -1},
                                     {0, 0, 1, 1}});
    h.b = {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0), Rational(1)};
    CHECK(brute_force_vertices(h).size() == 9);
}

TEST_CASE("brute_force_vertices refuses over budget") {
    HPolytope sq = unit_square();
    OracleBudget tiny;
    tiny.subset_budget = 2;
    CHECK_THROWS(brute_force_vertices(sq, tiny));
}

TEST_CASE("brute_force_facets: triangle, octahedron") {
    CHECK(brute_force_facets(points({{0, 0}, {1, 0}, {0, 1}})).size() == 3);
    VPolytope oct = points({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    auto f = brute_force_facets(oct);
    CHECK(f.size() == 8);
    for (const auto& s : f) CHECK(s.size() == 3);
}

TEST_CASE("brute_force_facets merges coplanar subsets (cube facets reported once)") {
    std::vector<std::vector<long>> pts;
    for (int mask = 0; mask < 8; ++mask)
        pts.push_back({mask & 1 ? 1 : -1, mask & 2 ? 1 : -1, mask & 4 ? 1 : -1});
    auto f = brute_force_facets(points(pts));
    CHECK(f.size() == 6);
    for (const auto& s : f) CHECK(s.size() == 4);
}

TEST_CASE("brute_force_facets rejects degenerate input") {
    CHECK_THROWS(brute_force_facets(points({{0, 0}, {1, 0}, {2, 0}, {0, 0}}))); // duplicates
    CHECK_THROWS(brute_force_facets(points({{0, 0}, {1, 0}, {2, 0}})));         // 1-dim hull
}

TEST_CASE("facet oracle agrees with Gale evenness on cyc_3(5)") {
    auto facets = brute_force_facets(cyclic_polytope_standard(3, 5));
    CHECK(facets.size() == 6);
    auto cof = gale_evenness_cofacets(3, 5);
    std::set<std::vector<int>> predicted;
    for (const auto& a : cof) {
        std::vector<int> s;
        for (int i = 0; i < 5; ++i)
            if (a[i] == 0) s.push_back(i);
        predicted.insert(s);
    }
    CHECK(predicted == std::set<std::vector<int>>(facets.begin(), facets.end()));
}

TEST_CASE("facet oracle invariant under permutation and affine maps") {
    std::mt19937_64 rng(4);
    VPolytope q = cyclic_polytope_standard(3, 6);
    auto base = brute_force_facets(q);
    // permute rows
    std::vector<int> perm(6);
    for (int i = 0; i < 6; ++i) perm[i] = i;
    for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    VPolytope qp;
    qp.v = q.v.submatrix_rows(perm);
    auto permuted = brute_force_facets(qp);
    std::set<std::vector<int>> relabeled;
    for (const auto& f : permuted) {
        std::vector<int> s;
        for (int i : f) s.push_back(perm[i]);
        std::sort(s.begin(), s.end());
        relabeled.insert(s);
    }
    CHECK(relabeled == std::set<std::vector<int>>(base.begin(), base.end()));

    // invertible affine image
    RationalMatrix t = RationalMatrix::from_long({{1, 2, 0}, {0, 1, 1}, {1, 0, 1}});
    REQUIRE(determinant(t) != 0);
    VPolytope qa;
    qa.v = RationalMatrix(6, 3);
    for (int i = 0; i < 6; ++i) {
        std::vector<Rational> y = mat_vec(t, q.v.row(i));
        for (int j = 0; j < 3; ++j) qa.v.at(i, j) = y[j] + (j + 1);
    }
    CHECK(brute_force_facets(qa) == base);
}

TEST_CASE("is_face_of and is_extreme_point") {
    VPolytope tri = points({{0, 0}, {2, 0}, {0, 2}, {1, 0}}); // last point on an edge
    CHECK(is_extreme_point(tri, 0));
    CHECK_FALSE(is_extreme_point(tri, 3));
    CHECK(is_face_of(tri, {0, 3, 1})); // bottom edge with its interior point
    CHECK_FALSE(is_face_of(tri, {0, 2, 1}));
    CHECK(is_face_of(tri, {2}));
}

TEST_CASE("product_fvector: cubes and polygon products") {
    FVector cube3 = product_fvector({interval_poly(), interval_poly(), interval_poly()});
    CHECK(cube3.counts == std::vector<Integer>{8, 12, 6});
    CHECK(cube3.euler_ok());

    FVector hex = product_fvector({polygon_poly(6)});
    CHECK(hex.counts == std::vector<Integer>{6, 6});
    CHECK(hex.euler_ok());

    FVector quad2 = product_fvector({polygon_poly(4), polygon_poly(4)});
    CHECK(quad2.counts == std::vector<Integer>{16, 32, 24, 8});
    CHECK(quad2.euler_ok());
}

TEST_CASE("fatness") {
    FVector simplex4;
    simplex4.counts = {5, 10, 10, 5};
    CHECK(fatness(simplex4) == 0);
    FVector cube4;
    cube4.counts = {16, 32, 24, 8};
    CHECK(fatness(cube4) == Rational(18, 7));
    FVector ncp54;
    ncp54.counts = {32, 80, 72, 24};
    CHECK(fatness(ncp54) == Rational(66, 23));
    FVector bad;
    bad.counts = {5, 10, 10};
    CHECK_THROWS(fatness(bad));
}

TEST_CASE("cube face poset: graded by zeros, checked on the 3-cube") {
    // all faces of the 3-cube as sign vectors; rank = #zeros + 1
    std::vector<SignVector> faces;
    for (int a = 0; a < 27; ++a) {
        int x = a;
        SignVector v;
        for (int i = 0; i < 3; ++i) {
            v.push_back(static_cast<Sign>((x % 3) - 1));
            x /= 3;
        }
        faces.push_back(v);
    }
    int by_rank[4] = {0, 0, 0, 0};
    for (const auto& f : faces) {
        int z = 0;
        for (Sign s : f) z += s == Sign::Zero;
        ++by_rank[z];
    }
    CHECK(by_rank[0] == 8);
    CHECK(by_rank[1] == 12);
    CHECK(by_rank[2] == 6);
    CHECK(by_rank[3] == 1);
    // order relation is transitive and matches containment of vertex sets
    for (const auto& f : faces)
        for (const auto& g : faces) {
            if (!cube_face_leq(f, g)) continue;
            for (const auto& h : faces)
                if (cube_face_leq(g, h)) CHECK(cube_face_leq(f, h));
        }
}

TEST_CASE("sign vector and polygon label round trips") {
    SignVector v = sign_vector_parse("--+0-");
    CHECK(sign_string(v) == "--+0-");
    PolygonLabel l = polygon_label_parse("(0,*)(*,3)");
    CHECK(polygon_label_string(l) == "(0,*)(*,3)");
    CHECK(polygon_label_valid(l, 6));
    PolygonLabel bad = polygon_label_parse("(0,3)");
    CHECK_FALSE(polygon_label_valid(bad, 6)); // non-adjacent vertex pair
}
