#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyproj/project.hpp"

#include <set>

using namespace polyproj;

namespace {

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("is_preserved: triangle apex survives projection to the height") {
    // rows: -x - y <= 0, x - y <= 0, y <= 1 in R^2, project to y (d = 1)
    HPolytope tri;
    tri.a = RationalMatrix::from_long({{-1, -1}, {1, -1}, {0, 1}});
    tri.b = {Rational(0), Rational(0), Rational(1)};
    auto apex = is_preserved(tri, {0, 1}, 1);
    CHECK(apex.preserved);
    CHECK(verify_preservation_report(tri, {0, 1}, 1, apex));
    // a single tight row cannot positively span
    HPolytope sq;
    sq.a = RationalMatrix::from_long({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    sq.b = {Rational(1), Rational(1), Rational(1), Rational(1)};
    auto edge = is_preserved(sq, {0}, 1);
    CHECK_FALSE(edge.preserved);
    CHECK(verify_preservation_report(sq, {0}, 1, edge));
}

TEST_CASE("cubical_gale_facets counts: 24 at (5,4), 64 at (6,4), 2n at n=d") {
    CHECK(cubical_gale_facets(5, 4).size() == 24);
    CHECK(cubical_gale_facets(6, 4).size() == 64);
    CHECK(cubical_gale_facets(4, 4).size() == 8);
    CHECK(cubical_gale_facets(6, 6).size() == 12);
    CHECK(cubical_gale_facets(8, 4).size() == 384);
}

TEST_CASE("cubical_gale_facets shape decomposition") {
    for (const auto& g : cubical_gale_facets(6, 4)) {
        // prefix before s is all minus
        for (int i = 0; i + 1 < g.first_zero; ++i) CHECK(g.entries[i] == Sign::Minus);
        CHECK(g.entries[g.first_zero] == Sign::Zero);
        if (g.first_zero >= 1) {
            REQUIRE(g.s.has_value());
            CHECK(*g.s == g.entries[g.first_zero - 1]);
        }
    }
}

TEST_CASE("facet verdicts are independent of the trigger-scan vertex fill") {
    // droppability must give one verdict no matter which contained vertex is
    // used for the scan; check exhaustively at (6,4) and (5,4)
    for (int n : {5, 6}) {
        const int d = 4;
        LexDropTable table(d - 2, n - 1);
        const int window = n - d;
        for_each_subset(n, d - 1, [&](const std::vector<int>& zeros) {
            std::vector<bool> is_zero(n, false);
            for (int z : zeros) is_zero[z] = true;
            std::vector<int> signed_pos;
            for (int c = 0; c < n; ++c)
                if (!is_zero[c]) signed_pos.push_back(c);
            int free = static_cast<int>(signed_pos.size());
            SignVector pat(n, Sign::Zero);
            for (unsigned long mask = 0; mask < (1UL << free); ++mask) {
                for (int i = 0; i < free; ++i)
                    pat[signed_pos[i]] = (mask & (1UL << i)) ? Sign::Plus : Sign::Minus;
                // all fills of the zeros must agree
                int verdicts[2] = {0, 0};
                for (unsigned long fill = 0; fill < (1UL << zeros.size()); ++fill) {
                    SignVector v = pat;
                    for (size_t i = 0; i < zeros.size(); ++i)
                        v[zeros[i]] = (fill & (1UL << i)) ? Sign::Plus : Sign::Minus;
                    int p = vertex_figure_index_cube(v, n, d);
                    ++verdicts[table.is_facet(p, zeros) ? 1 : 0];
                }
                CHECK((verdicts[0] == 0 || verdicts[1] == 0));
            }
            return true;
        });
    }
}

TEST_CASE("two-oracle facet equality at n=5, d=4 (geometry arbitrates)") {
    NcpInstance inst = calibrate_ncp(5, 4, ncp_q_gale(5, 4));
    ProjectedNcp proj = project_ncp(inst);
    CHECK(proj.projected.size() == 32);

    std::set<std::vector<int>> combinatorial;
    for (const auto& g : cubical_gale_facets(5, 4))
        combinatorial.insert(proj.face_vertex_indices(g.entries));
    CHECK(combinatorial.size() == 24);

    auto geometric = as_set(brute_force_facets(proj.projected));
    CHECK(combinatorial == geometric);
}

TEST_CASE("preserved faces = projection-lemma scan agrees with the pattern criterion, n=5") {
    NcpInstance inst = calibrate_ncp(5, 4, ncp_q_gale(5, 4));
    // k = d-1 = 3: facets
    auto scan = ncp_preservation_scan(inst, 3);
    std::set<std::string> from_lemma;
    for (const auto& fp : scan) {
        CHECK(verify_preservation_report(inst.system, cube_tight_rows(5, fp.face), 4, fp.report));
        if (fp.report.preserved) from_lemma.insert(sign_string(fp.face));
    }
    std::set<std::string> from_pattern;
    for (const auto& g : cubical_gale_facets(5, 4)) from_pattern.insert(sign_string(g.entries));
    CHECK(from_lemma == from_pattern);

    // k <= floor(d/2)-1 = 1: the whole skeleton is preserved
    for (int k = 0; k <= 1; ++k) {
        auto faces = ncp_preservation_scan(inst, k);
        for (const auto& fp : faces) CHECK(fp.report.preserved);
    }
}

TEST_CASE("all_strict_condition holds on calibrated instances, vacuous at n=d") {
    CHECK(all_strict_condition(calibrate_ncp(5, 4, ncp_q_gale(5, 4))).ok);
    CHECK(all_strict_condition(calibrate_ncp(4, 4, ncp_q_gale(4, 4))).ok);
}

TEST_CASE("all_strict negative control: oversized eps breaks general position") {
    // build the n=6 cube with eps forced to 1/2 and check the report names a
    // failing vertex when the condition fails; at this size eps = 1/2 is in
    // fact too large for the coface-family condition, so calibration picks a
    // smaller one -- force the large value by hand
    GaleConfiguration q = ncp_q_gale(6, 4);
    DeformedCubeSpec spec;
    spec.n = 6;
    spec.d = 4;
    spec.gbar = q.gbar();
    spec.eps = Rational(1, 2);
    HPolytope sys = build_deformed_cube(spec);
    NcpInstance forced{spec, sys, q};
    NcpInstance good = calibrate_ncp(6, 4, q);
    CHECK(good.spec.eps < Rational(1, 2));
    AllStrictReport rep = all_strict_condition(forced);
    if (!rep.ok) CHECK(!rep.failing.empty());
    // either way the calibrated instance passes
    CHECK(all_strict_condition(good).ok);
}

TEST_CASE("vertex_figure_index on cube vertices") {
    SignVector all_plus(5, Sign::Plus), all_minus(5, Sign::Minus);
    CHECK(vertex_figure_index_cube(all_plus, 5, 4) == 1);
    CHECK(vertex_figure_index_cube(all_minus, 5, 4) == 2); // default: all pushed
    // printed pdpp-style trigger variant flips the two
    CHECK(vertex_figure_index_cube(all_plus, 5, 4, TriggerSign::Minus) == 2);
    CHECK(vertex_figure_index_cube(all_minus, 5, 4, TriggerSign::Minus) == 1);
}

TEST_CASE("vertex figure theorem against patterns, n = 5 and 6") {
    for (int n : {5, 6}) {
        const int d = 4;
        auto facets = cubical_gale_facets(n, d);
        LexDropTable table(d - 2, n - 1);
        for (const auto& v : cube_vertex_labels(n)) {
            std::set<std::vector<int>> incident;
            for (const auto& g : facets) {
                if (cube_face_leq(v, g.entries)) {
                    std::vector<int> zeros;
                    for (int c = 0; c < n; ++c)
                        if (g.entries[c] == Sign::Zero) zeros.push_back(c);
                    incident.insert(zeros);
                }
            }
            int p = vertex_figure_index_cube(v, n, d);
            std::set<std::vector<int>> lex;
            for (const auto& cof : lex_pyramid_cofacets_cyclic(d - 2, n - 1, p)) {
                std::vector<int> zeros;
                for (int i = 0; i < n; ++i)
                    if (cof[i] == 0) zeros.push_back(i);
                lex.insert(zeros);
            }
            CHECK(incident == lex);
        }
    }
}

TEST_CASE("fold is order- and rank-preserving; vertex table") {
    // table rows from the paper-side construction
    CHECK(fold(polygon_label_parse("(0,1)"), 6) == sign_vector_parse("-+"));
    CHECK(fold(polygon_label_parse("(0,5)"), 6) == sign_vector_parse("--"));
    CHECK(fold(polygon_label_parse("(2,1)"), 6) == sign_vector_parse("++"));
    CHECK(fold(polygon_label_parse("(2,3)"), 6) == sign_vector_parse("+-"));
    CHECK(fold(polygon_label_parse("(0,*)"), 6) == sign_vector_parse("-0"));
    CHECK(fold(polygon_label_parse("(*,*)"), 6) == sign_vector_parse("00"));

    for (int m = 4; m <= 10; m += 2) {
        for (int r = 1; r <= 2; ++r) {
            // all faces of the product poset
            std::vector<PolygonLabel> faces;
            std::vector<std::pair<int, int>> atoms;
            for (int e = 0; e < m; e += 2) {
                atoms.emplace_back(e, (e + m - 1) % m);
                atoms.emplace_back(e, e + 1);
                atoms.emplace_back(e, kStar);
            }
            for (int o = 1; o < m; o += 2) atoms.emplace_back(kStar, o);
            atoms.emplace_back(kStar, kStar);
            if (r == 1) {
                for (const auto& a : atoms) faces.push_back(PolygonLabel{{a}});
            } else {
                for (const auto& a : atoms)
                    for (const auto& b : atoms) faces.push_back(PolygonLabel{{a, b}});
            }
            auto leq_pair = [&](std::pair<int, int> x, std::pair<int, int> y) {
                // x <= y in the polygon poset: y's non-star entries match
                if (y.first != kStar && x.first != y.first) return false;
                if (y.second != kStar && x.second != y.second) return false;
                return true;
            };
            for (const auto& f : faces) {
                SignVector ff = fold(f, m);
                CHECK(static_cast<int>(ff.size()) == 2 * r);
                int stars = f.stars(), zeros = 0;
                for (Sign s : ff) zeros += s == Sign::Zero;
                CHECK(stars == zeros); // rank preserving
                for (const auto& g : faces) {
                    bool le = true;
                    for (int i = 0; i < r; ++i) le = le && leq_pair(f.pairs[i], g.pairs[i]);
                    if (le) CHECK(cube_face_leq(fold(f, m), fold(g, m))); // order preserving
                }
            }
        }
    }
}

TEST_CASE("pdpp_facets: m=4 bijection with cubical patterns (criterion 10 core)") {
    for (int r = 2; r <= 4; ++r) {
        for (int d = 4; d <= 2 * r; ++d) {
            auto labels = pdpp_facets(r, 4, d);
            auto patterns = cubical_gale_facets(2 * r, d);
            REQUIRE(labels.size() == patterns.size());
            std::set<std::string> folded;
            for (const auto& l : labels) folded.insert(sign_string(fold(l, 4)));
            CHECK(folded.size() == labels.size()); // fold injective at m = 4
            std::set<std::string> pats;
            for (const auto& g : patterns) pats.insert(sign_string(g.entries));
            CHECK(folded == pats);
        }
    }
}

TEST_CASE("pdpp_facets: hexagon product d = 2r gives all 12 facets") {
    auto f = pdpp_facets(2, 6, 4);
    CHECK(f.size() == 12);
}

TEST_CASE("two-oracle facet equality for the dpp (r=2, m=6, d=4)") {
    DppInstance inst = calibrate_dpp(2, 6, 4, dpp_q_gale(2, 4));
    ProjectedDpp proj = project_dpp(inst);
    CHECK(proj.projected.size() == 36);
    std::set<std::vector<int>> combinatorial;
    for (const auto& l : pdpp_facets(2, 6, 4))
        combinatorial.insert(proj.face_vertex_indices(l));
    auto geometric = as_set(brute_force_facets(proj.projected));
    CHECK(combinatorial == geometric);
}

TEST_CASE("DP facet count equals enumeration (m <= 8, r <= 3)") {
    for (int m : {4, 6, 8}) {
        for (int r : {2, 3}) {
            CHECK(pdpp_facet_count_dp(r, m) ==
                  Integer(static_cast<long>(pdpp_facets(r, m, 4).size())));
        }
    }
    CHECK(pdpp_facet_count_dp(4, 4) == Integer(static_cast<long>(cubical_gale_facets(8, 4).size())));
}

TEST_CASE("projected f-vectors") {
    FVector f54 = projected_fvector_ncp(5, 4);
    CHECK(f54.counts == std::vector<Integer>{32, 80, 72, 24});
    CHECK(f54.euler_ok());
    CHECK(fatness(f54) == Rational(66, 23));

    FVector f64 = projected_fvector_ncp(6, 4);
    CHECK(f64.counts == std::vector<Integer>{64, 192, 192, 64});
    CHECK(f64.euler_ok());

    FVector hex2 = projected_fvector_pdpp(2, 6, 4, false);
    CHECK(hex2.counts == std::vector<Integer>{36, 72, 48, 12});
    CHECK(hex2.euler_ok());
    CHECK(projected_fvector_pdpp(2, 4, 4, false).counts == std::vector<Integer>{16, 32, 24, 8});
}

TEST_CASE("general-Q droppability table agrees with the cyclic fast path") {
    GaleConfiguration q = gale_transform(cyclic_polytope_standard(2, 5), true);
    VPolytope coords = cyclic_polytope_standard(2, 5);
    LexDropTable generic(q, &coords);
    LexDropTable fast(2, 5);
    CHECK(generic.p_max() == fast.p_max());
    for (int p = 1; p <= fast.p_max(); ++p) {
        // compare via membership over all (D+1)-subsets of the rows
        for_each_subset(6, 3, [&](const std::vector<int>& s) {
            CHECK(generic.is_facet(p, s) == fast.is_facet(p, s));
            return true;
        });
    }
}

TEST_CASE("fatness sweep is monotone and approaches 9 from below (small grid)") {
    auto rows = fatness_sweep(64, 64);
    std::map<std::pair<int, int>, Rational> fat;
    for (const auto& row : rows) {
        CHECK(row.f.euler_ok());
        CHECK(row.fat < 9);
        fat[{row.m, row.r}] = row.fat;
    }
    for (const auto& [key, value] : fat) {
        auto [m, r] = key;
        if (fat.count({m * 2, r})) CHECK(value < fat[{m * 2, r}]);
        if (fat.count({m, r * 2})) CHECK(value < fat[{m, r * 2}]);
    }
}
