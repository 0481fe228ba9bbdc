#include "polyproj/gale.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polyproj {

RationalMatrix GaleConfiguration::gbar() const {
    int k = corank();
    std::vector<int> idx;
    for (int i = k; i < points(); ++i) idx.push_back(i);
    return g.submatrix_rows(idx);
}

namespace {

// Homogenized transpose (V | 1)^T, shape (D+1) x m.
RationalMatrix homogenized_t(const VPolytope& q) {
    int m = q.size(), d = q.ambient_dim();
    RationalMatrix h(d + 1, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < d; ++i) h.at(i, j) = q.v.at(j, i);
        h.at(d, j) = 1;
    }
    return h;
}

} // namespace

GaleConfiguration gale_transform(const VPolytope& q, bool normalized) {
    int m = q.size(), d = q.ambient_dim();
    if (m < d + 1) throw std::invalid_argument("gale_transform: too few points");
    RationalMatrix h = homogenized_t(q);
    if (rank(h) != d + 1)
        throw std::invalid_argument("gale_transform: points do not affinely span R^D");
    int k = m - d - 1;

    GaleConfiguration out;
    out.source_dim = d;
    if (!normalized) {
        out.g = nullspace_basis(h);
        out.normalized = false;
        return out;
    }
    // Kernel vectors (e_j ; y_j) with H2 y_j = -H1 e_j, H2 the block of the
    // last d + 1 columns. Singular H2 means the last d + 1 points are
    // affinely dependent.
    std::vector<int> all_rows(d + 1);
    for (int i = 0; i <= d; ++i) all_rows[i] = i;
    RationalMatrix h1 = h.slice(all_rows, 0, k);
    RationalMatrix h2 = h.slice(all_rows, k, m);
    RationalMatrix neg_h1 = h1;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < k; ++j) neg_h1.at(i, j) = -h1.at(i, j);
    auto y = solve_square_multi(h2, neg_h1);
    if (!y) {
        std::ostringstream os;
        os << "gale_transform: normalization failed, points {";
        for (int i = k; i < m; ++i) os << (i > k ? "," : "") << i;
        os << "} are affinely dependent";
        throw std::invalid_argument(os.str());
    }
    out.g = RationalMatrix(m, k);
    for (int j = 0; j < k; ++j) out.g.at(j, j) = 1;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < k; ++j) out.g.at(k + i, j) = y->at(i, j);
    out.normalized = true;
    return out;
}

GaleConfiguration degenerate_point_gale(int n_points) {
    if (n_points < 1) throw std::invalid_argument("degenerate_point_gale: need >= 1 point");
    GaleConfiguration out;
    out.source_dim = 0;
    out.normalized = true;
    out.g = RationalMatrix(n_points, n_points - 1);
    for (int j = 0; j < n_points - 1; ++j) {
        out.g.at(j, j) = 1;
        out.g.at(n_points - 1, j) = -1;
    }
    return out;
}

bool is_coface(const GaleConfiguration& g, const std::vector<int>& index_set) {
    if (index_set.empty()) throw std::invalid_argument("is_coface: empty index set");
    return positively_dependent(g.g.submatrix_rows(index_set)).first;
}

std::vector<std::vector<int>> coface_family(const GaleConfiguration& g) {
    int m = g.points();
    if (m > 22) throw std::runtime_error("coface_family: too many points for full enumeration");
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (mask & (1UL << i)) idx.push_back(i);
        if (idx.empty() || is_coface(g, idx)) out.push_back(std::move(idx));
    }
    return out;
}

std::vector<std::vector<int>> facets_from_gale(const GaleConfiguration& g) {
    int m = g.points();
    auto cofaces = coface_family(g);
    // face vertex sets = complements of cofaces, minus the improper face
    std::set<std::vector<int>> faces;
    for (const auto& i : cofaces) {
        std::vector<bool> in(m, false);
        for (int x : i) in[x] = true;
        std::vector<int> s;
        for (int x = 0; x < m; ++x)
            if (!in[x]) s.push_back(x);
        if (static_cast<int>(s.size()) == m) continue; // improper face
        faces.insert(std::move(s));
    }
    std::vector<std::vector<int>> cofacets;
    for (const auto& s : faces) {
        bool maximal = true;
        for (const auto& t : faces) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) { maximal = false; break; }
        }
        if (!maximal) continue;
        std::vector<int> vec(m, 1);
        for (int x : s) vec[x] = 0;
        cofacets.push_back(std::move(vec));
    }
    std::sort(cofacets.begin(), cofacets.end());
    return cofacets;
}

VPolytope cyclic_polytope(int dim, const std::vector<Rational>& t) {
    if (dim < 1) throw std::invalid_argument("cyclic_polytope: dim >= 1 required");
    if (static_cast<int>(t.size()) < dim + 1)
        throw std::invalid_argument("cyclic_polytope: need at least D + 1 parameters");
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j]) throw std::invalid_argument("cyclic_polytope: duplicate parameters");
    VPolytope q;
    q.v = RationalMatrix(static_cast<int>(t.size()), dim);
    for (int i = 0; i < q.v.rows(); ++i) {
        Rational p = 1;
        for (int j = 0; j < dim; ++j) {
            p *= t[i];
            q.v.at(i, j) = p;
        }
    }
    return q;
}

VPolytope cyclic_polytope_standard(int dim, int n_points) {
    std::vector<Rational> t(n_points);
    for (int i = 0; i < n_points; ++i) t[i] = i + 1;
    return cyclic_polytope(dim, t);
}

namespace {

// Parity classification of a 0/1 vector: 0 = even, 1 = odd, 2 = mixed
// (not a cofacet shape), 3 = vacuous (no ones: both parities).
int gap_parity(const std::vector<int>& a) {
    int zeros = 0, parity = -1;
    for (int x : a) {
        if (x == 0) {
            ++zeros;
        } else {
            int p = zeros % 2;
            if (parity < 0) parity = p;
            else if (parity != p) return 2;
        }
    }
    return parity < 0 ? 3 : parity;
}

} // namespace

std::vector<std::vector<int>> gale_evenness_cofacets(int dim, int n_points) {
    if (n_points < dim + 1) throw std::invalid_argument("gale_evenness_cofacets: N >= D + 1 required");
    std::vector<std::vector<int>> out;
    for_each_subset(n_points, dim, [&](const std::vector<int>& zeros) {
        std::vector<int> a(n_points, 1);
        for (int z : zeros) a[z] = 0;
        int p = gap_parity(a);
        if (p == 0 || p == 1 || p == 3) out.push_back(std::move(a));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

HeightVector normalize_heights(const VPolytope& q, const std::vector<Rational>& w) {
    int m = q.size(), d = q.ambient_dim();
    if (static_cast<int>(w.size()) != m) throw std::invalid_argument("normalize_heights: size mismatch");
    int k = m - d - 1;
    if (k < 0) throw std::invalid_argument("normalize_heights: too few points");
    // affine function through the last d + 1 lifted points
    RationalMatrix a(d + 1, d + 1);
    std::vector<Rational> rhs(d + 1);
    for (int i = 0; i < d + 1; ++i) {
        int v = k + i;
        for (int j = 0; j < d; ++j) a.at(i, j) = q.v.at(v, j);
        a.at(i, d) = 1;
        rhs[i] = w[v];
    }
    auto sol = solve_square(a, rhs);
    if (!sol)
        throw std::invalid_argument("normalize_heights: last D + 1 points affinely dependent");
    HeightVector out;
    out.w.resize(m);
    for (int i = 0; i < m; ++i) {
        Rational affine = (*sol)[d];
        for (int j = 0; j < d; ++j) affine += (*sol)[j] * q.v.at(i, j);
        out.w[i] = w[i] - affine;
    }
    out.normalized = true;
    return out;
}

std::vector<std::vector<int>> regular_subdivision(const VPolytope& q, const HeightVector& w,
                                                  const OracleBudget& budget) {
    int m = q.size(), d = q.ambient_dim();
    if (static_cast<int>(w.w.size()) != m)
        throw std::invalid_argument("regular_subdivision: height size mismatch");
    {
        RationalMatrix hom = homogenized_t(q).transposed();
        if (!general_position_linear(hom))
            throw std::invalid_argument("regular_subdivision: vertices not in general position");
    }
    Rational wmax = 0;
    for (const auto& x : w.w) wmax = std::max(wmax, abs_rat(x));
    Rational cmax = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j) cmax = std::max(cmax, abs_rat(q.v.at(i, j)));
    Rational w0 = 1 + Rational(d + 1) * wmax * (cmax + 1);

    VPolytope lifted;
    lifted.v = RationalMatrix(m + 1, d + 1);
    for (int i = 0; i < m; ++i) {
        lifted.v.at(i, 0) = w.w[i];
        for (int j = 0; j < d; ++j) lifted.v.at(i, j + 1) = q.v.at(i, j);
    }
    lifted.v.at(m, 0) = w0;
    for (int j = 0; j < d; ++j) {
        Rational c = 0;
        for (int i = 0; i < m; ++i) c += q.v.at(i, j);
        lifted.v.at(m, j + 1) = c / m;
    }

    auto facets = brute_force_facets(lifted, budget);
    std::vector<std::vector<int>> cells;
    std::set<std::vector<int>> apex_bases;
    for (const auto& f : facets) {
        if (std::find(f.begin(), f.end(), m) == f.end()) {
            cells.push_back(f);
        } else {
            std::vector<int> base;
            for (int x : f)
                if (x != m) base.push_back(x);
            apex_bases.insert(std::move(base));
        }
    }
    // apex-star validation: the facets through the apex must cone exactly
    // the facets of q, otherwise w0 was not large enough
    auto q_facets = brute_force_facets(q, budget);
    std::set<std::vector<int>> expect(q_facets.begin(), q_facets.end());
    if (apex_bases != expect)
        throw std::logic_error("regular_subdivision: apex star is not a pyramid star");
    std::sort(cells.begin(), cells.end());
    return cells;
}

GaleConfiguration heights_gale(const GaleConfiguration& g, const HeightVector& w,
                               const Rational& eps) {
    int m = g.points(), k = g.corank();
    if (!g.normalized) throw std::invalid_argument("heights_gale: configuration not normalized");
    if (!w.normalized) throw std::invalid_argument("heights_gale: heights not normalized");
    if (static_cast<int>(w.w.size()) != m) throw std::invalid_argument("heights_gale: size mismatch");
    for (int i = k; i < m; ++i)
        if (w.w[i] != 0)
            throw std::invalid_argument("heights_gale: height support outside first m - D - 1 coordinates");
    if (eps <= 0) throw std::invalid_argument("heights_gale: eps must be positive");
    GaleConfiguration out;
    out.source_dim = g.source_dim + 1;
    out.normalized = false;
    out.g = RationalMatrix(m + 1, k);
    for (int j = 0; j < k; ++j) out.g.at(0, j) = -eps * w.w[j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) out.g.at(i + 1, j) = g.g.at(i, j);
    return out;
}

std::vector<std::vector<int>> lex_pyramid_cofacets_cyclic(int dim, int n_points, int k) {
    const int d = dim, n = n_points;
    if (n < d + 1) throw std::invalid_argument("lex_pyramid_cofacets_cyclic: N >= D + 1 required");
    if (k < 1 || k > n - d)
        throw std::invalid_argument("lex_pyramid_cofacets_cyclic: k out of range [1, N - D]");

    std::vector<std::vector<int>> out;
    // pyramid facets: apex coned over each facet of cyc_D(N)
    for (auto a : gale_evenness_cofacets(d, n)) {
        std::vector<int> v(n + 1, 1);
        v[0] = 0;
        for (int i = 0; i < n; ++i) v[i + 1] = a[i];
        out.push_back(std::move(v));
    }
    // cells of the lexicographic triangulation; windows are cyclic polytopes
    // on the trailing vertices, so Gale evenness applies per window. Pushing
    // v_j cones the newly created (odd) window cofacets, pulling v_k the
    // remote (even) ones.
    auto window_cells = [&](int j, int want_parity) {
        int len = n - j; // window j+1..n (1-based vertices)
        for_each_subset(len, d, [&](const std::vector<int>& zeros) {
            std::vector<int> a(len, 1);
            for (int z : zeros) a[z] = 0;
            int p = gap_parity(a);
            if (p == want_parity || p == 3) {
                std::vector<int> v(n + 1, 1);
                v[j] = 0; // vertex v_j (position j, apex at 0)
                for (int i = 0; i < len; ++i) v[j + 1 + i] = a[i];
                out.push_back(std::move(v));
            }
            return true;
        });
    };
    for (int j = 1; j < k; ++j) window_cells(j, 1);
    window_cells(k, 0);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HeightVector lex_heights(int dim, int n_points, int k, const Rational& eps) {
    if (k < 1 || k > n_points - dim)
        throw std::invalid_argument("lex_heights: k out of range [1, N - D]");
    HeightVector h;
    h.w.assign(n_points, Rational(0));
    int support = n_points - dim - 1;
    Rational p = 1;
    for (int i = 1; i <= support; ++i) {
        p *= eps;
        h.w[i - 1] = (i == k) ? -p : p;
    }
    h.normalized = true;
    return h;
}

} // namespace polyproj
