#include "polyproj/deformed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace polyproj {

namespace {

std::vector<int> equality_set(const HPolytope& h, const std::vector<Rational>& x) {
    std::vector<int> eq;
    std::vector<Rational> ax = mat_vec(h.a, x);
    for (int i = 0; i < h.rows(); ++i)
        if (ax[i] == h.b[i]) eq.push_back(i);
    return eq;
}

std::set<std::vector<int>> equality_set_family(const HPolytope& h, const OracleBudget& budget) {
    VPolytope verts = brute_force_vertices(h, budget);
    std::set<std::vector<int>> fam;
    for (int i = 0; i < verts.size(); ++i) fam.insert(equality_set(h, verts.v.row(i)));
    return fam;
}

bool is_simple_system(const HPolytope& h, const OracleBudget& budget) {
    VPolytope verts = brute_force_vertices(h, budget);
    if (verts.size() == 0) return false;
    for (int i = 0; i < verts.size(); ++i)
        if (static_cast<int>(equality_set(h, verts.v.row(i)).size()) != h.ambient_dim())
            return false;
    return true;
}

} // namespace

HPolytope build_deformed_product(const DeformedProductSpec& spec, const OracleBudget& budget) {
    if (!is_simple_system(spec.q, budget))
        throw std::invalid_argument("build_deformed_product: Q is not simple");
    int kp = spec.p.rows(), dp = spec.p.ambient_dim();
    int nq = spec.q.rows(), eq = spec.q.ambient_dim();
    if (spec.c.rows() != nq || spec.c.cols() != dp)
        throw std::invalid_argument("build_deformed_product: coupling shape mismatch");
    HPolytope out;
    out.a = RationalMatrix(kp + nq, dp + eq);
    out.b.resize(kp + nq);
    for (int i = 0; i < kp; ++i) {
        for (int j = 0; j < dp; ++j) out.a.at(i, j) = spec.p.a.at(i, j);
        out.b[i] = spec.p.b[i];
    }
    for (int i = 0; i < nq; ++i) {
        for (int j = 0; j < dp; ++j) out.a.at(kp + i, j) = spec.c.at(i, j);
        for (int j = 0; j < eq; ++j) out.a.at(kp + i, dp + j) = spec.q.a.at(i, j);
        out.b[kp + i] = spec.m * spec.q.b[i];
    }
    return out;
}

Rational calibrate_M(DeformedProductSpec& spec, const OracleBudget& budget) {
    if (!is_simple_system(spec.q, budget))
        throw std::invalid_argument("calibrate_M: Q is not simple");
    auto q_family = equality_set_family(spec.q, budget);
    VPolytope pverts = brute_force_vertices(spec.p, budget);
    Rational m = 1;
    for (int step = 0; step <= 40; ++step) {
        int failing = -1;
        for (int i = 0; i < pverts.size() && failing < 0; ++i) {
            std::vector<Rational> v = pverts.v.row(i);
            std::vector<Rational> cv = mat_vec(spec.c, v);
            HPolytope slice;
            slice.a = spec.q.a;
            slice.b.resize(spec.q.rows());
            for (int r = 0; r < spec.q.rows(); ++r) slice.b[r] = m * spec.q.b[r] - cv[r];
            try {
                if (equality_set_family(slice, budget) != q_family) failing = i;
            } catch (const std::exception&) {
                failing = i; // e.g. empty slice
            }
        }
        if (failing < 0) {
            spec.m = m;
            return m;
        }
        m *= 2;
    }
    throw std::runtime_error("calibrate_M: budget exhausted before combinatorial equivalence");
}

std::pair<RationalMatrix, std::vector<Rational>> az_rank1_matrix(
    const AffineFunctional& phi, const std::vector<Rational>& b1,
    const std::vector<Rational>& b2) {
    if (b1.size() != b2.size()) throw std::invalid_argument("az_rank1_matrix: size mismatch");
    int n = static_cast<int>(b1.size());
    int d = static_cast<int>(phi.c.size());
    RationalMatrix c(n, d);
    std::vector<Rational> b(n);
    for (int i = 0; i < n; ++i) {
        Rational diff = b1[i] - b2[i];
        for (int j = 0; j < d; ++j) c.at(i, j) = diff * phi.c[j];
        b[i] = b1[i] - phi.delta * diff;
    }
    return {c, b};
}

namespace {

// Coupling of cube coordinate c (0-based) into the columns before it:
// nothing for c = 0, the subdiagonal unit for chain coordinates
// 1..n-d, a gbar row beyond the chain.
void add_cube_coupling(RationalMatrix& lhs, int row, int c, int n, int d,
                       const RationalMatrix& gbar) {
    if (c == 0) return;
    if (c <= n - d) {
        lhs.at(row, c - 1) = 1;
    } else {
        int g = c - (n - d) - 1;
        for (int j = 0; j < n - d; ++j) lhs.at(row, j) = gbar.at(g, j);
    }
}

} // namespace

RationalMatrix deformed_cube_lhs(int n, int d, const RationalMatrix& gbar, const Rational& eps) {
    if (d < 2 || d > n) throw std::invalid_argument("deformed_cube_lhs: need 2 <= d <= n");
    if (gbar.rows() != d - 1 || gbar.cols() != n - d)
        throw std::invalid_argument("deformed_cube_lhs: gbar must be (d-1) x (n-d)");
    if (eps <= 0) throw std::invalid_argument("deformed_cube_lhs: eps must be positive");
    RationalMatrix lhs(2 * n, n);
    for (int c = 0; c < n; ++c) {
        lhs.at(2 * c, c) = eps;
        lhs.at(2 * c + 1, c) = -eps;
        add_cube_coupling(lhs, 2 * c, c, n, d, gbar);
        add_cube_coupling(lhs, 2 * c + 1, c, n, d, gbar);
    }
    return lhs;
}

HPolytope build_deformed_cube(DeformedCubeSpec& spec, const OracleBudget& budget) {
    RationalMatrix lhs = deformed_cube_lhs(spec.n, spec.d, spec.gbar, spec.eps);
    int n = spec.n;
    spec.rhs.assign(2 * n, Rational(0));
    spec.rhs[0] = spec.rhs[1] = 1;

    // Iterated-product calibration, one interval factor per step.
    for (int c = 1; c < n; ++c) {
        DeformedProductSpec step;
        std::vector<int> prefix_rows(2 * c);
        for (int i = 0; i < 2 * c; ++i) prefix_rows[i] = i;
        step.p.a = lhs.slice(prefix_rows, 0, c);
        step.p.b.assign(spec.rhs.begin(), spec.rhs.begin() + 2 * c);
        step.q.a = RationalMatrix{{spec.eps}, {-spec.eps}};
        step.q.b = {Rational(1), Rational(1)};
        step.c = RationalMatrix(2, c);
        for (int j = 0; j < c; ++j) {
            step.c.at(0, j) = lhs.at(2 * c, j);
            step.c.at(1, j) = lhs.at(2 * c + 1, j);
        }
        Rational m = calibrate_M(step, budget);
        spec.rhs[2 * c] = spec.rhs[2 * c + 1] = m;
    }

    HPolytope out;
    out.a = lhs;
    out.b = spec.rhs;
    out.row_labels.resize(2 * n);
    for (int c = 0; c < n; ++c) {
        out.row_labels[2 * c] = "+" + std::to_string(c + 1);
        out.row_labels[2 * c + 1] = "-" + std::to_string(c + 1);
    }
    return out;
}

HPolytope polygon_system(int m, const Rational& eps, const OracleBudget& budget) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("polygon_system: m must be even, >= 4");
    if (eps <= 0) throw std::invalid_argument("polygon_system: eps must be positive");
    HPolytope h;
    h.a = RationalMatrix(m, 2);
    h.b.resize(m);
    for (int i = 0; i < m; ++i) {
        Rational ax, ay;
        if (i == 0) {
            ax = -1; ay = 0;
        } else {
            ax = 1;
            ay = eps * Rational(m - 2 * i) / Rational(m - 2);
        }
        Rational bi = 1 + ay * ay;
        Rational scale = (i % 2 == 0) ? eps : Rational(1);
        h.a.at(i, 0) = scale * ax;
        h.a.at(i, 1) = scale * ay;
        h.b[i] = scale * bi;
        h.row_labels.push_back("a" + std::to_string(i));
    }
    // every row must be facet-defining and the polygon must have m vertices
    VPolytope verts = brute_force_vertices(h, budget);
    if (verts.size() != m)
        throw std::logic_error("polygon_system: vertex count != m");
    std::vector<int> touch(m, 0);
    for (int i = 0; i < verts.size(); ++i)
        for (int r : equality_set(h, verts.v.row(i))) ++touch[r];
    for (int r = 0; r < m; ++r)
        if (touch[r] != 2) throw std::logic_error("polygon_system: row not facet-defining");
    return h;
}

RationalMatrix dpp_lhs(int r, int m, int d, const RationalMatrix& gbar, const Rational& eps) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("dpp_lhs: m must be even, >= 4");
    if (d < 2 || d > 2 * r) throw std::invalid_argument("dpp_lhs: need 2 <= d <= 2r");
    if (gbar.rows() != d - 1 || gbar.cols() != 2 * r - d)
        throw std::invalid_argument("dpp_lhs: gbar must be (d-1) x (2r-d)");
    HPolytope poly = polygon_system(m, eps);
    int n = 2 * r;
    RationalMatrix lhs(r * m, n);
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < m; ++i) {
            int row = k * m + i;
            lhs.at(row, 2 * k) = poly.a.at(i, 0);
            lhs.at(row, 2 * k + 1) = poly.a.at(i, 1);
            // cube coordinate of this row: even-local rows bound the first
            // coordinate of the factor, odd-local rows the second
            int c = (i % 2 == 0) ? 2 * k : 2 * k + 1;
            if (c == 0) continue;
            if (c <= n - d) {
                // chain coupling; for odd-local rows the unit sits in the
                // factor's own first column and is already part of a_i
                if (i % 2 == 0) lhs.at(row, c - 1) = 1;
            } else {
                int g = c - (n - d) - 1;
                for (int j = 0; j < n - d; ++j) lhs.at(row, j) = gbar.at(g, j);
            }
        }
    }
    return lhs;
}

HPolytope build_dpp(DppSpec& spec, const OracleBudget& budget) {
    RationalMatrix lhs = dpp_lhs(spec.r, spec.m, spec.d, spec.gbar, spec.eps);
    HPolytope poly = polygon_system(spec.m, spec.eps, budget);
    int r = spec.r, m = spec.m;
    spec.rhs.assign(r * m, Rational(0));
    for (int i = 0; i < m; ++i) spec.rhs[i] = poly.b[i];

    for (int k = 1; k < r; ++k) {
        DeformedProductSpec step;
        std::vector<int> prefix_rows(k * m);
        for (int i = 0; i < k * m; ++i) prefix_rows[i] = i;
        step.p.a = lhs.slice(prefix_rows, 0, 2 * k);
        step.p.b.assign(spec.rhs.begin(), spec.rhs.begin() + k * m);
        step.q = poly;
        std::vector<int> factor_rows(m);
        for (int i = 0; i < m; ++i) factor_rows[i] = k * m + i;
        step.c = lhs.slice(factor_rows, 0, 2 * k);
        Rational mm = calibrate_M(step, budget);
        for (int i = 0; i < m; ++i) spec.rhs[k * m + i] = mm * poly.b[i];
    }

    HPolytope out;
    out.a = lhs;
    out.b = spec.rhs;
    out.row_labels.resize(r * m);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < m; ++i)
            out.row_labels[k * m + i] = "f" + std::to_string(k + 1) + ":a" + std::to_string(i);
    return out;
}

std::vector<SignVector> cube_vertex_labels(int n) {
    std::vector<SignVector> out;
    out.reserve(1u << n);
    SignVector v(n, Sign::Minus);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        for (int i = 0; i < n; ++i) v[i] = (mask & (1UL << i)) ? Sign::Plus : Sign::Minus;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), sign_vector_less);
    return out;
}

std::vector<PolygonLabel> dpp_vertex_labels(int r, int m) {
    std::vector<std::pair<int, int>> verts;
    for (int e = 0; e < m; e += 2) {
        verts.emplace_back(e, (e + m - 1) % m);
        verts.emplace_back(e, e + 1);
    }
    std::sort(verts.begin(), verts.end());
    std::vector<PolygonLabel> out;
    PolygonLabel cur;
    cur.pairs.assign(r, verts[0]);
    std::function<void(int)> rec = [&](int k) {
        if (k == r) {
            out.push_back(cur);
            return;
        }
        for (const auto& v : verts) {
            cur.pairs[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> cube_vertex_point(const DeformedCubeSpec& spec, const SignVector& v) {
    int n = spec.n, d = spec.d;
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("cube_vertex_point: size");
    std::vector<Rational> x(n);
    for (int c = 0; c < n; ++c) {
        if (v[c] == Sign::Zero) throw std::invalid_argument("cube_vertex_point: not a vertex label");
        Rational s = (v[c] == Sign::Plus) ? spec.eps : -spec.eps;
        int row = 2 * c + (v[c] == Sign::Plus ? 0 : 1);
        Rational coupled = 0;
        if (c >= 1) {
            if (c <= n - d) {
                coupled = x[c - 1];
            } else {
                for (int j = 0; j < n - d; ++j) coupled += spec.gbar.at(c - (n - d) - 1, j) * x[j];
            }
        }
        x[c] = (spec.rhs[row] - coupled) / s;
    }
    return x;
}

std::vector<Rational> dpp_vertex_point(const DppSpec& spec, const PolygonLabel& v) {
    int r = spec.r, m = spec.m, d = spec.d, n = 2 * r;
    if (v.factors() != r || v.stars() != 0)
        throw std::invalid_argument("dpp_vertex_point: not a vertex label");
    RationalMatrix lhs = dpp_lhs(r, m, d, spec.gbar, spec.eps);
    std::vector<Rational> x(n);
    for (int k = 0; k < r; ++k) {
        auto [e, o] = v.pairs[k];
        int re = k * m + e, ro = k * m + o;
        RationalMatrix a2{{lhs.at(re, 2 * k), lhs.at(re, 2 * k + 1)},
                          {lhs.at(ro, 2 * k), lhs.at(ro, 2 * k + 1)}};
        Rational ce = 0, co = 0;
        for (int j = 0; j < 2 * k; ++j) {
            ce += lhs.at(re, j) * x[j];
            co += lhs.at(ro, j) * x[j];
        }
        auto sol = solve_square(a2, {spec.rhs[re] - ce, spec.rhs[ro] - co});
        if (!sol) throw std::logic_error("dpp_vertex_point: singular factor system");
        x[2 * k] = (*sol)[0];
        x[2 * k + 1] = (*sol)[1];
    }
    return x;
}

std::vector<int> cube_tight_rows(int n, const SignVector& face) {
    if (static_cast<int>(face.size()) != n) throw std::invalid_argument("cube_tight_rows: size");
    std::vector<int> rows;
    for (int c = 0; c < n; ++c) {
        if (face[c] == Sign::Zero) continue;
        rows.push_back(2 * c + (face[c] == Sign::Plus ? 0 : 1));
    }
    return rows;
}

std::vector<int> dpp_tight_rows(int r, int m, const PolygonLabel& face) {
    if (face.factors() != r) throw std::invalid_argument("dpp_tight_rows: factor count");
    std::vector<int> rows;
    for (int k = 0; k < r; ++k) {
        auto [e, o] = face.pairs[k];
        if (e != kStar) rows.push_back(k * m + e);
        if (o != kStar) rows.push_back(k * m + o);
    }
    return rows;
}

namespace {

// Shared eps calibration. vertex_classes: distinct truncated tight matrices
// (full n_rows x cols block, first row = designated first row). Checks per
// class: (a) coface family of the matrix minus its first row equals Q's,
// (b) general position of all rows.
bool eps_checks_pass(const std::vector<RationalMatrix>& classes,
                     const GaleConfiguration& q_gale, std::string* fail_reason) {
    std::set<std::vector<int>> q_family;
    for (auto& i : coface_family(q_gale)) q_family.insert(i);
    for (const auto& t : classes) {
        if (!general_position_linear(t)) {
            if (fail_reason) *fail_reason = "general position failure";
            return false;
        }
        std::vector<int> rest(t.rows() - 1);
        for (int i = 1; i < t.rows(); ++i) rest[i - 1] = i;
        GaleConfiguration perturbed;
        perturbed.g = t.submatrix_rows(rest);
        perturbed.normalized = false;
        perturbed.source_dim = q_gale.source_dim;
        std::set<std::vector<int>> fam;
        for (auto& i : coface_family(perturbed)) fam.insert(i);
        if (fam != q_family) {
            if (fail_reason) *fail_reason = "coface family mismatch";
            return false;
        }
    }
    return true;
}

} // namespace

GaleConfiguration ncp_q_gale(int n, int d) {
    if (d < 2 || d > n) throw std::invalid_argument("ncp_q_gale: need 2 <= d <= n");
    if (d == 2) return degenerate_point_gale(n - 1);
    if (d == 3 && n > 3)
        throw std::invalid_argument("ncp_q_gale: no neighborly 1-polytope on more than 2 vertices");
    return gale_transform(cyclic_polytope_standard(d - 2, n - 1), true);
}

GaleConfiguration dpp_q_gale(int r, int d) { return ncp_q_gale(2 * r, d); }

NcpInstance calibrate_ncp(int n, int d, const GaleConfiguration& q_gale, const OracleBudget& budget) {
    if (q_gale.points() != n - 1 || q_gale.corank() != n - d || !q_gale.normalized)
        throw std::invalid_argument("calibrate_ncp: Q Gale configuration has wrong shape");
    NcpInstance inst;
    inst.q_gale = q_gale;
    Rational eps(1, 2);
    std::string reason;
    for (int t = 1; t <= 40; ++t, eps /= 2) {
        DeformedCubeSpec spec;
        spec.n = n;
        spec.d = d;
        spec.gbar = q_gale.gbar();
        spec.eps = eps;
        HPolytope system = build_deformed_cube(spec, budget);

        std::set<RationalMatrix> classes;
        bool vertices_ok = true;
        for (const auto& v : cube_vertex_labels(n)) {
            std::vector<Rational> x = cube_vertex_point(spec, v);
            if (!system.contains(x)) { vertices_ok = false; break; }
            std::vector<int> eq;
            std::vector<Rational> ax = mat_vec(system.a, x);
            for (int i = 0; i < system.rows(); ++i)
                if (ax[i] == system.b[i]) eq.push_back(i);
            if (static_cast<int>(eq.size()) != n) { vertices_ok = false; break; }
            classes.insert(system.a.slice(cube_tight_rows(n, v), 0, n - d));
        }
        if (!vertices_ok) continue;
        std::vector<RationalMatrix> cls(classes.begin(), classes.end());
        if (eps_checks_pass(cls, q_gale, &reason)) {
            inst.spec = spec;
            inst.spec.eps = eps;
            inst.system = system;
            return inst;
        }
    }
    throw std::runtime_error("calibrate_ncp: no eps in budget passed (" + reason + ")");
}

DppInstance calibrate_dpp(int r, int m, int d, const GaleConfiguration& q_gale,
                          const OracleBudget& budget) {
    if (q_gale.points() != 2 * r - 1 || q_gale.corank() != 2 * r - d || !q_gale.normalized)
        throw std::invalid_argument("calibrate_dpp: Q Gale configuration has wrong shape");
    DppInstance inst;
    inst.q_gale = q_gale;
    Rational eps(1, 2);
    std::string reason;
    for (int t = 1; t <= 40; ++t, eps /= 2) {
        DppSpec spec;
        spec.r = r;
        spec.m = m;
        spec.d = d;
        spec.gbar = q_gale.gbar();
        spec.eps = eps;
        HPolytope system = build_dpp(spec, budget);

        std::set<RationalMatrix> classes;
        bool vertices_ok = true;
        for (const auto& v : dpp_vertex_labels(r, m)) {
            std::vector<Rational> x = dpp_vertex_point(spec, v);
            if (!system.contains(x)) { vertices_ok = false; break; }
            std::vector<int> eq;
            std::vector<Rational> ax = mat_vec(system.a, x);
            for (int i = 0; i < system.rows(); ++i)
                if (ax[i] == system.b[i]) eq.push_back(i);
            if (static_cast<int>(eq.size()) != 2 * r) { vertices_ok = false; break; }
            classes.insert(system.a.slice(dpp_tight_rows(r, m, v), 0, 2 * r - d));
        }
        if (!vertices_ok) continue;
        std::vector<RationalMatrix> cls(classes.begin(), classes.end());
        if (eps_checks_pass(cls, q_gale, &reason)) {
            inst.spec = spec;
            inst.spec.eps = eps;
            inst.system = system;
            return inst;
        }
    }
    throw std::runtime_error("calibrate_dpp: no eps in budget passed (" + reason + ")");
}

} // namespace polyproj
