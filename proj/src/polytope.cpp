#include "polyproj/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace polyproj {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    if (const char* s = std::getenv("POLYPROJ_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) b.subset_budget = v;
    }
    return b;
}

namespace {

long long binom_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

} // namespace

bool HPolytope::contains(const std::vector<Rational>& x) const {
    std::vector<Rational> ax = mat_vec(a, x);
    for (int i = 0; i < rows(); ++i)
        if (ax[i] > b[i]) return false;
    return true;
}

char sign_char(Sign s) {
    switch (s) {
        case Sign::Minus: return '-';
        case Sign::Zero: return '0';
        default: return '+';
    }
}

Sign sign_from_char(char c) {
    if (c == '-') return Sign::Minus;
    if (c == '0') return Sign::Zero;
    if (c == '+') return Sign::Plus;
    throw std::invalid_argument(std::string("bad sign character '") + c + "'");
}

std::string sign_string(const SignVector& v) {
    std::string s;
    s.reserve(v.size());
    for (Sign x : v) s.push_back(sign_char(x));
    return s;
}

SignVector sign_vector_parse(const std::string& s) {
    SignVector v;
    v.reserve(s.size());
    for (char c : s) v.push_back(sign_from_char(c));
    return v;
}

bool cube_face_leq(const SignVector& f, const SignVector& g) {
    if (f.size() != g.size()) return false;
    for (size_t i = 0; i < f.size(); ++i)
        if (g[i] != Sign::Zero && f[i] != g[i]) return false;
    return true;
}

bool sign_vector_less(const SignVector& a, const SignVector& b) {
    auto key = [](Sign s) { return s == Sign::Minus ? 0 : (s == Sign::Zero ? 1 : 2); };
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return key(a[i]) < key(b[i]);
    return a.size() < b.size();
}

int PolygonLabel::stars() const {
    int n = 0;
    for (const auto& [e, o] : pairs) n += (e == kStar) + (o == kStar);
    return n;
}

bool polygon_label_valid(const PolygonLabel& l, int m) {
    if (m < 4 || m % 2 != 0) return false;
    for (const auto& [e, o] : l.pairs) {
        bool e_ok = e == kStar || (e >= 0 && e < m && e % 2 == 0);
        bool o_ok = o == kStar || (o >= 1 && o < m && o % 2 == 1);
        if (!e_ok || !o_ok) return false;
        if (e != kStar && o != kStar) {
            // vertex: edges must be cyclically adjacent
            int d = (o - e + m) % m;
            if (d != 1 && d != m - 1) return false;
        }
    }
    return true;
}

std::string polygon_label_string(const PolygonLabel& l) {
    std::string s;
    for (const auto& [e, o] : l.pairs) {
        s += "(";
        s += e == kStar ? "*" : std::to_string(e);
        s += ",";
        s += o == kStar ? "*" : std::to_string(o);
        s += ")";
    }
    return s;
}

PolygonLabel polygon_label_parse(const std::string& s) {
    PolygonLabel l;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("polygon label: expected '('");
        size_t comma = s.find(',', i);
        size_t close = s.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("polygon label: malformed pair");
        auto part = [&](size_t from, size_t to) {
            std::string t = s.substr(from, to - from);
            if (t == "*") return kStar;
            return std::stoi(t);
        };
        l.pairs.emplace_back(part(i + 1, comma), part(comma + 1, close));
        i = close + 1;
    }
    return l;
}

bool FVector::euler_ok() const {
    Integer alt = 0;
    int d = dim();
    for (int i = 0; i < d; ++i) alt += (i % 2 == 0) ? counts[i] : -counts[i];
    Integer expect = (d % 2 == 0) ? 0 : 2;
    return alt == expect;
}

std::optional<std::vector<Rational>> vertex_from_equality_set(const HPolytope& p,
                                                              const std::vector<int>& index_set) {
    if (static_cast<int>(index_set.size()) != p.ambient_dim())
        throw std::invalid_argument("vertex_from_equality_set: |I| != ambient dim");
    RationalMatrix ai = p.a.submatrix_rows(index_set);
    std::vector<Rational> bi(index_set.size());
    for (size_t i = 0; i < index_set.size(); ++i) bi[i] = p.b[index_set[i]];
    auto x = solve_square(ai, bi);
    if (!x) return std::nullopt;
    if (!p.contains(*x)) return std::nullopt;
    return x;
}

VPolytope brute_force_vertices(const HPolytope& p, const OracleBudget& budget) {
    int n = p.rows(), d = p.ambient_dim();
    if (binom_capped(n, d, budget.subset_budget) > budget.subset_budget)
        throw std::runtime_error("brute_force_vertices: subset budget exceeded");
    std::set<std::vector<Rational>> seen;
    for_each_subset(n, d, [&](const std::vector<int>& idx) {
        auto x = vertex_from_equality_set(p, idx);
        if (x) seen.insert(*x);
        return true;
    });
    VPolytope out;
    out.v = RationalMatrix(static_cast<int>(seen.size()), d);
    int i = 0;
    for (const auto& x : seen) out.v.set_row(i++, x);
    return out;
}

namespace {

// Hyperplane through the d affinely independent points, as (c, beta) with
// c . x = beta; nullopt when the points are affinely dependent.
std::optional<std::pair<std::vector<Rational>, Rational>> hyperplane_through(
    const RationalMatrix& v, const std::vector<int>& idx) {
    int d = v.cols();
    RationalMatrix m(static_cast<int>(idx.size()), d + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < d; ++j) m.at(i, j) = v.at(idx[i], j);
        m.at(i, d) = -1;
    }
    RationalMatrix ker = nullspace_basis(m);
    if (ker.cols() != 1) return std::nullopt;
    std::vector<Rational> c(d);
    for (int j = 0; j < d; ++j) c[j] = ker.at(j, 0);
    bool all_zero = true;
    for (const auto& x : c)
        if (x != 0) { all_zero = false; break; }
    if (all_zero) return std::nullopt; // degenerate: c = 0
    return std::make_pair(c, ker.at(d, 0));
}

} // namespace

std::vector<std::vector<int>> brute_force_facets(const VPolytope& q, const OracleBudget& budget) {
    const int m = q.size(), d = q.ambient_dim();
    if (m <= d) throw std::runtime_error("brute_force_facets: too few points");
    if (binom_capped(m, d, budget.subset_budget) > budget.subset_budget)
        throw std::runtime_error("brute_force_facets: subset budget exceeded");

    // duplicate rows are rejected, not repaired
    {
        std::set<std::vector<Rational>> rows;
        for (int i = 0; i < m; ++i)
            if (!rows.insert(q.v.row(i)).second)
                throw std::runtime_error("brute_force_facets: duplicate points");
    }
    {
        RationalMatrix hom(m, d + 1);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < d; ++j) hom.at(i, j) = q.v.at(i, j);
            hom.at(i, d) = 1;
        }
        if (rank(hom) != d + 1)
            throw std::runtime_error("brute_force_facets: dimension-deficient input");
    }

    std::set<std::vector<int>> facets;
    for_each_subset(m, d, [&](const std::vector<int>& idx) {
        auto h = hyperplane_through(q.v, idx);
        if (!h) return true;
        const auto& [c, beta] = *h;
        // One-sided test with early exit; incidences collected on success.
        int side = 0;
        std::vector<int> on;
        for (int i = 0; i < m; ++i) {
            Rational s = dot(c, q.v.row(i)) - beta;
            int sg = sign_of(s);
            if (sg == 0) {
                on.push_back(i);
            } else if (side == 0) {
                side = sg;
            } else if (sg != side) {
                return true; // points on both sides: not a facet hyperplane
            }
        }
        if (side != 0) facets.insert(std::move(on));
        return true;
    });
    return {facets.begin(), facets.end()};
}

bool is_face_of(const VPolytope& q, const std::vector<int>& s) {
    const int m = q.size(), d = q.ambient_dim();
    std::vector<bool> in_s(m, false);
    for (int i : s) in_s[i] = true;
    // find (c, beta): c.v_i = beta on S, c.v_j <= beta - 1 off S
    int n_eq = static_cast<int>(s.size());
    RationalMatrix aeq(n_eq, d + 1);
    std::vector<Rational> beq(n_eq, Rational(0));
    for (int i = 0; i < n_eq; ++i) {
        for (int j = 0; j < d; ++j) aeq.at(i, j) = q.v.at(s[i], j);
        aeq.at(i, d) = -1;
    }
    int n_le = m - n_eq;
    RationalMatrix ale(n_le, d + 1);
    std::vector<Rational> ble(n_le, Rational(-1));
    int r = 0;
    for (int i = 0; i < m; ++i) {
        if (in_s[i]) continue;
        for (int j = 0; j < d; ++j) ale.at(r, j) = q.v.at(i, j);
        ale.at(r, d) = -1;
        ++r;
    }
    return lp_feasible_general(aeq, beq, ale, ble).feasible;
}

bool is_extreme_point(const VPolytope& q, int i) {
    const int m = q.size(), d = q.ambient_dim();
    if (m == 1) return true;
    // v_i = sum alpha_j v_j, sum alpha_j = 1, alpha >= 0 over j != i
    RationalMatrix a(d + 1, m - 1);
    std::vector<Rational> b(d + 1);
    int col = 0;
    for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        for (int r = 0; r < d; ++r) a.at(r, col) = q.v.at(j, r);
        a.at(d, col) = 1;
        ++col;
    }
    for (int r = 0; r < d; ++r) b[r] = q.v.at(i, r);
    b[d] = 1;
    return !lp_feasible_eq_nonneg(a, b).feasible;
}

FacePolynomial interval_poly() { return {Integer(2), Integer(1)}; }

FacePolynomial polygon_poly(int m) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("polygon_poly: m must be even, >= 4");
    return {Integer(m), Integer(m), Integer(1)};
}

FVector product_fvector(const std::vector<FacePolynomial>& factors) {
    FacePolynomial prod{Integer(1)};
    for (const auto& f : factors) {
        for (const auto& c : f)
            if (c < 0) throw std::invalid_argument("product_fvector: negative coefficient");
        FacePolynomial next(prod.size() + f.size() - 1, Integer(0));
        for (size_t i = 0; i < prod.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
        prod = std::move(next);
    }
    FVector out;
    out.counts.assign(prod.begin(), prod.end() - 1); // drop the improper top face
    return out;
}

Rational fatness(const FVector& f) {
    if (f.dim() != 4) throw std::invalid_argument("fatness: defined for 4-dimensional f-vectors");
    Rational num = Rational(f.counts[1]) + Rational(f.counts[2]) - 20;
    Rational den = Rational(f.counts[0]) + Rational(f.counts[3]) - 10;
    if (den == 0) {
        // both terms vanish exactly on the 4-simplex; its fatness is 0
        if (num == 0) return 0;
        throw std::invalid_argument("fatness: zero denominator");
    }
    return num / den;
}

} // namespace polyproj
