#include "polyproj/project.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace polyproj {

PreservationReport is_preserved(const HPolytope& p, const std::vector<int>& tight_rows, int d) {
    if (tight_rows.empty()) throw std::invalid_argument("is_preserved: empty equality set");
    if (d >= p.ambient_dim()) throw std::invalid_argument("is_preserved: d must be < ambient dim");
    int cols = p.ambient_dim() - d;
    RationalMatrix trunc = p.a.slice(tight_rows, 0, cols);
    auto [dep, cert] = positively_dependent(trunc);
    PreservationReport rep;
    rep.certificate = cert;
    if (!dep) {
        rep.preserved = false;
        return rep;
    }
    if (rank(trunc) == cols) {
        rep.preserved = true;
        return rep;
    }
    rep.preserved = false;
    RationalMatrix ker = nullspace_basis(trunc);
    rep.rank_defect = ker.col(0);
    return rep;
}

bool verify_preservation_report(const HPolytope& p, const std::vector<int>& tight_rows, int d,
                                const PreservationReport& rep) {
    int cols = p.ambient_dim() - d;
    RationalMatrix trunc = p.a.slice(tight_rows, 0, cols);
    bool dep = rep.certificate.kind == SpanCertificate::Kind::DependentWithCoefficients;
    if (!verify_certificate(trunc, dep, rep.certificate)) return false;
    if (rep.preserved) return dep && !rep.rank_defect && rank(trunc) == cols;
    if (!dep) return true;
    // dependent but claimed not preserved: the kernel witness must be real
    if (!rep.rank_defect) return false;
    const auto& z = *rep.rank_defect;
    if (static_cast<int>(z.size()) != cols) return false;
    bool nonzero = false;
    for (const auto& x : z)
        if (x != 0) nonzero = true;
    if (!nonzero) return false;
    for (const auto& v : mat_vec(trunc, z))
        if (v != 0) return false;
    return true;
}

LexDropTable::LexDropTable(int dim, int n_points) : dim_(dim), n_(n_points) {
    by_p_.resize(p_max());
    for (int p = 1; p <= p_max(); ++p) {
        for (const auto& cof : lex_pyramid_cofacets_cyclic(dim_, n_, p)) {
            std::vector<int> zeros;
            for (int i = 0; i <= n_; ++i)
                if (cof[i] == 0) zeros.push_back(i);
            by_p_[p - 1].insert(std::move(zeros));
        }
    }
}

LexDropTable::LexDropTable(const GaleConfiguration& q_gale, const VPolytope* coords)
    : dim_(q_gale.source_dim), n_(q_gale.points()) {
    by_p_.resize(p_max());
    for (int p = 1; p <= p_max(); ++p) {
        // halve eps (heights profile and stacking row together) until the
        // facet family is stable under one more halving
        Rational eps(1, 2);
        auto family_at = [&](const Rational& e) {
            return facets_from_gale(heights_gale(q_gale, lex_heights(dim_, n_, p, e), e));
        };
        std::vector<std::vector<int>> fam, next;
        for (int t = 0; t < 40; ++t, eps /= 2) {
            fam = family_at(eps);
            next = family_at(eps / 2);
            if (fam == next) break;
        }
        if (fam != next) throw std::runtime_error("LexDropTable: eps stabilization failed");
        if (coords) {
            HeightVector w = lex_heights(dim_, n_, p, eps);
            auto cells = regular_subdivision(*coords, w);
            std::set<std::vector<int>> from_gale;
            for (const auto& cof : fam) {
                if (cof[0] != 0) { // cell: apex not on the facet
                    std::vector<int> zeros;
                    for (int i = 1; i <= n_; ++i)
                        if (cof[i] == 0) zeros.push_back(i - 1);
                    from_gale.insert(std::move(zeros));
                }
            }
            std::set<std::vector<int>> oracle(cells.begin(), cells.end());
            if (from_gale != oracle)
                throw std::runtime_error("LexDropTable: stacked Gale cells disagree with the lifted hull");
        }
        for (const auto& cof : fam) {
            std::vector<int> zeros;
            for (int i = 0; i <= n_; ++i)
                if (cof[i] == 0) zeros.push_back(i);
            by_p_[p - 1].insert(std::move(zeros));
        }
    }
}

bool LexDropTable::is_facet(int p, const std::vector<int>& dropped_sorted) const {
    if (p < 1 || p > p_max()) throw std::invalid_argument("LexDropTable: p out of range");
    return by_p_[p - 1].count(dropped_sorted) > 0;
}

namespace {

Sign flip(Sign s) {
    return s == Sign::Plus ? Sign::Minus : (s == Sign::Minus ? Sign::Plus : Sign::Zero);
}

// First trigger position (1-based) among coordinates [0, window), zeros
// treated as the non-trigger sign; window + 1 when absent.
int scan_trigger(const std::function<Sign(int)>& sign_at, int window, TriggerSign trigger) {
    Sign want = trigger == TriggerSign::Plus ? Sign::Plus : Sign::Minus;
    for (int c = 0; c < window; ++c)
        if (sign_at(c) == want) return c + 1;
    return window + 1;
}

// The fold table on polygon vertices.
std::pair<Sign, Sign> vertex_fold(int e, int o, int m) {
    if (e == 0) return {Sign::Minus, o == 1 ? Sign::Plus : Sign::Minus};
    int d = (o - e + m) % m;
    return {Sign::Plus, d == m - 1 ? Sign::Plus : Sign::Minus}; // o = e-1 : o = e+1
}

// Lexicographically smallest vertex of the face: per factor the smallest
// valid (e, o) completion.
PolygonLabel canonical_vertex_fill(const PolygonLabel& face, int m) {
    PolygonLabel v = face;
    for (auto& [e, o] : v.pairs) {
        if (e != kStar && o != kStar) continue;
        if (e == kStar && o == kStar) {
            e = 0;
            o = 1;
        } else if (e == kStar) {
            e = (o == 1 || o == m - 1) ? 0 : o - 1;
        } else {
            o = (e == 0) ? 1 : e - 1;
        }
    }
    return v;
}

void check_ncp_params(int n, int d) {
    if (d < 3 || d > n)
        throw std::invalid_argument("facet criterion: need 3 <= d <= n (d = 2 is served geometrically)");
    if (d == 3 && n > 3)
        throw std::invalid_argument("facet criterion: no neighborly 1-polytope on more than 2 vertices");
}

} // namespace

std::vector<CubicalGalePattern> cubical_gale_facets(int n, int d, TriggerSign trigger) {
    check_ncp_params(n, d);
    if (n > 16) throw std::invalid_argument("cubical_gale_facets: enumeration budget exceeded");
    LexDropTable table(d - 2, n - 1);
    const int window = n - d;
    std::vector<CubicalGalePattern> out;

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
            for (int z : zeros) pat[z] = Sign::Zero;
            Sign fill = trigger == TriggerSign::Plus ? Sign::Minus : Sign::Plus;
            int p = scan_trigger([&](int c) { return is_zero[c] ? fill : pat[c]; }, window, trigger);
            if (!table.is_facet(p, zeros)) continue;
            CubicalGalePattern g;
            g.entries = pat;
            g.first_zero = zeros[0];
            g.prefix_minus = std::max(0, zeros[0] - 1);
            if (zeros[0] >= 1) g.s = pat[zeros[0] - 1];
            g.alpha.assign(pat.begin() + zeros[0] + 1, pat.end());
            out.push_back(std::move(g));
        }
        return true;
    });
    std::sort(out.begin(), out.end(), [](const CubicalGalePattern& a, const CubicalGalePattern& b) {
        return sign_vector_less(a.entries, b.entries);
    });
    return out;
}

SignVector fold(const PolygonLabel& label, int m) {
    SignVector out;
    out.reserve(2 * label.factors());
    for (const auto& [e, o] : label.pairs) {
        std::vector<std::pair<int, int>> verts;
        if (e != kStar && o != kStar) {
            verts = {{e, o}};
        } else if (o != kStar) {
            verts = {{o - 1, o}, {(o + 1) % m, o}};
        } else if (e != kStar) {
            verts = {{e, (e + m - 1) % m}, {e, e + 1}};
        } else {
            // whole polygon: the join over all vertices is (0, 0)
            out.push_back(Sign::Zero);
            out.push_back(Sign::Zero);
            continue;
        }
        Sign s1 = Sign::Zero, s2 = Sign::Zero;
        bool first = true;
        for (const auto& [ve, vo] : verts) {
            auto [a, b] = vertex_fold(ve, vo, m);
            if (first) {
                s1 = a;
                s2 = b;
                first = false;
            } else {
                if (a != s1) s1 = Sign::Zero;
                if (b != s2) s2 = Sign::Zero;
            }
        }
        out.push_back(s1);
        out.push_back(s2);
    }
    return out;
}

int vertex_figure_index_cube(const SignVector& v, int n, int d, TriggerSign trigger) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vertex_figure_index: size");
    for (Sign s : v)
        if (s == Sign::Zero) throw std::invalid_argument("vertex_figure_index: not a vertex label");
    return scan_trigger([&](int c) { return v[c]; }, n - d, trigger);
}

int vertex_figure_index_dpp(const PolygonLabel& v, int r, int m, int d, TriggerSign trigger) {
    if (v.factors() != r || v.stars() != 0)
        throw std::invalid_argument("vertex_figure_index: not a vertex label");
    SignVector phi;
    phi.reserve(2 * r);
    for (const auto& [e, o] : v.pairs) {
        auto [a, b] = vertex_fold(e, o, m);
        phi.push_back(a);
        phi.push_back(b);
    }
    return scan_trigger([&](int c) { return phi[c]; }, 2 * r - d, trigger);
}

namespace {

// Enumerates face labels of the r-fold m-gon product with a given number of
// stars, in canonical order.
void enumerate_labels(int r, int m, int stars,
                      const std::function<void(const PolygonLabel&)>& emit) {
    std::vector<std::vector<std::pair<int, int>>> by_dim(3);
    for (int e = 0; e < m; e += 2) {
        by_dim[0].emplace_back(e, (e + m - 1) % m);
        by_dim[0].emplace_back(e, e + 1);
        by_dim[1].emplace_back(e, kStar);
    }
    for (int o = 1; o < m; o += 2) by_dim[1].emplace_back(kStar, o);
    by_dim[2].emplace_back(kStar, kStar);
    for (auto& v : by_dim) std::sort(v.begin(), v.end());

    PolygonLabel cur;
    cur.pairs.resize(r);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == r) {
            if (left == 0) emit(cur);
            return;
        }
        for (int dim = 0; dim <= std::min(2, left); ++dim) {
            if (left - dim > 2 * (r - k - 1)) continue;
            for (const auto& pr : by_dim[dim]) {
                cur.pairs[k] = pr;
                rec(k + 1, left - dim);
            }
        }
    };
    rec(0, stars);
}

} // namespace

std::vector<PolygonLabel> pdpp_facets(int r, int m, int d, TriggerSign trigger) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("pdpp_facets: m must be even, >= 4");
    if (d > 2 * r) throw std::invalid_argument("pdpp_facets: need d <= 2r");
    check_ncp_params(2 * r, d);
    {
        FVector all = product_fvector(std::vector<FacePolynomial>(r, polygon_poly(m)));
        if (all.counts[d - 1] > 2'000'000)
            throw std::invalid_argument("pdpp_facets: enumeration budget exceeded; use the DP mode");
    }
    LexDropTable table(d - 2, 2 * r - 1);
    const int window = 2 * r - d;
    std::vector<PolygonLabel> out;

    enumerate_labels(r, m, d - 1, [&](const PolygonLabel& beta) {
        std::vector<int> dropped;
        for (int k = 0; k < r; ++k) {
            if (beta.pairs[k].first == kStar) dropped.push_back(2 * k);
            if (beta.pairs[k].second == kStar) dropped.push_back(2 * k + 1);
        }
        PolygonLabel filled = canonical_vertex_fill(beta, m);
        SignVector phi;
        for (const auto& [e, o] : filled.pairs) {
            auto [a, b] = vertex_fold(e, o, m);
            phi.push_back(a);
            phi.push_back(b);
        }
        int p = scan_trigger([&](int c) { return phi[c]; }, window, trigger);
        if (table.is_facet(p, dropped)) out.push_back(beta);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CubeFacePreservation> ncp_preservation_scan(const NcpInstance& inst, int k) {
    const int n = inst.spec.n, d = inst.spec.d;
    if (k < 0 || k > d - 1) throw std::invalid_argument("ncp_preservation_scan: k out of range");
    std::vector<CubeFacePreservation> out;
    for_each_subset(n, k, [&](const std::vector<int>& zeros) {
        std::vector<bool> is_zero(n, false);
        for (int z : zeros) is_zero[z] = true;
        std::vector<int> signed_pos;
        for (int c = 0; c < n; ++c)
            if (!is_zero[c]) signed_pos.push_back(c);
        int free = static_cast<int>(signed_pos.size());
        SignVector face(n, Sign::Zero);
        for (unsigned long mask = 0; mask < (1UL << free); ++mask) {
            for (int i = 0; i < free; ++i)
                face[signed_pos[i]] = (mask & (1UL << i)) ? Sign::Plus : Sign::Minus;
            for (int z : zeros) face[z] = Sign::Zero;
            out.push_back({face, is_preserved(inst.system, cube_tight_rows(n, face), d)});
        }
        return true;
    });
    std::sort(out.begin(), out.end(), [](const CubeFacePreservation& a, const CubeFacePreservation& b) {
        return sign_vector_less(a.face, b.face);
    });
    return out;
}

std::vector<DppFacePreservation> dpp_preservation_scan(const DppInstance& inst, int k) {
    const int r = inst.spec.r, m = inst.spec.m, d = inst.spec.d;
    if (k < 0 || k > d - 1) throw std::invalid_argument("dpp_preservation_scan: k out of range");
    std::vector<DppFacePreservation> out;
    enumerate_labels(r, m, k, [&](const PolygonLabel& face) {
        out.push_back({face, is_preserved(inst.system, dpp_tight_rows(r, m, face), d)});
    });
    std::sort(out.begin(), out.end(), [](const DppFacePreservation& a, const DppFacePreservation& b) {
        return a.face < b.face;
    });
    return out;
}

std::vector<SignVector> preserved_k_faces(const NcpInstance& inst, int k) {
    std::vector<SignVector> out;
    for (auto& fp : ncp_preservation_scan(inst, k))
        if (fp.report.preserved) out.push_back(fp.face);
    return out;
}

std::vector<PolygonLabel> preserved_k_faces(const DppInstance& inst, int k) {
    std::vector<PolygonLabel> out;
    for (auto& fp : dpp_preservation_scan(inst, k))
        if (fp.report.preserved) out.push_back(fp.face);
    return out;
}

namespace {

AllStrictReport all_strict_impl(const HPolytope& system, int cols,
                                const std::vector<std::vector<int>>& vertex_rows,
                                const std::vector<std::string>& names) {
    std::map<RationalMatrix, int> classes;
    for (size_t i = 0; i < vertex_rows.size(); ++i)
        classes.emplace(system.a.slice(vertex_rows[i], 0, cols), static_cast<int>(i));
    for (const auto& [mat, idx] : classes) {
        if (!general_position_linear(mat)) {
            AllStrictReport rep;
            rep.ok = false;
            rep.failing = "vertex " + names[idx];
            return rep;
        }
    }
    return {true, ""};
}

} // namespace

AllStrictReport all_strict_condition(const NcpInstance& inst) {
    const int n = inst.spec.n, d = inst.spec.d;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> names;
    for (const auto& v : cube_vertex_labels(n)) {
        rows.push_back(cube_tight_rows(n, v));
        names.push_back(sign_string(v));
    }
    return all_strict_impl(inst.system, n - d, rows, names);
}

AllStrictReport all_strict_condition(const DppInstance& inst) {
    const int r = inst.spec.r, m = inst.spec.m, d = inst.spec.d;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> names;
    for (const auto& v : dpp_vertex_labels(r, m)) {
        rows.push_back(dpp_tight_rows(r, m, v));
        names.push_back(polygon_label_string(v));
    }
    return all_strict_impl(inst.system, 2 * r - d, rows, names);
}

namespace {

template <typename Projected, typename Labels, typename PointFn>
void project_common(Projected& out, const Labels& labels, int d, const PointFn& point_of) {
    out.labels = labels;
    out.points.reserve(labels.size());
    std::map<std::vector<Rational>, int> index;
    std::vector<std::vector<Rational>> distinct;
    for (const auto& l : labels) {
        std::vector<Rational> x = point_of(l);
        std::vector<Rational> proj(x.end() - d, x.end());
        out.points.push_back(std::move(x));
        index.emplace(proj, 0);
        distinct.push_back(proj);
    }
    int i = 0;
    for (auto& [pt, idx] : index) idx = i++; // sorted order
    if (index.size() != labels.size())
        throw std::runtime_error("projection: vertices are not distinct");
    out.projected.v = RationalMatrix(static_cast<int>(index.size()), d);
    for (const auto& [pt, idx] : index) out.projected.v.set_row(idx, pt);
    out.label_index.resize(labels.size());
    for (size_t k = 0; k < labels.size(); ++k) out.label_index[k] = index.at(distinct[k]);
}

} // namespace

ProjectedNcp project_ncp(const NcpInstance& inst) {
    ProjectedNcp out;
    out.inst = &inst;
    project_common(out, cube_vertex_labels(inst.spec.n), inst.spec.d,
                   [&](const SignVector& v) { return cube_vertex_point(inst.spec, v); });
    return out;
}

ProjectedDpp project_dpp(const DppInstance& inst) {
    ProjectedDpp out;
    out.inst = &inst;
    project_common(out, dpp_vertex_labels(inst.spec.r, inst.spec.m), inst.spec.d,
                   [&](const PolygonLabel& v) { return dpp_vertex_point(inst.spec, v); });
    return out;
}

int ProjectedNcp::index_of(const SignVector& v) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), v, sign_vector_less);
    if (it == labels.end() || *it != v) throw std::invalid_argument("unknown vertex label");
    return label_index[it - labels.begin()];
}

std::vector<int> ProjectedNcp::face_vertex_indices(const SignVector& face) const {
    std::vector<int> zeros;
    for (int c = 0; c < static_cast<int>(face.size()); ++c)
        if (face[c] == Sign::Zero) zeros.push_back(c);
    std::vector<int> idx;
    SignVector v = face;
    for (unsigned long mask = 0; mask < (1UL << zeros.size()); ++mask) {
        for (size_t i = 0; i < zeros.size(); ++i)
            v[zeros[i]] = (mask & (1UL << i)) ? Sign::Plus : Sign::Minus;
        idx.push_back(index_of(v));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

int ProjectedDpp::index_of(const PolygonLabel& v) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || !(*it == v)) throw std::invalid_argument("unknown vertex label");
    return label_index[it - labels.begin()];
}

std::vector<int> ProjectedDpp::face_vertex_indices(const PolygonLabel& face) const {
    const int m = inst->spec.m;
    // per-factor vertex completions
    std::vector<std::vector<std::pair<int, int>>> options(face.factors());
    for (int k = 0; k < face.factors(); ++k) {
        auto [e, o] = face.pairs[k];
        if (e != kStar && o != kStar) {
            options[k] = {{e, o}};
        } else if (e != kStar) {
            options[k] = {{e, (e + m - 1) % m}, {e, e + 1}};
        } else if (o != kStar) {
            options[k] = {{(o == 1) ? 0 : o - 1, o}, {(o == m - 1) ? 0 : o + 1, o}};
        } else {
            for (int ee = 0; ee < m; ee += 2) {
                options[k].emplace_back(ee, (ee + m - 1) % m);
                options[k].emplace_back(ee, ee + 1);
            }
        }
    }
    std::vector<int> idx;
    PolygonLabel v = face;
    std::function<void(int)> rec = [&](int k) {
        if (k == face.factors()) {
            idx.push_back(index_of(v));
            return;
        }
        for (const auto& pr : options[k]) {
            v.pairs[k] = pr;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

FVector projected_fvector_ncp(int n, int d) {
    if (d != 4) throw std::invalid_argument("projected_fvector_ncp: d = 4 required");
    if (n > 16) throw std::invalid_argument("projected_fvector_ncp: enumeration budget exceeded");
    FVector f;
    f.counts.resize(4);
    f.counts[0] = Integer(1) << n;
    f.counts[1] = Integer(n) * (Integer(1) << (n - 1));
    f.counts[3] = static_cast<long>(cubical_gale_facets(n, d).size());
    f.counts[2] = f.counts[1] + f.counts[3] - f.counts[0];
    return f;
}

FVector projected_fvector_pdpp(int r, int m, int d, bool use_dp) {
    if (d != 4) throw std::invalid_argument("projected_fvector_pdpp: d = 4 required");
    FVector f;
    f.counts.resize(4);
    Integer mr = 1;
    for (int i = 0; i < r; ++i) mr *= m;
    f.counts[0] = mr;
    f.counts[1] = Integer(r) * mr;
    if (use_dp) {
        f.counts[3] = pdpp_facet_count_dp(r, m);
    } else {
        if (r > 6 || m > 64)
            throw std::invalid_argument(
                "projected_fvector_pdpp: enumeration budget exceeded; use the DP mode");
        f.counts[3] = static_cast<long>(pdpp_facets(r, m, d).size());
    }
    f.counts[2] = f.counts[1] + f.counts[3] - f.counts[0];
    return f;
}

Integer pdpp_facet_count_dp(int r, int m) {
    if (r < 2 || m < 4 || m % 2 != 0)
        throw std::invalid_argument("pdpp_facet_count_dp: need r >= 2, even m >= 4");
    const Integer H = m / 2;
    std::vector<Integer> powm(r + 1);
    powm[0] = 1;
    for (int i = 1; i <= r; ++i) powm[i] = powm[i - 1] * m;
    auto mp = [&](int e) -> Integer { return e >= 0 ? powm[e] : Integer(0); };

    Integer total = 0;
    // pyramid-type facets: the apex row is freed together with an edge of Q
    total += Integer(r - 1) * H * mp(r - 2); // P1: within-factor edge pairs
    total += H * mp(r - 2);                  // P2a: edge {v1, v2}
    if (r >= 3) total += Integer(r - 2) * H * H * H * mp(r - 3); // P2b: straddling pairs
    total += H * mp(r - 2);                  // P3: the wrap edge
    // pushing cells: {v_j, v_{j+1}, v_last}, j before the pulled index
    for (int k = 1; k <= r - 2; ++k) total += H * mp(r - 2 - k);          // j = 2k
    for (int k = 0; k <= r - 3; ++k) total += H * H * mp(r - 3 - k);      // j = 2k+1
    // pulling cells at p: {v_p, v_i, v_{i+1}}
    for (int k = 0; k <= r - 3; ++k) {                                    // p = 2k+1
        Integer inner = Integer(r - 1 - k) * mp(r - k - 2);
        if (r - 2 - k > 0) inner += Integer(r - 2 - k) * H * H * mp(r - k - 3);
        total += (H - 1) * inner;
    }
    for (int k = 1; k <= r - 2; ++k) {                                    // p = 2k
        Integer inner = H * mp(r - k - 2);                                // adjacent pair
        inner += Integer(r - 1 - k) * H * mp(r - k - 2);
        if (r - 2 - k > 0) inner += Integer(r - 2 - k) * H * H * H * mp(r - k - 3);
        total += inner;
    }
    total += H; // pulled-at-default simplex cell
    return total;
}

std::vector<SweepRow> fatness_sweep(int max_m, int max_r) {
    std::vector<SweepRow> out;
    for (int m = 4; m <= max_m; m *= 2) {
        for (int r = 4; r <= max_r; r *= 2) {
            SweepRow row;
            row.m = m;
            row.r = r;
            row.f = projected_fvector_pdpp(r, m, 4, true);
            row.fat = fatness(row.f);
            out.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace polyproj
