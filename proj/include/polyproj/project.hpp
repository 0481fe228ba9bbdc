#pragma once

#include "polyproj/deformed.hpp"

#include <optional>
#include <set>

namespace polyproj {

/// Preservation decision for one face under the projection to the last d
/// coordinates, with the certificate for the positive-dependence part. When
/// the truncated rows are dependent but rank-deficient, rank_defect holds a
/// nonzero vector in their common kernel.
struct PreservationReport {
    bool preserved;
    SpanCertificate certificate;
    std::optional<std::vector<Rational>> rank_defect;
};

/// Projection Lemma test: the face with equality set `tight_rows` is
/// strictly preserved by pi_d iff the first (ambient - d) columns of its
/// tight rows are positively spanning.
PreservationReport is_preserved(const HPolytope& p, const std::vector<int>& tight_rows, int d);

/// Independent re-check of a report from scratch.
bool verify_preservation_report(const HPolytope& p, const std::vector<int>& tight_rows, int d,
                                const PreservationReport& rep);

/// Sign convention for the vertex-figure trigger, resolved by calibration
/// against the hull oracle and frozen in the acceptance tests.
enum class TriggerSign { Plus, Minus };

/// Facet vertex sets of the lexicographic pyramids L_p(Q), indexed by p,
/// used as the droppability table behind all combinatorial facet criteria:
/// a face is preserved iff the rows its label frees form a facet of
/// L_p(Q) for the (any) vertex it contains.
class LexDropTable {
  public:
    /// Q = cyc_D(N) in standard vertex order; explicit construction.
    LexDropTable(int dim, int n_points);
    /// General Q from its normalized Gale configuration, via stacked-height
    /// Gale transforms with eps stabilized by halving. When coordinates are
    /// supplied the cells are cross-checked against the lifted-hull oracle.
    LexDropTable(const GaleConfiguration& q_gale, const VPolytope* coords);

    bool is_facet(int p, const std::vector<int>& dropped_sorted) const;
    int p_max() const { return n_ - dim_; } // the all-pushed default index
    int rows() const { return n_ + 1; }     // apex + N points

  private:
    int dim_, n_;
    std::vector<std::set<std::vector<int>>> by_p_;
};

/// Facet pattern of a projected deformed cube: a sign vector with d-1
/// zeros, shaped (-, ..., -, s, 0, alpha) with the first zero at position
/// first_zero (0-based).
struct CubicalGalePattern {
    SignVector entries;
    int first_zero;
    int prefix_minus;      // leading '-' entries before s
    std::optional<Sign> s; // entry right before the first zero, when any
    SignVector alpha;      // entries after the first zero
};

/// All facet patterns of the projection of a deformed n-cube over
/// Q = cyc_{d-2}(n-1), canonically sorted. Requires d >= 3 (and d >= 4
/// unless n == d; there is no neighborly 1-polytope on more than two
/// vertices). The plane case d = 2 is served geometrically.
std::vector<CubicalGalePattern> cubical_gale_facets(int n, int d,
                                                    TriggerSign trigger = TriggerSign::Plus);

/// Rank- and order-preserving folding map onto the 2-cube poset, extended
/// from the vertex table by least upper bounds, factor by factor.
SignVector fold(const PolygonLabel& label, int m);

/// Index p of the lexicographic pyramid isomorphic to the vertex figure:
/// first trigger sign in the height-support window, default = all-pushed.
int vertex_figure_index_cube(const SignVector& v, int n, int d,
                             TriggerSign trigger = TriggerSign::Plus);
int vertex_figure_index_dpp(const PolygonLabel& v, int r, int m, int d,
                            TriggerSign trigger = TriggerSign::Plus);

/// All (d-1)-face labels of the r-fold product of m-gons that project to
/// facets, for Q = cyc_{d-2}(2r-1) in standard order; canonically sorted.
std::vector<PolygonLabel> pdpp_facets(int r, int m, int d,
                                      TriggerSign trigger = TriggerSign::Plus);

/// All k-face labels of the product whose preservation report is positive,
/// decided by the Projection Lemma LP on the calibrated system.
struct CubeFacePreservation {
    SignVector face;
    PreservationReport report;
};
struct DppFacePreservation {
    PolygonLabel face;
    PreservationReport report;
};
std::vector<CubeFacePreservation> ncp_preservation_scan(const NcpInstance& inst, int k);
std::vector<DppFacePreservation> dpp_preservation_scan(const DppInstance& inst, int k);
std::vector<SignVector> preserved_k_faces(const NcpInstance& inst, int k);
std::vector<PolygonLabel> preserved_k_faces(const DppInstance& inst, int k);

/// All-strict condition: at every vertex the truncated tight-row matrix is
/// in general position w.r.t. linear hyperplanes, so every face of the
/// projection is the image of a preserved face.
struct AllStrictReport {
    bool ok;
    std::string failing;
};
AllStrictReport all_strict_condition(const NcpInstance& inst);
AllStrictReport all_strict_condition(const DppInstance& inst);

/// Calibrated instance with its exact projected vertices. Projected rows
/// are sorted; labels map to row indices.
struct ProjectedNcp {
    const NcpInstance* inst;
    std::vector<SignVector> labels;
    std::vector<std::vector<Rational>> points; // full-dimensional vertices
    VPolytope projected;                       // distinct projected points, sorted
    std::vector<int> label_index;              // label position -> projected row

    int index_of(const SignVector& v) const;
    std::vector<int> face_vertex_indices(const SignVector& face) const;
};
struct ProjectedDpp {
    const DppInstance* inst;
    std::vector<PolygonLabel> labels;
    std::vector<std::vector<Rational>> points;
    VPolytope projected;
    std::vector<int> label_index;

    int index_of(const PolygonLabel& v) const;
    std::vector<int> face_vertex_indices(const PolygonLabel& face) const;
};
ProjectedNcp project_ncp(const NcpInstance& inst);
ProjectedDpp project_dpp(const DppInstance& inst);

/// f-vector of the projection for d = 4: f0, f1 from the preserved product
/// skeleton, f3 by facet counting (enumeration, or the transfer DP for
/// products of polygons), f2 from the Euler relation.
FVector projected_fvector_ncp(int n, int d);
FVector projected_fvector_pdpp(int r, int m, int d, bool use_dp);

/// Facet count of the d = 4 projected product of r m-gons by class-wise
/// transfer counting over the factor positions; linear in r.
Integer pdpp_facet_count_dp(int r, int m);

struct SweepRow {
    int m, r;
    FVector f;
    Rational fat;
};
/// Fatness sweep over (m, r) = (2^a, 2^b), 4 <= 2^a <= max_m,
/// 4 <= 2^b <= max_r, d = 4, DP-counted.
std::vector<SweepRow> fatness_sweep(int max_m, int max_r);

} // namespace polyproj
