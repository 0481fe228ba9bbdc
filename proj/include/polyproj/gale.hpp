#pragma once

#include "polyproj/polytope.hpp"

namespace polyproj {

/// Gale transform of a point configuration: rows correspond to the points,
/// columns span the orthogonal complement of the homogenized point matrix.
struct GaleConfiguration {
    RationalMatrix g;     // m x (m - D - 1)
    bool normalized;      // top k x k block is the identity
    int source_dim;       // D of the generating configuration

    int points() const { return g.rows(); }
    int corank() const { return g.cols(); }
    /// Bottom D + 1 rows; meaningful in normalized form, where the template
    /// vectors g_1..g_{D+1} live.
    RationalMatrix gbar() const;
};

/// Gale transform of conv(rows of q). Requires at least D + 1 points whose
/// affine hull is all of R^D. With normalized = true the top block is made
/// the identity, which requires the last D + 1 points to be affinely
/// independent; the failing row set is named otherwise.
GaleConfiguration gale_transform(const VPolytope& q, bool normalized);

/// Gale configuration of a 0-dimensional "polytope" on n points: the rows
/// e_1, ..., e_{n-1}, -(1,...,1). Used for projections to the plane.
GaleConfiguration degenerate_point_gale(int n_points);

/// I names a coface: the rows g_i, i in I, are positively dependent, i.e.
/// the complement of I is the vertex set of a face.
bool is_coface(const GaleConfiguration& g, const std::vector<int>& index_set);

/// All cofaces {I : G_I positively dependent}, I over all subsets of the
/// rows (the empty set counts as a coface by convention: the full point set
/// is the improper face). Exponential; guarded for desk scale.
std::vector<std::vector<int>> coface_family(const GaleConfiguration& g);

/// Facets read off a Gale configuration: complements of maximal proper
/// faces, returned as cofacet 0/1 vectors (0 marks a vertex on the facet),
/// canonically sorted.
std::vector<std::vector<int>> facets_from_gale(const GaleConfiguration& g);

/// Moment curve points gamma(t) = (t, t^2, ..., t^D), one row per value.
VPolytope cyclic_polytope(int dim, const std::vector<Rational>& t);
/// Standard order t = 1..n.
VPolytope cyclic_polytope_standard(int dim, int n_points);

/// Gale's evenness criterion: all a in {0,1}^N with exactly D zeros such
/// that #{j < i : a_j = 0} has constant parity over the 1-entries of a.
std::vector<std::vector<int>> gale_evenness_cofacets(int dim, int n_points);

/// Lifting heights. Normalized means the support lies in the first
/// m - D - 1 coordinates.
struct HeightVector {
    std::vector<Rational> w;
    bool normalized = false;
};

/// Subtracts the affine interpolation through the last D + 1 lifted points;
/// the result has support in the first m - D - 1 coordinates.
HeightVector normalize_heights(const VPolytope& q, const std::vector<Rational>& w);

/// Cells of the w-induced regular subdivision of conv(rows of q), via the
/// lifted-hull construction: lift to (w_i, v_i), adjoin a high apex over the
/// barycenter, return the facets of the lifted hull that miss the apex as
/// vertex-index sets. Requires vertices in general position.
std::vector<std::vector<int>> regular_subdivision(const VPolytope& q, const HeightVector& w,
                                                  const OracleBudget& budget = OracleBudget::from_env());

/// Gale transform of the lexicographic-pyramid-style lifted polytope:
/// stacks the row -eps * wbar on top of a normalized configuration. Row 0
/// of the result corresponds to the apex, row i to point i of q.
GaleConfiguration heights_gale(const GaleConfiguration& g, const HeightVector& w,
                               const Rational& eps);

/// Cofacet vectors (length N + 1, position 0 = apex, position i = vertex i)
/// of the k-th lexicographic pyramid over cyc_D(N) in standard vertex
/// order: the first k - 1 vertices pushed, the k-th pulled. k ranges in
/// [1, N - D]; k = N - D is the all-pushed case (the final pull is vacuous
/// on a simplex).
std::vector<std::vector<int>> lex_pyramid_cofacets_cyclic(int dim, int n_points, int k);

/// Heights realizing the k-th lexicographic pyramid under the gap condition
/// |w_{i+1}| <= eps |w_i|: w_i = eps^i for i < k, w_k = -eps^k, zero beyond
/// the support.
HeightVector lex_heights(int dim, int n_points, int k, const Rational& eps);

} // namespace polyproj
