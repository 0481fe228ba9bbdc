#pragma once

#include "polyproj/gale.hpp"

namespace polyproj {

/// phi(x) = c^T x + delta.
struct AffineFunctional {
    std::vector<Rational> c;
    Rational delta;
};

/// General rank-r deformed product of P = P(A,a) and a simple Q = P(B,b)
/// with coupling C: the block lower-triangular system [A 0; C B] with right
/// hand side (a ; M b).
struct DeformedProductSpec {
    HPolytope p;
    HPolytope q;
    RationalMatrix c; // rows(q) x ambient(p)
    Rational m = 1;   // set by calibrate_M
};

HPolytope build_deformed_product(const DeformedProductSpec& spec,
                                 const OracleBudget& budget = OracleBudget::from_env());

/// Smallest M in the doubling sequence 1, 2, 4, ... such that for every
/// vertex v of P the slice P(B, M b - C v) is combinatorially equivalent to
/// Q (equal equality-set families via the vertex oracle). Stores the result
/// in the spec and returns it.
Rational calibrate_M(DeformedProductSpec& spec,
                     const OracleBudget& budget = OracleBudget::from_env());

/// Coupling matrix and right-hand side of the rank-1 deformed product
/// equivalent to the classical two-sided description: C_ij = (b1-b2)_i c_j,
/// b = b1 - delta (b1 - b2).
std::pair<RationalMatrix, std::vector<Rational>> az_rank1_matrix(
    const AffineFunctional& phi, const std::vector<Rational>& b1,
    const std::vector<Rational>& b2);

/// Deformed n-cube over the template: one +/- row pair per coordinate,
/// +-eps on the diagonal, a subdiagonal 1 in both rows of pairs 2..n-d+1,
/// and the rows of gbar in the first n-d columns of the last d-1 pairs.
/// Row order: pair c contributes rows 2c (+) and 2c+1 (-).
struct DeformedCubeSpec {
    int n = 0, d = 0;
    RationalMatrix gbar; // (d-1) x (n-d)
    Rational eps;
    std::vector<Rational> rhs; // 2n, filled by calibration
};

/// Deformed product of r even m-gons over the template: scaled polygon
/// blocks on the diagonal, the cube-style chain couplings on even-local
/// rows, gbar rows on the rows whose cube coordinate lies beyond the chain.
/// Row order: factor k contributes rows k*m .. k*m + m - 1 in polygon order.
struct DppSpec {
    int r = 0, m = 0, d = 0;
    RationalMatrix gbar; // (d-1) x (2r-d)
    Rational eps;
    std::vector<Rational> rhs; // r*m, filled by calibration
};

/// LHS matrix of the deformed cube template (no right-hand side).
RationalMatrix deformed_cube_lhs(int n, int d, const RationalMatrix& gbar, const Rational& eps);

/// Assembled deformed cube with right-hand side calibrated through the
/// iterated-product view (one interval factor at a time).
HPolytope build_deformed_cube(DeformedCubeSpec& spec,
                              const OracleBudget& budget = OracleBudget::from_env());

/// The special even m-gon: a_0 = (-1, 0), a_i = (1, eps (m-2i)/(m-2)),
/// b_i = 1 + (a_i)_y^2, every even-indexed row scaled by eps. Validated to
/// be an irredundant m-gon by the planar vertex oracle.
HPolytope polygon_system(int m, const Rational& eps,
                         const OracleBudget& budget = OracleBudget::from_env());

RationalMatrix dpp_lhs(int r, int m, int d, const RationalMatrix& gbar, const Rational& eps);

HPolytope build_dpp(DppSpec& spec, const OracleBudget& budget = OracleBudget::from_env());

/// All 2^n sign vectors, canonically sorted.
std::vector<SignVector> cube_vertex_labels(int n);
/// All m^r vertex labels of the polygon product, canonically sorted.
std::vector<PolygonLabel> dpp_vertex_labels(int r, int m);

/// Exact vertex for a sign pattern by forward substitution along the
/// template chain; throws when the solution violates some inequality
/// (cannot happen on a calibrated spec).
std::vector<Rational> cube_vertex_point(const DeformedCubeSpec& spec, const SignVector& v);
std::vector<Rational> dpp_vertex_point(const DppSpec& spec, const PolygonLabel& v);

/// Rows tight at the given face label: cube faces pick the signed row of
/// each nonzero coordinate; polygon faces pick the rows of the non-star
/// entries. Order: template row order (the first row is the designated
/// first row of the tight matrix).
std::vector<int> cube_tight_rows(int n, const SignVector& face);
std::vector<int> dpp_tight_rows(int r, int m, const PolygonLabel& face);

/// A calibrated construction plus its Gale data; the result of assembling
/// an NCP or PDPP instance end to end.
struct NcpInstance {
    DeformedCubeSpec spec;
    HPolytope system;
    GaleConfiguration q_gale; // normalized, rows = n - 1
};
struct DppInstance {
    DppSpec spec;
    HPolytope system;
    GaleConfiguration q_gale; // normalized, rows = 2r - 1
};

/// Largest eps = 2^-t (t >= 1) such that at every vertex class (a) the
/// truncated tight rows minus the designated first row have the same coface
/// family as Q's Gale configuration and (b) the full truncated tight matrix
/// is in general position w.r.t. linear hyperplanes. M is re-calibrated
/// inside every trial.
NcpInstance calibrate_ncp(int n, int d, const GaleConfiguration& q_gale,
                          const OracleBudget& budget = OracleBudget::from_env());
DppInstance calibrate_dpp(int r, int m, int d, const GaleConfiguration& q_gale,
                          const OracleBudget& budget = OracleBudget::from_env());

/// Normalized Gale configuration for the auxiliary polytope of an NCP with
/// parameters (n, d): cyc_{d-2}(n-1) for d >= 3, the degenerate point
/// configuration for d = 2.
GaleConfiguration ncp_q_gale(int n, int d);
GaleConfiguration dpp_q_gale(int r, int d);

} // namespace polyproj
