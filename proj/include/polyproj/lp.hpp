#pragma once

#include "polyproj/matrix.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace polyproj {

/// Certificate attached to a positive-dependence decision. Exactly one of
/// the two kinds is produced (Stiemke alternative):
///  - DependentWithCoefficients: lambda with every entry >= 1 and
///    G^T lambda = 0;
///  - InfeasibleWitness: y with G y >= 0 componentwise and G y != 0.
struct SpanCertificate {
    enum class Kind { DependentWithCoefficients, InfeasibleWitness };
    Kind kind;
    std::vector<Rational> coefficients; // lambda (dependent case)
    std::vector<Rational> witness;      // y (witness case)
};

/// Result of a Phase-I feasibility run on { x >= 0 : A x = b }.
struct FeasibilityResult {
    bool feasible;
    std::vector<Rational> point;  // x with A x = b, x >= 0 (feasible case)
    std::vector<Rational> farkas; // y with y^T A <= 0, y^T b > 0 (infeasible case)
};

/// Exact-rational Phase-I simplex with Bland's pivoting rule. Deterministic;
/// terminates on every input.
FeasibilityResult lp_feasible_eq_nonneg(const RationalMatrix& a,
                                        const std::vector<Rational>& b);

/// Feasibility of { x free : aeq x = beq, ale x <= ble } via the standard
/// split/slack reduction. Returns a feasible point when one exists.
FeasibilityResult lp_feasible_general(const RationalMatrix& aeq,
                                      const std::vector<Rational>& beq,
                                      const RationalMatrix& ale,
                                      const std::vector<Rational>& ble);

/// Rows of g positively dependent: exists lambda >= 1 with g^T lambda = 0.
/// The scale-invariance of positive dependence makes ">= 1" equivalent to
/// "> 0". Requires at least one row.
std::pair<bool, SpanCertificate> positively_dependent(const RationalMatrix& g);

/// Positively dependent and of full column rank.
bool positively_spanning(const RationalMatrix& g);

/// Every k-subset of rows has rank k (k = cols). Checked by exact
/// determinants over all k-subsets; requires rows >= cols.
bool general_position_linear(const RationalMatrix& g);

/// Re-checks a certificate against g from scratch. `dependent` is the
/// decision the certificate is supposed to support.
bool verify_certificate(const RationalMatrix& g, bool dependent,
                        const SpanCertificate& cert);

/// Visits all k-subsets of {0..n-1} in lexicographic order; stops early when
/// the visitor returns false. Returns false iff stopped early.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

} // namespace polyproj
