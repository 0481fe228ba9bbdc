#pragma once

#include "polyproj/lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyproj {

/// Oracle budgets. The environment variable POLYPROJ_BUDGET, when set,
/// overrides subset_budget.
struct OracleBudget {
    long long subset_budget = 1'000'000; // max basis subsets / hyperplane subsets
    static OracleBudget from_env();
};

/// Inequality system A x <= b with optional row labels.
struct HPolytope {
    RationalMatrix a;
    std::vector<Rational> b;
    std::vector<std::string> row_labels; // optional, empty or size rows()

    int rows() const { return a.rows(); }
    int ambient_dim() const { return a.cols(); }
    bool contains(const std::vector<Rational>& x) const;
};

/// Rows are vertices.
struct VPolytope {
    RationalMatrix v;

    int size() const { return v.rows(); }
    int ambient_dim() const { return v.cols(); }
};

/// Face of a combinatorial cube: one entry per coordinate, 0 marks a free
/// direction, +/- the tight side. Dimension of the face = number of zeros.
enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };
using SignVector = std::vector<Sign>;

char sign_char(Sign s);
Sign sign_from_char(char c);
std::string sign_string(const SignVector& v);
SignVector sign_vector_parse(const std::string& s);
/// Face order: f <= g iff f agrees with g wherever g is nonzero.
bool cube_face_leq(const SignVector& f, const SignVector& g);
/// Ordering used for canonical output: '-' < '0' < '+' entrywise.
bool sign_vector_less(const SignVector& a, const SignVector& b);

/// Face of a product of even m-gons: one pair per factor. Each pair is
/// (even edge index or kStar, odd edge index or kStar); valid forms are
/// (2i,*), (*,2i+1), (2i,2i+-1 mod m), (*,*).
constexpr int kStar = -1;
struct PolygonLabel {
    std::vector<std::pair<int, int>> pairs;

    int factors() const { return static_cast<int>(pairs.size()); }
    int stars() const;
    bool operator==(const PolygonLabel& other) const { return pairs == other.pairs; }
    bool operator<(const PolygonLabel& other) const { return pairs < other.pairs; }
};
bool polygon_label_valid(const PolygonLabel& l, int m);
std::string polygon_label_string(const PolygonLabel& l);
PolygonLabel polygon_label_parse(const std::string& s);

/// Face counts f_0..f_{d-1} of a d-polytope.
struct FVector {
    std::vector<Integer> counts;
    int dim() const { return static_cast<int>(counts.size()); }
    bool euler_ok() const;
};

/// Solves A_I x = b_I for |I| = dim and returns the solution when it is
/// nonsingular and feasible for the whole system; absent otherwise.
std::optional<std::vector<Rational>> vertex_from_equality_set(const HPolytope& p,
                                                              const std::vector<int>& index_set);

/// All distinct feasible basic solutions, sorted lexicographically.
/// Refuses (throws) when C(rows, dim) exceeds the budget.
VPolytope brute_force_vertices(const HPolytope& p, const OracleBudget& budget = OracleBudget::from_env());

/// Facets of conv(rows of q) as sorted vertex-index sets, complete and
/// canonically sorted; coplanar subsets are merged, so non-simplicial facets
/// appear once. Requires a full-dimensional input without duplicate rows.
std::vector<std::vector<int>> brute_force_facets(const VPolytope& q,
                                                 const OracleBudget& budget = OracleBudget::from_env());

/// True iff the vertex subset S is exactly the vertex set of a face of
/// conv(rows of q), decided by a supporting-hyperplane LP.
bool is_face_of(const VPolytope& q, const std::vector<int>& s);

/// True iff row i of q is not a convex combination of the other rows.
bool is_extreme_point(const VPolytope& q, int i);

/// Face-count polynomial of one product factor, lowest degree first;
/// an interval contributes (2 + t), an m-gon (m + m t + t^2).
using FacePolynomial = std::vector<Integer>;
FacePolynomial interval_poly();
FacePolynomial polygon_poly(int m);

/// f-vector of a product from per-factor polynomials: coefficients of the
/// product polynomial, top (improper) face dropped.
FVector product_fvector(const std::vector<FacePolynomial>& factors);

/// (f1 + f2 - 20) / (f0 + f3 - 10) for 4-dimensional f-vectors.
Rational fatness(const FVector& f);

} // namespace polyproj
