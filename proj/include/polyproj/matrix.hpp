#pragma once

#include "polyproj/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace polyproj {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    static RationalMatrix identity(int n);
    static RationalMatrix from_long(const std::vector<std::vector<long>>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Rational> row(int i) const;
    std::vector<Rational> col(int j) const;
    void set_row(int i, const std::vector<Rational>& r);

    RationalMatrix transposed() const;
    RationalMatrix submatrix_rows(const std::vector<int>& idx) const;
    /// Columns [c0, c1) of the rows in idx.
    RationalMatrix slice(const std::vector<int>& idx, int c0, int c1) const;

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }
    /// Lexicographic on shape then entries; makes matrices usable as map keys.
    bool operator<(const RationalMatrix& other) const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& x);
/// y^T m, as a vector of length cols(m).
std::vector<Rational> vec_mat(const std::vector<Rational>& y, const RationalMatrix& m);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

int rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Unique solution of m x = b for square nonsingular m; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(const RationalMatrix& m,
                                                  const std::vector<Rational>& b);

/// Columns form a basis of { x : m x = 0 }. Deterministic: Gaussian
/// elimination over exact rationals with first-nonzero pivot order, free
/// variables in increasing column order.
RationalMatrix nullspace_basis(const RationalMatrix& m);

/// Solves m X = rhs columnwise for square nonsingular m.
std::optional<RationalMatrix> solve_square_multi(const RationalMatrix& m,
                                                 const RationalMatrix& rhs);

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace polyproj
