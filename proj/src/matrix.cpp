#include "polyproj/matrix.hpp"

#include <algorithm>

namespace polyproj {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : init) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_long(const std::vector<std::vector<long>>& v) {
    int r = static_cast<int>(v.size());
    int c = r == 0 ? 0 : static_cast<int>(v[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(v[i].size()) != c)
            throw std::invalid_argument("ragged matrix data");
        for (int j = 0; j < c; ++j) m.at(i, j) = v[i][j];
    }
    return m;
}

std::vector<Rational> RationalMatrix::row(int i) const {
    return std::vector<Rational>(a_.begin() + static_cast<size_t>(i) * cols_,
                                 a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

std::vector<Rational> RationalMatrix::col(int j) const {
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

void RationalMatrix::set_row(int i, const std::vector<Rational>& r) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row size mismatch");
    std::copy(r.begin(), r.end(), a_.begin() + static_cast<size_t>(i) * cols_);
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::submatrix_rows(const std::vector<int>& idx) const {
    RationalMatrix s(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < cols_; ++j) s.at(i, j) = at(idx[i], j);
    return s;
}

RationalMatrix RationalMatrix::slice(const std::vector<int>& idx, int c0, int c1) const {
    RationalMatrix s(static_cast<int>(idx.size()), c1 - c0);
    for (int i = 0; i < s.rows(); ++i)
        for (int j = c0; j < c1; ++j) s.at(i, j - c0) = at(idx[i], j);
    return s;
}

bool RationalMatrix::operator<(const RationalMatrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != other.a_[k]) return a_[k] < other.a_[k];
    return false;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("mat_vec shape");
    std::vector<Rational> y(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<Rational> vec_mat(const std::vector<Rational>& y, const RationalMatrix& m) {
    if (static_cast<int>(y.size()) != m.rows()) throw std::invalid_argument("vec_mat shape");
    std::vector<Rational> x(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        Rational s = 0;
        for (int i = 0; i < m.rows(); ++i) s += y[i] * m.at(i, j);
        x[j] = s;
    }
    return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot shape");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row echelon reduction in place. Returns pivot columns; pivot row order is
// the elimination order, so the result is deterministic for fixed input.
std::vector<int> echelon(RationalMatrix& m) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

int rank(const RationalMatrix& m) {
    RationalMatrix w = m;
    return static_cast<int>(echelon(w).size());
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RationalMatrix w = m;
    int n = m.rows();
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (w.at(i, c) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        Rational inv = Rational(1) / w.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (w.at(i, c) == 0) continue;
            Rational f = w.at(i, c) * inv;
            for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve_square(const RationalMatrix& m,
                                                  const std::vector<Rational>& b) {
    RationalMatrix rhs(static_cast<int>(b.size()), 1);
    for (int i = 0; i < rhs.rows(); ++i) rhs.at(i, 0) = b[i];
    auto x = solve_square_multi(m, rhs);
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<RationalMatrix> solve_square_multi(const RationalMatrix& m,
                                                 const RationalMatrix& rhs) {
    if (m.rows() != m.cols() || rhs.rows() != m.rows())
        throw std::invalid_argument("solve_square shape");
    int n = m.rows(), k = rhs.cols();
    RationalMatrix w(n, n + k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        for (int j = 0; j < k; ++j) w.at(i, n + j) = rhs.at(i, j);
    }
    auto pivots = echelon(w);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n)) {
        // rank-deficient in the coefficient block
        for (int c : pivots)
            if (c >= n) return std::nullopt;
        if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    }
    RationalMatrix x(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) x.at(i, j) = w.at(i, n + j);
    return x;
}

RationalMatrix nullspace_basis(const RationalMatrix& m) {
    RationalMatrix w = m;
    auto pivots = echelon(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RationalMatrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int f = free_cols[k];
        basis.at(f, k) = 1;
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
            basis.at(pivots[r], k) = -w.at(r, f);
    }
    return basis;
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

} // namespace polyproj
