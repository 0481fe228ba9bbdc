#include "polyproj/lp.hpp"

#include <functional>

namespace polyproj {

namespace {

// Tableau for Phase I: rows are the equations, columns are
// [original vars | artificial vars | rhs]. Artificial columns start as the
// identity, so at any point they hold B^{-1} and the dual vector can be read
// off the artificial block.
struct Tableau {
    int m; // original variables
    int k; // equations
    RationalMatrix t;
    std::vector<int> basis; // basis[i] = variable index basic in row i

    Tableau(const RationalMatrix& a, const std::vector<Rational>& b)
        : m(a.cols()), k(a.rows()), t(a.rows(), a.cols() + a.rows() + 1), basis(a.rows()) {
        for (int i = 0; i < k; ++i) {
            bool flip = b[i] < 0;
            for (int j = 0; j < m; ++j) t.at(i, j) = flip ? -a.at(i, j) : a.at(i, j);
            t.at(i, m + i) = 1;
            t.at(i, m + k) = flip ? -b[i] : b[i];
            basis[i] = m + i;
        }
    }

    bool artificial(int var) const { return var >= m; }

    // Sum of row entries in column j over rows whose basic variable is
    // artificial; this is y^T A_j for the Phase-I dual y.
    Rational price(int j) const {
        Rational s = 0;
        for (int i = 0; i < k; ++i)
            if (artificial(basis[i])) s += t.at(i, j);
        return s;
    }

    void pivot(int row, int col) {
        Rational inv = Rational(1) / t.at(row, col);
        for (int j = 0; j <= m + k; ++j) t.at(row, j) *= inv;
        for (int i = 0; i < k; ++i) {
            if (i == row || t.at(i, col) == 0) continue;
            Rational f = t.at(i, col);
            for (int j = 0; j <= m + k; ++j) t.at(i, j) -= f * t.at(row, j);
        }
        basis[row] = col;
    }
};

} // namespace

FeasibilityResult lp_feasible_eq_nonneg(const RationalMatrix& a,
                                        const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("lp_feasible_eq_nonneg shape");
    Tableau tab(a, b);
    const int rhs = tab.m + tab.k;

    for (;;) {
        // Bland: entering variable of lowest index among improving originals.
        int enter = -1;
        for (int j = 0; j < tab.m; ++j) {
            if (tab.price(j) > 0) { enter = j; break; }
        }
        if (enter < 0) break;

        int leave = -1;
        Rational best;
        for (int i = 0; i < tab.k; ++i) {
            if (tab.t.at(i, enter) <= 0) continue;
            Rational ratio = tab.t.at(i, rhs) / tab.t.at(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && tab.basis[i] < tab.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // price(enter) > 0 forces a positive entry in some artificial-basic row
        if (leave < 0) throw std::logic_error("phase-1 simplex: no leaving row");
        tab.pivot(leave, enter);
    }

    Rational objective = 0;
    for (int i = 0; i < tab.k; ++i)
        if (tab.artificial(tab.basis[i])) objective += tab.t.at(i, rhs);

    FeasibilityResult res;
    if (objective == 0) {
        res.feasible = true;
        res.point.assign(tab.m, Rational(0));
        for (int i = 0; i < tab.k; ++i)
            if (!tab.artificial(tab.basis[i])) res.point[tab.basis[i]] = tab.t.at(i, rhs);
    } else {
        res.feasible = false;
        // y_i = column sum of artificial column i over artificial-basic rows,
        // un-flipped to match the original row signs.
        res.farkas.resize(tab.k);
        for (int i = 0; i < tab.k; ++i) {
            Rational yi = tab.price(tab.m + i);
            res.farkas[i] = (b[i] < 0) ? -yi : yi;
        }
    }
    return res;
}

FeasibilityResult lp_feasible_general(const RationalMatrix& aeq,
                                      const std::vector<Rational>& beq,
                                      const RationalMatrix& ale,
                                      const std::vector<Rational>& ble) {
    int n = aeq.cols() > 0 ? aeq.cols() : ale.cols();
    if ((aeq.rows() > 0 && aeq.cols() != n) || (ale.rows() > 0 && ale.cols() != n))
        throw std::invalid_argument("lp_feasible_general shape");
    int ke = aeq.rows(), ki = ale.rows();
    // x = u - w with u, w >= 0; inequality rows get a slack each.
    RationalMatrix a(ke + ki, 2 * n + ki);
    std::vector<Rational> b(ke + ki);
    for (int i = 0; i < ke; ++i) {
        for (int j = 0; j < n; ++j) {
            a.at(i, j) = aeq.at(i, j);
            a.at(i, n + j) = -aeq.at(i, j);
        }
        b[i] = beq[i];
    }
    for (int i = 0; i < ki; ++i) {
        for (int j = 0; j < n; ++j) {
            a.at(ke + i, j) = ale.at(i, j);
            a.at(ke + i, n + j) = -ale.at(i, j);
        }
        a.at(ke + i, 2 * n + i) = 1;
        b[ke + i] = ble[i];
    }
    FeasibilityResult inner = lp_feasible_eq_nonneg(a, b);
    FeasibilityResult res;
    res.feasible = inner.feasible;
    if (inner.feasible) {
        res.point.resize(n);
        for (int j = 0; j < n; ++j) res.point[j] = inner.point[j] - inner.point[n + j];
    }
    return res;
}

std::pair<bool, SpanCertificate> positively_dependent(const RationalMatrix& g) {
    if (g.rows() < 1) throw std::invalid_argument("positively_dependent needs >= 1 row");
    const int m = g.rows(), k = g.cols();
    // lambda >= 1, G^T lambda = 0  <=>  mu >= 0, G^T mu = -G^T 1.
    RationalMatrix a = g.transposed();
    std::vector<Rational> c(k);
    for (int i = 0; i < k; ++i) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += g.at(j, i);
        c[i] = -s;
    }
    FeasibilityResult fr = lp_feasible_eq_nonneg(a, c);
    SpanCertificate cert;
    if (fr.feasible) {
        cert.kind = SpanCertificate::Kind::DependentWithCoefficients;
        cert.coefficients.resize(m);
        for (int j = 0; j < m; ++j) cert.coefficients[j] = fr.point[j] + 1;
        return {true, cert};
    }
    // Farkas y: y^T G^T <= 0 and y^T c > 0, so G(-y) >= 0 and G(-y) != 0.
    cert.kind = SpanCertificate::Kind::InfeasibleWitness;
    cert.witness.resize(k);
    for (int i = 0; i < k; ++i) cert.witness[i] = -fr.farkas[i];
    return {false, cert};
}

bool positively_spanning(const RationalMatrix& g) {
    if (g.rows() < 1) return false;
    if (!positively_dependent(g).first) return false;
    return rank(g) == g.cols();
}

bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!visit(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool general_position_linear(const RationalMatrix& g) {
    const int k = g.cols();
    if (g.rows() < k) throw std::invalid_argument("general_position_linear needs rows >= cols");
    if (k == 0) return true;
    return for_each_subset(g.rows(), k, [&](const std::vector<int>& idx) {
        return determinant(g.submatrix_rows(idx)) != 0;
    });
}

bool verify_certificate(const RationalMatrix& g, bool dependent,
                        const SpanCertificate& cert) {
    if (dependent) {
        if (cert.kind != SpanCertificate::Kind::DependentWithCoefficients) return false;
        if (static_cast<int>(cert.coefficients.size()) != g.rows()) return false;
        for (const auto& l : cert.coefficients)
            if (l < 1) return false;
        std::vector<Rational> s = vec_mat(cert.coefficients, g);
        for (const auto& v : s)
            if (v != 0) return false;
        return true;
    }
    if (cert.kind != SpanCertificate::Kind::InfeasibleWitness) return false;
    if (static_cast<int>(cert.witness.size()) != g.cols()) return false;
    std::vector<Rational> gy = mat_vec(g, cert.witness);
    bool nonzero = false;
    for (const auto& v : gy) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    return nonzero;
}

} // namespace polyproj
