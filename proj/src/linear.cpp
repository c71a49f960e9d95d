#include "cqv/linear.hpp"

namespace cqv {

QMatrix identity_matrix(std::size_t n) {
    QMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RowEchelon rref(QMatrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix kernel_basis(const QMatrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    QMatrix k(m.cols(), free.size(), Rational(0));
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(r, free[j]);
    }
    return k;
}

std::vector<Rational> solve_unique(const QMatrix& m, const std::vector<Rational>& b) {
    QMatrix aug(m.rows(), m.cols() + 1, Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b.at(r);
    }
    RowEchelon e = rref(aug);
    if (e.pivots.size() != m.cols() || (!e.pivots.empty() && e.pivots.back() == m.cols()))
        throw Error(ErrorCode::DegenerateParameter, "linear system has no unique solution");
    std::vector<Rational> x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

}  // namespace cqv
