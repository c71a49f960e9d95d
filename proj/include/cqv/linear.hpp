#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cqv/error.hpp"
#include "cqv/laurent.hpp"

namespace cqv {

struct ThetaSymbols {
    static std::string name(std::size_t i) { return "θ" + std::to_string(i); }
};

// Slot 0 is h, slot k >= 1 is H_k.
struct HSymbols {
    static std::string name(std::size_t i) { return i == 0 ? "h" : "H" + std::to_string(i); }
};

// Rational constant plus a rational linear combination of l formal symbols.
template <class Symbols>
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::size_t l) : coeffs_(l) {}
    LinearForm(std::size_t l, const Rational& c) : constant_(c), coeffs_(l) {}

    static LinearForm symbol(std::size_t l, std::size_t i, const Rational& c = 1) {
        LinearForm f(l);
        f.coeffs_.at(i) = c;
        return f;
    }

    std::size_t arity() const { return coeffs_.size(); }
    const Rational& constant() const { return constant_; }
    const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }
    Rational& coeff(std::size_t i) { return coeffs_.at(i); }
    Rational& constant() { return constant_; }

    bool is_zero() const {
        if (constant_ != 0) return false;
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_constant() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    LinearForm& operator+=(const LinearForm& o) {
        widen(o.arity());
        constant_ += o.constant_;
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        widen(o.arity());
        constant_ -= o.constant_;
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    LinearForm& operator*=(const Rational& s) {
        constant_ *= s;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
    friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
    LinearForm operator-() const { return *this * Rational(-1); }

    // Product stays linear only if one side is a constant.
    friend LinearForm operator*(const LinearForm& a, const LinearForm& b) {
        if (a.is_constant()) return b * a.constant_;
        if (b.is_constant()) return a * b.constant_;
        throw Error(ErrorCode::InvalidArgument, "product of two non-constant linear forms");
    }

    Rational evaluate(const std::vector<Rational>& values) const {
        Rational r = constant_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) r += coeffs_[i] * values.at(i);
        return r;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        if (a.constant_ != b.constant_) return false;
        std::size_t n = std::max(a.arity(), b.arity());
        for (std::size_t i = 0; i < n; ++i)
            if (a.get(i) != b.get(i)) return false;
        return true;
    }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        std::size_t n = std::max(a.arity(), b.arity());
        for (std::size_t i = 0; i < n; ++i) {
            int c = cmp(a.get(i), b.get(i));
            if (c != 0) return c < 0;
        }
        return a.constant_ < b.constant_;
    }

    // Highest symbol index first, constant last: "θ2+2θ1-θ0".
    std::string to_string() const {
        std::string s;
        auto emit = [&s](const Rational& c, const std::string& sym) {
            if (c == 0) return;
            Rational mag = abs(c);
            if (c < 0)
                s += "-";
            else if (!s.empty())
                s += "+";
            if (sym.empty())
                s += mag.get_str();
            else {
                if (mag != 1) s += mag.get_str();
                s += sym;
            }
        };
        for (std::size_t i = coeffs_.size(); i-- > 0;) emit(coeffs_[i], Symbols::name(i));
        emit(constant_, "");
        return s.empty() ? "0" : s;
    }

private:
    Rational get(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    void widen(std::size_t n) {
        if (coeffs_.size() < n) coeffs_.resize(n);
    }

    Rational constant_ = 0;
    std::vector<Rational> coeffs_;
};

using AffineForm = LinearForm<ThetaSymbols>;
using ParamBasisForm = LinearForm<HSymbols>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    // 0-indexed
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_like());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero_entry(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero_entry(b(k, j))) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    static bool is_zero_entry(const Rational& x) { return x == 0; }
    template <class U>
    static bool is_zero_entry(const U& x) { return x.is_zero(); }
    T zero_like() const {
        if (data_.empty()) return T();
        T z = data_.front();
        z -= data_.front();
        return z;
    }
    void check_same(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

QMatrix identity_matrix(std::size_t n);

struct RowEchelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form; pivot = first nonzero entry by row order.
RowEchelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
// Columns form a basis of the null space, one column per free variable.
QMatrix kernel_basis(const QMatrix& m);
// Solves m x = b for a matrix with full column rank; throws if inconsistent.
std::vector<Rational> solve_unique(const QMatrix& m, const std::vector<Rational>& b);

}  // namespace cqv
