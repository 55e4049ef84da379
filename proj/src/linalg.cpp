#include "g2weitz/linalg.hpp"

#include <stdexcept>

namespace g2w {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return {};
    Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) m.set_column(c, cols[c]);
    return m;
}

Vector Matrix::column(int c) const {
    Vector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(int c, const Vector& v) {
    if (static_cast<int>(v.size()) != rows_) throw DimensionError("column length mismatch");
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x)) return false;
    return true;
}

bool Matrix::is_scalar(Rational* s) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const Rational d = (*this)(0, 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? d : Rational(0))) return false;
    if (s) *s = d;
    return true;
}

static void check_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& o) {
    check_shape(*this, o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_shape(*this, o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DimensionError("matrix-vector shape mismatch");
    Vector r = zero_vector(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k)
            if (sgn(a(i, k)) && sgn(v[k])) r[i] += a(i, k) * v[k];
    return r;
}

Matrix Matrix::operator-() const { return Rational(-1) * *this; }

// Reduced row echelon form in place; returns pivot columns.
static std::vector<int> rref(Matrix& a, int ncols) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < ncols && r < a.rows(); ++c) {
        int p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (int k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
        Rational inv = 1 / a(r, c);
        for (int k = 0; k < a.cols(); ++k) a(r, k) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c);
            for (int k = 0; k < a.cols(); ++k)
                if (sgn(a(r, k))) a(i, k) -= f * a(r, k);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rank(Matrix a) { return static_cast<int>(rref(a, a.cols()).size()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.rows() != static_cast<int>(b.size())) throw DimensionError("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto piv = rref(aug, a.cols());
    for (int r = static_cast<int>(piv.size()); r < a.rows(); ++r)
        if (sgn(aug(r, a.cols()))) return std::nullopt;
    Vector x = zero_vector(a.cols());
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), a.cols());
    return x;
}

std::vector<Vector> kernel(const Matrix& a) {
    Matrix m(a);
    auto piv = rref(m, m.cols());
    std::vector<bool> is_piv(a.cols(), false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        Vector v = zero_vector(a.cols());
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(static_cast<int>(i), f);
        basis.push_back(v);
    }
    return basis;
}

Vector project_coefficients(const std::vector<Vector>& cols, const Vector& target) {
    const int n = static_cast<int>(cols.size());
    Matrix gram(n, n);
    Vector rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) gram(i, j) = dot(cols[i], cols[j]);
        rhs[i] = dot(cols[i], target);
    }
    if (rank(gram) != n) throw std::domain_error("projection onto dependent columns");
    return *solve(gram, rhs);
}

std::string to_string(const Matrix& m) {
    std::string s = "[";
    for (int r = 0; r < m.rows(); ++r) {
        s += r ? ",[" : "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) s += ",";
            s += m(r, c).get_str();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace g2w
