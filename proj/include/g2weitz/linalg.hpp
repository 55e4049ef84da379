#pragma once

#include "g2weitz/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2w {

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix from_columns(const std::vector<Vector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Vector column(int c) const;
    void set_column(int c, const Vector& v);
    Matrix transpose() const;
    bool is_zero() const;
    // True iff this equals s * Id for some s; the scalar is written to *s.
    bool is_scalar(Rational* s = nullptr) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix a);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const;
    bool operator==(const Matrix& o) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

int rank(Matrix a);
// Some solution of A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
// Basis of the null space.
std::vector<Vector> kernel(const Matrix& a);
// Coefficients of the orthogonal projection of target onto the span of
// linearly independent columns (normal equations).
Vector project_coefficients(const std::vector<Vector>& cols, const Vector& target);

// "[[a,b],[c,d]]"
std::string to_string(const Matrix& m);

}  // namespace g2w
