#pragma once

#include "g2weitz/exterior.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2w {

struct ComplexRational {
    Rational re, im;

    ComplexRational conj() const { return {re, -im}; }
    ComplexRational operator+(const ComplexRational& o) const { return {re + o.re, im + o.im}; }
    ComplexRational operator-(const ComplexRational& o) const { return {re - o.re, im - o.im}; }
    ComplexRational operator*(const ComplexRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const ComplexRational& o) const { return re == o.re && im == o.im; }
};

class SpinMatrix {
  public:
    SpinMatrix();
    static SpinMatrix identity();

    ComplexRational& operator()(int r, int c) { return e_[r][c]; }
    const ComplexRational& operator()(int r, int c) const { return e_[r][c]; }

    SpinMatrix adjoint() const;
    ComplexRational trace() const;
    bool is_zero() const;
    bool is_anti_hermitian() const;

    SpinMatrix operator+(const SpinMatrix& o) const;
    SpinMatrix operator-(const SpinMatrix& o) const;
    SpinMatrix operator*(const SpinMatrix& o) const;
    SpinMatrix scaled(const Rational& s) const;
    bool operator==(const SpinMatrix& o) const { return e_ == o.e_; }

  private:
    std::array<std::array<ComplexRational, 2>, 2> e_;
};

// i in 0..3 for e_1..e_4.
SpinMatrix gamma(int i);
SpinMatrix gamma(const Vector& v);
// rho(v ^ v') = -gamma(v)^* gamma(v'), extended linearly over the basis 2-forms.
SpinMatrix rho(const KForm& beta);
bool clifford_check(const Vector& v);
// gamma(v)^* gamma(v') + gamma(v')^* gamma(v) = 0 for all basis pairs v != v'.
bool orthonormal_pair_check();

std::vector<KForm> anti_self_dual_basis();
std::vector<KForm> self_dual_basis();
// Real rank of rho over the given 2-forms (matrices read as vectors in R^8).
int rho_rank(const std::vector<KForm>& forms);

std::string to_string(const SpinMatrix& m);

}  // namespace g2w
