#pragma once

#include "g2weitz/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace g2w {

class LieError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Dense n x n x n table of rationals, t(i, j, k).
class Tensor3 {
  public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), a_(static_cast<size_t>(n) * n * n, Rational(0)) {}
    int dim() const { return n_; }
    Rational& operator()(int i, int j, int k) { return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const Rational& operator()(int i, int j, int k) const { return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    bool operator==(const Tensor3& o) const = default;

  private:
    int n_ = 0;
    std::vector<Rational> a_;
};

// Dense n^4 table, t(i, j, k, m).
class Tensor4 {
  public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), a_(static_cast<size_t>(n) * n * n * n, Rational(0)) {}
    int dim() const { return n_; }
    Rational& operator()(int i, int j, int k, int m) { return a_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + m]; }
    const Rational& operator()(int i, int j, int k, int m) const {
        return a_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + m];
    }
    bool operator==(const Tensor4& o) const = default;

  private:
    int n_ = 0;
    std::vector<Rational> a_;
};

// Structure constants c(i, j, k) = <[e_i, e_j], e_k> on a declared orthonormal frame.
class LieAlgebraStructure {
  public:
    LieAlgebraStructure() = default;
    // From the differentials de^1..de^n: c_ij^k = -(de^k)(e_i, e_j).
    explicit LieAlgebraStructure(const std::vector<KForm>& de);
    static LieAlgebraStructure from_constants(const Tensor3& c);

    int dim() const { return c_.dim(); }
    const Tensor3& c() const { return c_; }
    const std::vector<KForm>& de() const { return de_; }
    Vector bracket(const Vector& x, const Vector& y) const;

  private:
    Tensor3 c_;
    std::vector<KForm> de_;
};

bool jacobi_check(const LieAlgebraStructure& L);
KForm ce_differential(const LieAlgebraStructure& L, const KForm& alpha);
// d(de^k) = 0 for every coframe element.
bool dd_zero(const LieAlgebraStructure& L);

// gamma(i, j, k) = Gamma_ij^k with nabla_{e_i} e_j = sum_k Gamma_ij^k e_k.
using ChristoffelTable = Tensor3;
// R(i, j, k, m) = R_ijk^m with R(e_i, e_j) e_k = sum_m R_ijk^m e_m.
using CurvatureTensor = Tensor4;

ChristoffelTable christoffel(const LieAlgebraStructure& L);
CurvatureTensor curvature(const LieAlgebraStructure& L, const ChristoffelTable& G);

bool christoffel_metric_check(const ChristoffelTable& G);
bool christoffel_torsion_free_check(const LieAlgebraStructure& L, const ChristoffelTable& G);
bool curvature_antisymmetry_check(const CurvatureTensor& R);
bool curvature_bianchi_check(const CurvatureTensor& R);
bool curvature_pair_symmetry_check(const CurvatureTensor& R);

// nabla_X Y for left-invariant fields with constant coefficients.
Vector nabla(const ChristoffelTable& G, const Vector& x, const Vector& y);
// R(X, Y) Z for constant-coefficient fields.
Vector curvature_apply(const CurvatureTensor& R, const Vector& x, const Vector& y, const Vector& z);

// t(i, k, l) = (nabla_i T)_kl = -Gamma_ik^m T_ml - Gamma_il^m T_km.
Tensor3 nabla_invariant_tensor(const ChristoffelTable& G, const Matrix& T);

// k = sum_{i, j in indices} <R(e_i, e_j) e_j, e_i>.
Rational scalar_curvature(const CurvatureTensor& R, const std::vector<int>& indices);
// The structure constants of a subalgebra spanned by frame vectors; throws if not closed.
LieAlgebraStructure subalgebra(const LieAlgebraStructure& L, const std::vector<int>& indices);
bool is_subalgebra(const LieAlgebraStructure& L, const std::vector<int>& indices);

}  // namespace g2w
