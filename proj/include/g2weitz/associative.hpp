#pragma once

#include "g2weitz/g2algebra.hpp"
#include "g2weitz/liealgebra.hpp"

#include <array>
#include <stdexcept>

namespace g2w {

class AssocError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Adapted frame: f = tangent vectors (third one scaled by orientation_sign so
// that phi(f1, f2, f3) = +1), eta = normal basis vectors in increasing order.
struct AssocFrame {
    std::array<int, 3> tangent;
    std::array<int, 4> normal;
    int orientation_sign = 1;
    std::array<Vector, 3> f;
    std::array<Vector, 4> eta;

    Vector ambient(const Vector& normal_coeffs) const;
    Vector normal_coords(const Vector& v) const;
    Vector tangent_coords(const Vector& v) const;
};

// Left-invariant ambient geometry with its Levi-Civita data.
struct Ambient {
    LieAlgebraStructure L;
    ChristoffelTable G;
    CurvatureTensor R;
    G2Data g2;
};
Ambient make_ambient(const LieAlgebraStructure& L, const G2Data& g2);

// span holds 0-based frame indices.
AssocFrame check_associative(const LieAlgebraStructure& L, const G2Data& g2, std::array<int, 3> span);
bool self_dual_iso_check(const AssocFrame& frame, const G2Data& g2);

struct ShapeData {
    // S[k](j, i) = <S_{eta_k}(f_i), f_j> with S_sigma(X) = -(nabla_X sigma)^T.
    std::array<Matrix, 4> S;
    // B[i][j] = normal coordinates of (nabla_{f_i} f_j)^perp.
    std::array<std::array<Vector, 3>, 3> B;
};

ShapeData shape_data(const ChristoffelTable& G, const AssocFrame& frame);
Matrix shape_operator(const ShapeData& sd, const Vector& sigma);
// Normal coordinates of B(u, v) for tangent coordinate vectors u, v.
Vector second_fundamental_form(const ShapeData& sd, const Vector& u, const Vector& v);
bool shape_duality_check(const ShapeData& sd);
bool totally_geodesic(const ShapeData& sd);

// Operators on normal coordinate vectors sigma (length 4).
Vector op_A(const ShapeData& sd, const Vector& sigma);
Vector op_B(const ShapeData& sd, const G2Data& g2, const AssocFrame& frame, const Vector& sigma);
Vector partial_ricci(const CurvatureTensor& R, const AssocFrame& frame, const Vector& sigma);

// The curvature defect of the Leibniz rule for the cross product, with
// nabla psi taken from the torsion corollary formula.
Vector calT(const G2Data& g2, const Matrix& T, const Tensor3& nablaT, const Vector& w, const Vector& z,
            const Vector& u, const Vector& v);
// pi_perp sum_{i in Z3} f_i x calT(f_{i+1}, sigma, f_i, f_{i+1}).
Vector calT_sum(const G2Data& g2, const Matrix& T, const Tensor3& nablaT, const AssocFrame& frame,
                const Vector& sigma);

bool leibniz_defect_check(const ChristoffelTable& G, const G2Data& g2, const Matrix& T);
bool curvature_defect_check(const ChristoffelTable& G, const CurvatureTensor& R, const G2Data& g2,
                            const Matrix& T);

// N[i](l, k) = <nabla_{f_i} eta_k, eta_l>.
std::array<Matrix, 3> normal_connection(const ChristoffelTable& G, const AssocFrame& frame);
// R_perp(f_i, f_j) on normal coordinates.
Matrix normal_curvature(const LieAlgebraStructure& L, const std::array<Matrix, 3>& N, const AssocFrame& frame,
                        int i, int j);
// <R_perp(f_i, f_j) s, n> = <R(f_i, f_j) s, n> + <[S_s, S_n] f_i, f_j> for all tangent i, j and normal s, n.
bool ricci_equation_check(const Ambient& amb, const AssocFrame& frame);

}  // namespace g2w
