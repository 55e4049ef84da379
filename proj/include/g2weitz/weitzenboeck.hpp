#pragma once

#include "g2weitz/associative.hpp"

#include <optional>
#include <string>

namespace g2w {

// value = sigma in normal coordinates; derivs[i] = nabla^perp_{f_i} sigma.
struct NormalJet {
    Vector value;
    std::array<Vector, 3> derivs;
};

using OperatorMatrix = Matrix;

struct WeitzenboeckSetup {
    Ambient amb;
    AssocFrame frame;
    Matrix T;  // full torsion, nabla phi = T . psi; used by calT
    Tensor3 nablaT;
    Matrix Top;  // torsion entering the Dirac operator and P1, P2, P3
    Tensor3 nablaTop;
    std::array<Matrix, 3> N;  // normal connection, see normal_connection
};

// Torsion as read by the operator formulas, T(u, v) with u the slot of the
// section: -T^t for the minus model form, T^t for the plus one (orientation
// reversal). For antisymmetric T this is T and -T.
Matrix weitzenboeck_torsion(const Matrix& T, Convention conv);
WeitzenboeckSetup make_setup(const Ambient& amb, const AssocFrame& frame, const Matrix& T);

Vector dirac_plain(const WeitzenboeckSetup& w, const NormalJet& jet);
// Sum over the first two tangent directions only.
Vector dirac_c(const WeitzenboeckSetup& w, const NormalJet& jet);
Vector torsion_twist(const WeitzenboeckSetup& w, const Vector& sigma);
Vector fueter_dirac(const WeitzenboeckSetup& w, const NormalJet& jet);
// -2 sum_{(i,j,k) cyclic} C_ij nabla_k sigma, C the antisymmetric part of the operator torsion.
Vector c_term(const WeitzenboeckSetup& w, const NormalJet& jet);
// c_sign multiplies the C-term.
Vector p1(const WeitzenboeckSetup& w, const NormalJet& jet, int c_sign = 1);
Vector p2(const WeitzenboeckSetup& w, const NormalJet& jet);
// Tangential terms of the Leibniz expansion behind P2 that P2 leaves out:
// sum_{i,l} (-T(S_sigma f_i, eta_l) - T(sigma, S_{eta_l} f_i)) f_i x eta_l.
// Zero when the submanifold is totally geodesic.
Vector p2_shape(const WeitzenboeckSetup& w, const Vector& sigma);
Vector p3(const WeitzenboeckSetup& w, const NormalJet& jet);
// e_t x sigma for the third tangent basis vector e_t (unflipped).
Vector op_J(const WeitzenboeckSetup& w, const Vector& sigma);
Vector nabla_third(const WeitzenboeckSetup& w, const NormalJet& jet);

// Jet of the invariant section with constant normal coordinates sigma.
NormalJet invariant_jet(const WeitzenboeckSetup& w, const Vector& sigma);
// Same jet computed directly from the Christoffel symbols.
NormalJet invariant_jet_direct(const WeitzenboeckSetup& w, const Vector& sigma);

enum class OpId { Dplain, DA, P1, P2, P3, J, Dc, nabla7, lapl, curvterm, ricciPartial, opB, opA, tsum, P2shape, Cterm };
std::string to_string(OpId id);
OpId parse_op_id(const std::string& s);
const std::vector<OpId>& all_op_ids();

OperatorMatrix invariant_matrix(const WeitzenboeckSetup& w, OpId id);
OperatorMatrix weitzenboeck_residual(const WeitzenboeckSetup& w);
// Residual with one right-hand term left out (by op id), for sanity inversions.
OperatorMatrix weitzenboeck_residual_without(const WeitzenboeckSetup& w, OpId omitted);
// Residual with the C-term of P1 reversed in sign and p2_shape added to the
// right-hand side. Vanishes also off the totally geodesic, antisymmetric-T cases.
OperatorMatrix weitzenboeck_residual_corrected(const WeitzenboeckSetup& w);
// curvterm - (ricciPartial + opB - tsum).
OperatorMatrix curvature_rewrite_residual(const WeitzenboeckSetup& w);

// Flat model with T = (tau0/4) g and nabla T = 0 on the given frame.
WeitzenboeckSetup nearly_parallel_setup(const G2Data& g2, const AssocFrame& frame, const Rational& tau0);
Vector nearly_parallel_identity(const NormalJet& jet, const Rational& tau0, const G2Data& g2, const AssocFrame& frame);

// Dc J + J Dc, and the same minus 4 Id.
OperatorMatrix support_anticommutator(const WeitzenboeckSetup& w);
OperatorMatrix support_identity(const WeitzenboeckSetup& w);

struct LccCertificate {
    bool applicable = false;
    std::string note;
    OperatorMatrix DA, DA2, lapl, JD, nabla7;
    // c with DA^2 = lapl + c Id + 2 J D - 3 nabla7, when the remainder is scalar.
    std::optional<Rational> identity_constant;
    bool identity_11_4 = false;
    // mu with -J * torsion_twist = mu Id, giving J D = mu on ker DA.
    std::optional<Rational> kernel_substitution;
    std::optional<Rational> coefficient;
    int kernel_dim = -1;
    bool rigid = false;
};
LccCertificate lcc_certificate(const WeitzenboeckSetup& w);

bool rigidity_criterion_np(const Rational& k_scalar, const Rational& tau0, const Rational& f_minus_lower);

}  // namespace g2w
