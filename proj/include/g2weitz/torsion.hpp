#pragma once

#include "g2weitz/g2algebra.hpp"
#include "g2weitz/liealgebra.hpp"

#include <stdexcept>
#include <string>

namespace g2w {

class TorsionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TorsionData {
    Rational tau0;
    KForm tau1, tau2, tau3;
    Matrix T;  // filled by full_torsion_from_forms
};

enum class FGLabel { torsion_free, nearly_parallel, locally_conformal_calibrated, generic };
std::string to_string(FGLabel l);

struct FGClass {
    FGLabel label;
    TorsionData witness;
};

// d phi = tau0 psi + 3 tau1 ^ phi + *tau3,  d psi = 4 tau1 ^ psi + *tau2.
TorsionData torsion_forms(const LieAlgebraStructure& L, const G2Data& g2);
// The symmetric h with tau3 = sum h_am phi_mbc + h_bm phi_amc + h_cm phi_abm.
Matrix tau3_avatar(const KForm& tau3, const G2Data& g2);
// (tau1)_lm = sum_k (tau1)_k phi_klm.
Matrix tau1_avatar(const KForm& tau1, const G2Data& g2);
Matrix full_torsion_from_forms(const TorsionData& td, const G2Data& g2);
// nabla_l phi_abc = T_lm psi_mabc, solved from the Christoffel symbols.
Matrix full_torsion_from_nabla_phi(const LieAlgebraStructure& L, const ChristoffelTable& G, const G2Data& g2);
FGClass classify(const TorsionData& td);
bool nabla_psi_check(const ChristoffelTable& G, const G2Data& g2, const Matrix& T);
// Both defining equations reassemble d phi and d psi; tau2, tau3 lie in their summands.
bool reassembly_check(const LieAlgebraStructure& L, const G2Data& g2, const TorsionData& td);
bool membership_check(const G2Data& g2, const TorsionData& td);

// (nabla_l psi)(r, s, t, u) = -T_lr phi_stu + T_ls phi_rtu - T_lt phi_rsu + T_lu phi_rst.
Rational nabla_psi_formula(const Matrix& T, const G2Data& g2, int l, int r, int s, int t, int u);

}  // namespace g2w
