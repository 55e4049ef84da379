#pragma once

#include "g2weitz/linalg.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace g2w {

enum class Convention { plus, minus };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

class G2Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A 3-form on R^7 compatible with the identity metric, its dual psi = *phi,
// and dense component tables for fast contraction.
class G2Data {
  public:
    G2Data() = default;
    // Throws G2Error unless metric_compat_check passes with the convention's sign.
    G2Data(const KForm& phi, Convention conv);

    const KForm& phi() const { return phi_; }
    const KForm& psi() const { return psi_; }
    Convention convention() const { return conv_; }

    const Rational& phi_at(int a, int b, int c) const { return phi3_[(a * 7 + b) * 7 + c]; }
    const Rational& psi_at(int a, int b, int c, int d) const { return psi4_[((a * 7 + b) * 7 + c) * 7 + d]; }

  private:
    KForm phi_, psi_;
    Convention conv_ = Convention::plus;
    std::vector<Rational> phi3_, psi4_;
};

KForm model_phi_form(Convention conv);
G2Data model_phi(Convention conv);

// <u x v, w> = phi(u, v, w).
Vector cross(const Vector& u, const Vector& v, const G2Data& g2);
// <chi(u, v, w), z> = psi(u, v, w, z).
Vector associator(const Vector& u, const Vector& v, const Vector& w, const G2Data& g2);

// Sign s in {+1, -1} with (e_i _| phi) ^ (e_j _| phi) ^ phi = 6 s delta_ij vol, or 0 if neither.
int metric_sign(const KForm& phi);
bool metric_compat_check(const KForm& phi, Convention conv);

struct TwoFormSplit {
    KForm beta7, beta14;
};
struct ThreeFormSplit {
    KForm eta1, eta7, eta27;
};

TwoFormSplit project_two_forms(const KForm& beta, const G2Data& g2);
ThreeFormSplit project_three_forms(const KForm& eta, const G2Data& g2);

// Ranks of the spanning sets {X _| phi}, {beta : beta ^ psi = 0}, and 1/7/27 pieces.
struct DecompositionRanks {
    int omega2_7, omega2_14, omega3_1, omega3_7, omega3_27;
};
DecompositionRanks decomposition_ranks(const G2Data& g2);

struct ModelIdentities {
    Rational full_contraction;  // psi_{rstu} psi_{rstu}
    Matrix triple_contraction;  // psi_{rstu} psi_{astu}
};
ModelIdentities model_identities(const G2Data& g2);

}  // namespace g2w

namespace g2w {

// (A^* alpha)(v1, ..., vk) = alpha(A v1, ..., A vk).
KForm pullback(const KForm& alpha, const Matrix& a);
// Orientation-reversing map carrying the plus model form to the minus one.
Matrix convention_automorphism();

}  // namespace g2w
