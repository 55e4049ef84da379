#pragma once

#include "g2weitz/g2algebra.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace g2w {

struct SpectrumRow {
    int k;
    Rational eigenvalue;
    std::int64_t multiplicity;
    Convention convention;
};

// Laplacian on the round S^3: (k(k+2), (k+1)^2).
std::pair<Rational, std::int64_t> laplace_row(int k);
// D^2 = Laplacian + 1: ((k+1)^2, 4(k+1)^2).
std::pair<Rational, std::int64_t> dirac_square_row(int k);
// The two branches at index k: first = lambda_{-k}, second = lambda_{+k}.
// For k = 0 both rows describe lambda_0 = 0; the positive branch carries multiplicity 0.
std::pair<SpectrumRow, SpectrumRow> dirac_multiplicity(int k, Convention conv);
// Recursion from the shifted-operator induction, compared with the closed form.
bool multiplicity_recursion_check(int kmax);
std::int64_t recursion_multiplicity(int k);
// The matching eigenvalue of D: lambda - 1 (plus) or lambda + 1 (minus), so |.| = k + 1.
Rational shifted_eigenvalue(const SpectrumRow& row);
// Multiplicity of -1 as an eigenvalue of D (the k = 0 row).
std::int64_t eigenvalue_minus_one_multiplicity();
// m(lambda+_{-1}), the infinitesimal deformation count.
std::int64_t deformation_dimension();

}  // namespace g2w
