#include "g2weitz/sphere_spectrum.hpp"

#include <stdexcept>

namespace g2w {

static void require_k(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
}

std::pair<Rational, std::int64_t> laplace_row(int k) {
    require_k(k);
    return {Rational(static_cast<long>(k) * (k + 2)), static_cast<std::int64_t>(k + 1) * (k + 1)};
}

std::pair<Rational, std::int64_t> dirac_square_row(int k) {
    require_k(k);
    return {Rational(static_cast<long>(k + 1) * (k + 1)), 4 * static_cast<std::int64_t>(k + 1) * (k + 1)};
}

std::pair<SpectrumRow, SpectrumRow> dirac_multiplicity(int k, Convention conv) {
    require_k(k);
    const std::int64_t big = 2 * static_cast<std::int64_t>(k + 1) * (k + 2);
    const std::int64_t small = 2 * static_cast<std::int64_t>(k) * (k + 1);
    if (conv == Convention::plus) {
        // lambda+_{-k} = -k, lambda+_k = k + 2, lambda+_0 = 0.
        SpectrumRow neg{k, Rational(-k), big, conv};
        SpectrumRow pos{k, k == 0 ? Rational(0) : Rational(k + 2), small, conv};
        return {neg, pos};
    }
    // lambda-_{-k} = -k - 2, lambda-_k = k, lambda-_0 = 0.
    SpectrumRow neg{k, k == 0 ? Rational(0) : Rational(-k - 2), small, conv};
    SpectrumRow pos{k, Rational(k), big, conv};
    return {neg, pos};
}

std::int64_t recursion_multiplicity(int k) {
    require_k(k);
    // m(lambda+_{-(j+1)}) = 4 (j+2)^2 - m(lambda-_j), with m(lambda-_j) = m(lambda+_{-j}).
    std::int64_t m = 4;
    for (int j = 0; j < k; ++j) m = 4 * static_cast<std::int64_t>(j + 2) * (j + 2) - m;
    return m;
}

bool multiplicity_recursion_check(int kmax) {
    std::int64_t m = 4;
    for (int k = 0; k <= kmax; ++k) {
        if (m != dirac_multiplicity(k, Convention::plus).first.multiplicity) return false;
        if (m != dirac_multiplicity(k, Convention::minus).second.multiplicity) return false;
        m = 4 * static_cast<std::int64_t>(k + 2) * (k + 2) - m;
    }
    return true;
}

Rational shifted_eigenvalue(const SpectrumRow& row) {
    return row.convention == Convention::plus ? Rational(row.eigenvalue - 1) : Rational(row.eigenvalue + 1);
}

std::int64_t eigenvalue_minus_one_multiplicity() { return dirac_multiplicity(0, Convention::plus).first.multiplicity; }

std::int64_t deformation_dimension() { return dirac_multiplicity(1, Convention::plus).first.multiplicity; }

}  // namespace g2w
