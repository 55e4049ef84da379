#include "g2weitz/sphere_spectrum.hpp"

#include <doctest.h>

using namespace g2w;

TEST_CASE("closed-form multiplicities in the plus convention") {
    for (int k = 0; k <= 200; ++k) {
        const auto [neg, pos] = dirac_multiplicity(k, Convention::plus);
        CHECK(neg.multiplicity == 2LL * (k + 1) * (k + 2));
        CHECK(pos.multiplicity == 2LL * k * (k + 1));
        CHECK(neg.multiplicity + pos.multiplicity == 4LL * (k + 1) * (k + 1));
        CHECK(neg.eigenvalue == -k);
        CHECK(pos.eigenvalue == (k == 0 ? 0 : k + 2));
    }
}

TEST_CASE("minus convention mirrors the spectrum") {
    for (int k = 1; k <= 50; ++k) {
        const auto [neg, pos] = dirac_multiplicity(k, Convention::minus);
        CHECK(pos.eigenvalue == k);
        CHECK(pos.multiplicity == 2LL * (k + 1) * (k + 2));
        CHECK(neg.eigenvalue == -k - 2);
        CHECK(neg.multiplicity == 2LL * k * (k + 1));
    }
}

TEST_CASE("recursion reproduces the closed form") {
    CHECK(multiplicity_recursion_check(200));
    std::int64_t m = 4;
    for (int k = 0; k <= 200; ++k) {
        CHECK(recursion_multiplicity(k) == m);
        CHECK(m == 2LL * (k + 1) * (k + 2));
        m = 4LL * (k + 2) * (k + 2) - m;
    }
}

TEST_CASE("D squared rows") {
    for (int k = 0; k <= 200; ++k) {
        const auto [l, lm] = laplace_row(k);
        const auto [d, dm] = dirac_square_row(k);
        CHECK(l == k * (k + 2));
        CHECK(lm == (k + 1LL) * (k + 1));
        CHECK(d == l + 1);
        CHECK(dm == 4 * lm);
    }
}

TEST_CASE("shifted eigenvalues and the deformation count") {
    for (int k = 1; k <= 20; ++k)
        for (Convention c : {Convention::plus, Convention::minus}) {
            const auto [neg, pos] = dirac_multiplicity(k, c);
            CHECK(abs(shifted_eigenvalue(neg)) == k + 1);
            CHECK(abs(shifted_eigenvalue(pos)) == k + 1);
        }
    CHECK(dirac_multiplicity(1, Convention::plus).first.multiplicity == 12);
    CHECK(deformation_dimension() == 12);
    CHECK(eigenvalue_minus_one_multiplicity() == 4);
}

TEST_CASE("sum rule in both conventions") {
    for (Convention c : {Convention::plus, Convention::minus})
        for (int k = 0; k <= 200; ++k) {
            const auto [neg, pos] = dirac_multiplicity(k, c);
            CHECK(neg.multiplicity + pos.multiplicity == dirac_square_row(k).second);
        }
}
