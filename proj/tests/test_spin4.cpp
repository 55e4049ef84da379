#include "support.hpp"

#include "g2weitz/spin4.hpp"

#include <doctest.h>

using namespace g2w;
using namespace testing_support;

TEST_CASE("rho vanishes on anti-self-dual forms") {
    for (const KForm& b : anti_self_dual_basis()) CHECK(rho(b).is_zero());
    KForm mix(4, 2);
    for (const KForm& b : anti_self_dual_basis()) mix += random_rational() * b;
    CHECK(rho(mix).is_zero());
}

TEST_CASE("rho is injective on self-dual forms with traceless anti-hermitian image") {
    CHECK(rho_rank(self_dual_basis()) == 3);
    for (const KForm& b : self_dual_basis()) {
        CHECK(rho(b).is_anti_hermitian());
        CHECK(rho(b).trace() == ComplexRational{0, 0});
    }
}

TEST_CASE("self-dual forms are self-dual") {
    for (const KForm& b : self_dual_basis()) CHECK(hodge(b) == b);
    for (const KForm& b : anti_self_dual_basis()) CHECK(hodge(b) == -b);
}

TEST_CASE("Clifford relation on random rational vectors") {
    for (int i = 0; i < 20; ++i) {
        const Vector v = random_vector(4);
        CHECK(clifford_check(v));
        const SpinMatrix g = gamma(v);
        CHECK(g.adjoint() * g == SpinMatrix::identity().scaled(dot(v, v)));
    }
}

TEST_CASE("polarized Clifford relation on the basis") {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const SpinMatrix s = gamma(i).adjoint() * gamma(j) + gamma(j).adjoint() * gamma(i);
            CHECK(s == SpinMatrix::identity().scaled(i == j ? 2 : 0));
        }
    CHECK(orthonormal_pair_check());
}

TEST_CASE("gamma is linear") {
    const Vector v = random_vector(4), w = random_vector(4);
    CHECK(gamma(v + w) == gamma(v) + gamma(w));
}
