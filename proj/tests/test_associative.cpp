#include "support.hpp"

#include "g2weitz/associative.hpp"
#include "g2weitz/torsion.hpp"

#include <doctest.h>

using namespace g2w;
using namespace testing_support;

namespace {

LieAlgebraStructure algebra(const std::vector<std::string>& de) {
    std::vector<KForm> f;
    for (const auto& s : de) f.push_back(parse_form(s, 7, 2));
    return LieAlgebraStructure(f);
}

// <S_eta(f_i), f_j> = -<nabla_{f_i} eta, f_j>, straight from the connection.
Rational shape_entry(const ChristoffelTable& G, const AssocFrame& fr, int k, int i, int j) {
    return -dot(nabla(G, fr.f[i], fr.eta[k]), fr.f[j]);
}

}  // namespace

TEST_CASE("frames of the fixtures") {
    const LoadedGeometry s = load("solv_s.json");
    const AssocFrame fr = check_associative(s.L, s.g2, {4, 5, 6});
    CHECK(fr.orientation_sign == -1);
    CHECK(s.g2.phi().evaluate({fr.f[0], fr.f[1], fr.f[2]}) == 1);
    CHECK(fr.normal == std::array<int, 4>{0, 1, 2, 3});
    CHECK(self_dual_iso_check(fr, s.g2));

    const LoadedGeometry flat = load("flat_r7.json");
    const AssocFrame f0 = check_associative(flat.L, flat.g2, {0, 1, 2});
    CHECK(f0.orientation_sign == 1);
    CHECK(self_dual_iso_check(f0, flat.g2));
}

TEST_CASE("associative span validation") {
    const LoadedGeometry s = load("solv_s.json");
    CHECK_THROWS_AS(check_associative(s.L, s.g2, {0, 1, 2}), AssocError);  // not a subalgebra
    CHECK_THROWS_AS(check_associative(s.L, s.g2, {4, 4, 6}), AssocError);
    CHECK_THROWS_AS(check_associative(s.L, s.g2, {4, 5, 7}), AssocError);
    const LoadedGeometry flat = load("flat_r7.json");
    CHECK_THROWS_AS(check_associative(flat.L, flat.g2, {0, 1, 3}), AssocError);  // not calibrated
}

TEST_CASE("shape operator of the solvable example vanishes") {
    const LoadedGeometry s = load("solv_s.json");
    const Ambient amb = make_ambient(s.L, s.g2);
    const AssocFrame fr = check_associative(s.L, s.g2, {4, 5, 6});
    const ShapeData sd = shape_data(amb.G, fr);
    CHECK(totally_geodesic(sd));
    for (int k = 0; k < 4; ++k) CHECK(sd.S[k].is_zero());
    for (int t = 0; t < 3; ++t) {
        const Vector sigma = random_vector(4);
        CHECK(is_zero(op_B(sd, s.g2, fr, sigma)));
        CHECK(is_zero(op_A(sd, sigma)));
    }
}

TEST_CASE("shape operator on a non-totally-geodesic span") {
    const LieAlgebraStructure L = algebra({"e17", "2*e27", "-e37", "1/2*e47", "3*e57", "e67", "0"});
    const G2Data g2 = model_phi(Convention::plus);
    const Ambient amb = make_ambient(L, g2);
    const AssocFrame fr = check_associative(L, g2, {0, 1, 2});
    const ShapeData sd = shape_data(amb.G, fr);
    CHECK_FALSE(totally_geodesic(sd));
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(sd.S[k](j, i) == shape_entry(amb.G, fr, k, i, j));
    CHECK(shape_duality_check(sd));
    CHECK(ricci_equation_check(amb, fr));
    // <B(sigma), sigma> = -sum |S_sigma e_i|^2 needs sum_i e_i x B(e_i, e_j) = 0, which fails here;
    // A is always S^t S.
    for (int t = 0; t < 3; ++t) {
        const Vector sigma = random_vector(4);
        const Matrix S = shape_operator(sd, sigma);
        Rational norm = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) norm += S(j, i) * S(j, i);
        CHECK(dot(op_A(sd, sigma), sigma) == norm);
    }
}

TEST_CASE("partial Ricci operator of the solvable example") {
    const LoadedGeometry s = load("solv_s.json");
    const Ambient amb = make_ambient(s.L, s.g2);
    const AssocFrame fr = check_associative(s.L, s.g2, {4, 5, 6});
    for (int k = 0; k < 4; ++k) {
        const Vector e = basis_vector(4, k);
        CHECK(partial_ricci(amb.R, fr, e) == Rational(3, 4) * e);
    }
}

TEST_CASE("T-sum on the solvable example") {
    const LoadedGeometry s = load("solv_s.json");
    const Ambient amb = make_ambient(s.L, s.g2);
    const AssocFrame fr = check_associative(s.L, s.g2, {4, 5, 6});
    const TorsionData td = torsion_forms(s.L, s.g2);
    const Tensor3 nT = nabla_invariant_tensor(amb.G, td.T);
    for (int k = 0; k < 4; ++k) {
        const Vector e = basis_vector(4, k);
        CHECK(calT_sum(s.g2, td.T, nT, fr, e) == Rational(1, 4) * e);
    }
}

TEST_CASE("Leibniz defects vanish exhaustively") {
    for (const char* name : {"flat_r7.json", "solv_s.json", "n28_times_r.json"}) {
        CAPTURE(name);
        const LoadedGeometry g = load(name);
        const Ambient amb = make_ambient(g.L, g.g2);
        const TorsionData td = torsion_forms(g.L, g.g2);
        CHECK(leibniz_defect_check(amb.G, g.g2, td.T));
        CHECK(curvature_defect_check(amb.G, amb.R, g.g2, td.T));
    }
}

TEST_CASE("Leibniz defect detects a wrong torsion") {
    const LoadedGeometry g = load("solv_s.json");
    const Ambient amb = make_ambient(g.L, g.g2);
    const TorsionData td = torsion_forms(g.L, g.g2);
    CHECK_FALSE(leibniz_defect_check(amb.G, g.g2, -td.T));
}

TEST_CASE("normal connection of the solvable example") {
    const LoadedGeometry s = load("solv_s.json");
    const Ambient amb = make_ambient(s.L, s.g2);
    const AssocFrame fr = check_associative(s.L, s.g2, {4, 5, 6});
    const auto N = normal_connection(amb.G, fr);
    for (int i = 0; i < 3; ++i) {
        CHECK(N[i] == -N[i].transpose());
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) CHECK(N[i](l, k) == dot(nabla(amb.G, fr.f[i], fr.eta[k]), fr.eta[l]));
    }
    CHECK(ricci_equation_check(amb, fr));
}

TEST_CASE("adapted frames are calibrated and associative") {
    const std::vector<std::pair<const char*, std::array<int, 3>>> cases = {
        {"solv_s.json", {4, 5, 6}}, {"flat_r7.json", {0, 1, 2}}, {"flat_r7.json", {1, 3, 5}},
        {"flat_r7.json", {2, 4, 5}}, {"n28_times_r.json", {4, 5, 6}}};
    for (const auto& [name, span] : cases) {
        const LoadedGeometry g = load(name);
        if (!is_subalgebra(g.L, {span.begin(), span.end()})) continue;
        const AssocFrame fr = check_associative(g.L, g.g2, span);
        CHECK(g.g2.phi().evaluate({fr.f[0], fr.f[1], fr.f[2]}) == 1);
        CHECK(is_zero(associator(fr.f[0], fr.f[1], fr.f[2], g.g2)));
    }
}

TEST_CASE("op_B against a brute-force double sum on synthetic data") {
    const G2Data g2 = model_phi(Convention::plus);
    const LieAlgebraStructure flat = algebra({"0", "0", "0", "0", "0", "0", "0"});
    const AssocFrame fr = check_associative(flat, g2, {0, 1, 2});
    for (int t = 0; t < 5; ++t) {
        // Random symmetric shape operators, B dual to them.
        ShapeData sd;
        for (int k = 0; k < 4; ++k) {
            Matrix m(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = random_rational();
            sd.S[k] = m;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Vector b(4);
                for (int k = 0; k < 4; ++k) b[k] = sd.S[k](j, i);
                sd.B[i][j] = b;
            }
        CHECK(shape_duality_check(sd));
        const Vector sigma = random_vector(4);
        Vector expect = zero_vector(7);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                // S_sigma(e_i) in tangent coordinates, then B(e_j, .) by bilinearity.
                Vector Bj = zero_vector(4);
                for (int m = 0; m < 3; ++m) {
                    Rational smi = 0;
                    for (int k = 0; k < 4; ++k) smi += sigma[k] * sd.S[k](m, i);
                    Bj = Bj + smi * sd.B[j][m];
                }
                expect = expect + cross(cross(fr.f[i], fr.f[j], g2), fr.ambient(Bj), g2);
            }
        CHECK(op_B(sd, g2, fr, sigma) == fr.normal_coords(expect));
    }
}
