#include "g2weitz/torsion.hpp"

namespace g2w {

std::string to_string(FGLabel l) {
    switch (l) {
        case FGLabel::torsion_free: return "torsion_free";
        case FGLabel::nearly_parallel: return "nearly_parallel";
        case FGLabel::locally_conformal_calibrated: return "locally_conformal_calibrated";
        default: return "generic";
    }
}

static KForm covector(int i) { return KForm::basis(7, {i}); }

static KForm one_form(const Vector& x) {
    KForm f(7, 1);
    for (int i = 0; i < 7; ++i) f.add_term(indices_mask({i}), x[i]);
    return f;
}

// Coefficients x with sum x_i e^i ^ base closest to target.
static Vector wedge_coefficients(const KForm& base, const KForm& target) {
    std::vector<Vector> cols;
    for (int i = 0; i < 7; ++i) cols.push_back(to_coords(wedge(covector(i), base)));
    return project_coefficients(cols, to_coords(target));
}

TorsionData torsion_forms(const LieAlgebraStructure& L, const G2Data& g2) {
    if (L.dim() != 7) throw DimensionError("torsion needs a 7-dimensional algebra");
    const KForm dphi = ce_differential(L, g2.phi());
    const KForm dpsi = ce_differential(L, g2.psi());
    TorsionData td;
    td.tau0 = form_inner(dphi, g2.psi()) / 7;
    const KForm rest = dphi - td.tau0 * g2.psi();
    td.tau1 = one_form(Rational(1, 3) * wedge_coefficients(g2.phi(), rest));
    const KForm from_psi = one_form(Rational(1, 4) * wedge_coefficients(g2.psi(), dpsi));
    if (!(from_psi == td.tau1))
        throw TorsionError("tau1 from d(phi) and d(psi) disagree; input is not a consistent G2 structure");
    td.tau3 = hodge(rest - 3 * wedge(td.tau1, g2.phi()));
    td.tau2 = hodge(dpsi - 4 * wedge(td.tau1, g2.psi()));
    if (!membership_check(g2, td)) throw TorsionError("tau2 or tau3 fails its membership condition");
    td.T = full_torsion_from_forms(td, g2);
    return td;
}

static KForm eta_of(const Matrix& h, const G2Data& g2) {
    KForm f(7, 3);
    for (Mask m : masks_of_degree(7, 3)) {
        auto x = mask_indices(m);
        const int a = x[0], b = x[1], c = x[2];
        Rational v = 0;
        for (int k = 0; k < 7; ++k)
            v += h(a, k) * g2.phi_at(k, b, c) + h(b, k) * g2.phi_at(a, k, c) + h(c, k) * g2.phi_at(a, b, k);
        f.add_term(m, v);
    }
    return f;
}

Matrix tau3_avatar(const KForm& tau3, const G2Data& g2) {
    std::vector<std::pair<int, int>> slots;
    std::vector<Vector> cols;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            Matrix h(7, 7);
            h(i, j) = 1;
            h(j, i) = 1;
            slots.emplace_back(i, j);
            cols.push_back(to_coords(eta_of(h, g2)));
        }
    auto x = solve(Matrix::from_columns(cols), to_coords(tau3));
    if (!x) throw TorsionError("tau3 is not of the symmetric-tensor form");
    Matrix h(7, 7);
    for (size_t n = 0; n < slots.size(); ++n) {
        h(slots[n].first, slots[n].second) = (*x)[n];
        h(slots[n].second, slots[n].first) = (*x)[n];
    }
    return h;
}

Matrix tau1_avatar(const KForm& tau1, const G2Data& g2) {
    Matrix a(7, 7);
    for (int l = 0; l < 7; ++l)
        for (int m = 0; m < 7; ++m)
            for (int k = 0; k < 7; ++k) a(l, m) += tau1.coeff(indices_mask({k})) * g2.phi_at(k, l, m);
    return a;
}

// The two conventions differ by an orientation reversal, which flips the
// parity of the tau1 and tau2 pieces relative to psi = *phi.
Matrix full_torsion_from_forms(const TorsionData& td, const G2Data& g2) {
    const Rational s = g2.convention() == Convention::minus ? 1 : -1;
    Matrix t2(7, 7);
    for (int l = 0; l < 7; ++l)
        for (int m = 0; m < 7; ++m)
            if (l != m) t2(l, m) = td.tau2.component({l, m});
    return (td.tau0 / 4) * Matrix::identity(7) - tau3_avatar(td.tau3, g2) + s * tau1_avatar(td.tau1, g2) -
           (s / 2) * t2;
}

Matrix full_torsion_from_nabla_phi(const LieAlgebraStructure& L, const ChristoffelTable& G, const G2Data& g2) {
    if (L.dim() != 7) throw DimensionError("torsion needs a 7-dimensional algebra");
    Tensor4 nphi(7);
    for (int l = 0; l < 7; ++l)
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                for (int c = 0; c < 7; ++c) {
                    Rational s = 0;
                    for (int m = 0; m < 7; ++m)
                        s -= G(l, a, m) * g2.phi_at(m, b, c) + G(l, b, m) * g2.phi_at(a, m, c) +
                             G(l, c, m) * g2.phi_at(a, b, m);
                    nphi(l, a, b, c) = s;
                }
    // Contracting with psi and using psi_mabc psi_nabc = 24 delta_mn isolates T.
    Matrix T(7, 7);
    for (int l = 0; l < 7; ++l)
        for (int n = 0; n < 7; ++n) {
            Rational s = 0;
            for (int a = 0; a < 7; ++a)
                for (int b = 0; b < 7; ++b)
                    for (int c = 0; c < 7; ++c)
                        if (sgn(g2.psi_at(n, a, b, c))) s += nphi(l, a, b, c) * g2.psi_at(n, a, b, c);
            T(l, n) = s / 24;
        }
    for (int l = 0; l < 7; ++l)
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                for (int c = 0; c < 7; ++c) {
                    Rational s = 0;
                    for (int m = 0; m < 7; ++m) s += T(l, m) * g2.psi_at(m, a, b, c);
                    if (s != nphi(l, a, b, c)) throw TorsionError("nabla phi is not of the form T . psi");
                }
    return T;
}

FGClass classify(const TorsionData& td) {
    const bool z0 = sgn(td.tau0) == 0, z1 = td.tau1.is_zero(), z2 = td.tau2.is_zero(), z3 = td.tau3.is_zero();
    FGLabel l = FGLabel::generic;
    if (z0 && z1 && z2 && z3)
        l = FGLabel::torsion_free;
    else if (!z0 && z1 && z2 && z3)
        l = FGLabel::nearly_parallel;
    else if (z0 && z3)
        l = FGLabel::locally_conformal_calibrated;
    return {l, td};
}

Rational nabla_psi_formula(const Matrix& T, const G2Data& g2, int l, int r, int s, int t, int u) {
    return -T(l, r) * g2.phi_at(s, t, u) + T(l, s) * g2.phi_at(r, t, u) - T(l, t) * g2.phi_at(r, s, u) +
           T(l, u) * g2.phi_at(r, s, t);
}

bool nabla_psi_check(const ChristoffelTable& G, const G2Data& g2, const Matrix& T) {
    for (int l = 0; l < 7; ++l)
        for (int r = 0; r < 7; ++r)
            for (int s = 0; s < 7; ++s)
                for (int t = 0; t < 7; ++t)
                    for (int u = 0; u < 7; ++u) {
                        Rational lhs = 0;
                        for (int m = 0; m < 7; ++m)
                            lhs -= G(l, r, m) * g2.psi_at(m, s, t, u) + G(l, s, m) * g2.psi_at(r, m, t, u) +
                                   G(l, t, m) * g2.psi_at(r, s, m, u) + G(l, u, m) * g2.psi_at(r, s, t, m);
                        if (lhs != nabla_psi_formula(T, g2, l, r, s, t, u)) return false;
                    }
    return true;
}

bool membership_check(const G2Data& g2, const TorsionData& td) {
    if (!wedge(td.tau2, g2.psi()).is_zero()) return false;
    if (sgn(form_inner(td.tau3, g2.phi()))) return false;
    for (int i = 0; i < 7; ++i)
        if (sgn(form_inner(td.tau3, interior(basis_vector(7, i), g2.psi())))) return false;
    return true;
}

bool reassembly_check(const LieAlgebraStructure& L, const G2Data& g2, const TorsionData& td) {
    const KForm dphi = td.tau0 * g2.psi() + 3 * wedge(td.tau1, g2.phi()) + hodge(td.tau3);
    const KForm dpsi = 4 * wedge(td.tau1, g2.psi()) + hodge(td.tau2);
    return dphi == ce_differential(L, g2.phi()) && dpsi == ce_differential(L, g2.psi());
}

}  // namespace g2w
