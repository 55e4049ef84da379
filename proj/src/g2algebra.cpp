#include "g2weitz/g2algebra.hpp"

namespace g2w {

std::string to_string(Convention c) { return c == Convention::plus ? "plus" : "minus"; }

Convention parse_convention(const std::string& s) {
    if (s == "plus") return Convention::plus;
    if (s == "minus") return Convention::minus;
    throw std::invalid_argument("convention must be plus or minus, got '" + s + "'");
}

static KForm e3(int a, int b, int c, int s = 1) { return KForm::basis(7, {a - 1, b - 1, c - 1}, s); }

KForm model_phi_form(Convention conv) {
    if (conv == Convention::plus)
        return e3(1, 2, 3) + e3(1, 4, 5) + e3(1, 6, 7) + e3(2, 4, 6) - e3(2, 5, 7) - e3(3, 4, 7) - e3(3, 5, 6);
    return e3(5, 6, 7) + e3(1, 2, 5) + e3(1, 3, 6) + e3(2, 4, 6) + e3(1, 4, 7) - e3(3, 4, 5) - e3(2, 3, 7);
}

G2Data model_phi(Convention conv) { return G2Data(model_phi_form(conv), conv); }

G2Data::G2Data(const KForm& phi, Convention conv) : phi_(phi), conv_(conv) {
    if (phi.dim() != 7 || phi.degree() != 3) throw G2Error("phi must be a 3-form on R^7");
    if (!metric_compat_check(phi, conv))
        throw G2Error("phi fails the metric relation for the " + to_string(conv) + " convention");
    psi_ = hodge(phi_);
    phi3_.assign(343, Rational(0));
    psi4_.assign(2401, Rational(0));
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int c = 0; c < 7; ++c) {
                phi3_[(a * 7 + b) * 7 + c] = phi_.component({a, b, c});
                for (int d = 0; d < 7; ++d) psi4_[((a * 7 + b) * 7 + c) * 7 + d] = psi_.component({a, b, c, d});
            }
}

Vector cross(const Vector& u, const Vector& v, const G2Data& g2) {
    if (u.size() != 7 || v.size() != 7) throw DimensionError("cross product needs 7-vectors");
    Vector r = zero_vector(7);
    for (int a = 0; a < 7; ++a) {
        if (sgn(u[a]) == 0) continue;
        for (int b = 0; b < 7; ++b) {
            if (sgn(v[b]) == 0) continue;
            Rational uv = u[a] * v[b];
            for (int k = 0; k < 7; ++k)
                if (sgn(g2.phi_at(a, b, k))) r[k] += uv * g2.phi_at(a, b, k);
        }
    }
    return r;
}

Vector associator(const Vector& u, const Vector& v, const Vector& w, const G2Data& g2) {
    if (u.size() != 7 || v.size() != 7 || w.size() != 7) throw DimensionError("associator needs 7-vectors");
    Vector r = zero_vector(7);
    for (int a = 0; a < 7; ++a) {
        if (sgn(u[a]) == 0) continue;
        for (int b = 0; b < 7; ++b) {
            if (sgn(v[b]) == 0) continue;
            for (int c = 0; c < 7; ++c) {
                if (sgn(w[c]) == 0) continue;
                Rational uvw = u[a] * v[b] * w[c];
                for (int k = 0; k < 7; ++k)
                    if (sgn(g2.psi_at(a, b, c, k))) r[k] += uvw * g2.psi_at(a, b, c, k);
            }
        }
    }
    return r;
}

int metric_sign(const KForm& phi) {
    if (phi.dim() != 7 || phi.degree() != 3) return 0;
    const KForm vol = KForm::volume(7);
    std::vector<KForm> contr;
    for (int i = 0; i < 7; ++i) contr.push_back(interior(basis_vector(7, i), phi));
    int sign = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            KForm w = wedge(wedge(contr[i], contr[j]), phi);
            if (i != j) {
                if (!w.is_zero()) return 0;
                continue;
            }
            Rational c = w.coeff(static_cast<Mask>(0x7f));
            int s = c == 6 ? 1 : (c == -6 ? -1 : 0);
            if (s == 0 || (sign != 0 && s != sign)) return 0;
            sign = s;
        }
    return sign;
}

bool metric_compat_check(const KForm& phi, Convention conv) {
    return metric_sign(phi) == (conv == Convention::plus ? 1 : -1);
}

static std::vector<Vector> contraction_coords(const KForm& form) {
    std::vector<Vector> cols;
    for (int i = 0; i < 7; ++i) cols.push_back(to_coords(interior(basis_vector(7, i), form)));
    return cols;
}

static KForm project_onto(const std::vector<Vector>& cols, const KForm& x) {
    Vector a = project_coefficients(cols, to_coords(x));
    Vector p = zero_vector(static_cast<int>(cols[0].size()));
    for (size_t i = 0; i < cols.size(); ++i) p = p + a[i] * cols[i];
    return from_coords(x.dim(), x.degree(), p);
}

TwoFormSplit project_two_forms(const KForm& beta, const G2Data& g2) {
    if (beta.dim() != 7 || beta.degree() != 2) throw DimensionError("expected a 2-form on R^7");
    KForm b7 = project_onto(contraction_coords(g2.phi()), beta);
    return {b7, beta - b7};
}

ThreeFormSplit project_three_forms(const KForm& eta, const G2Data& g2) {
    if (eta.dim() != 7 || eta.degree() != 3) throw DimensionError("expected a 3-form on R^7");
    KForm e1 = (form_inner(eta, g2.phi()) / 7) * g2.phi();
    KForm e7 = project_onto(contraction_coords(g2.psi()), eta);
    return {e1, e7, eta - e1 - e7};
}

DecompositionRanks decomposition_ranks(const G2Data& g2) {
    DecompositionRanks r{};
    r.omega2_7 = rank(Matrix::from_columns(contraction_coords(g2.phi())));
    // beta -> beta ^ psi on the 21 basis 2-forms; Omega^2_14 is its kernel.
    std::vector<Vector> images;
    for (Mask m : masks_of_degree(7, 2)) {
        KForm b(7, 2);
        b.add_term(m, 1);
        images.push_back(to_coords(wedge(b, g2.psi())));
    }
    r.omega2_14 = static_cast<int>(kernel(Matrix::from_columns(images)).size());
    r.omega3_1 = rank(Matrix::from_columns({to_coords(g2.phi())}));
    r.omega3_7 = rank(Matrix::from_columns(contraction_coords(g2.psi())));
    std::vector<Vector> gens = contraction_coords(g2.psi());
    gens.push_back(to_coords(g2.phi()));
    // Omega^3_27 = orthogonal complement of the span of gens.
    r.omega3_27 = static_cast<int>(kernel(Matrix::from_columns(gens).transpose()).size());
    return r;
}

ModelIdentities model_identities(const G2Data& g2) {
    ModelIdentities id{0, Matrix(7, 7)};
    for (int r = 0; r < 7; ++r)
        for (int a = 0; a < 7; ++a) {
            Rational s = 0;
            for (int st = 0; st < 7; ++st)
                for (int t = 0; t < 7; ++t)
                    for (int u = 0; u < 7; ++u) s += g2.psi_at(r, st, t, u) * g2.psi_at(a, st, t, u);
            id.triple_contraction(r, a) = s;
            if (r == a) id.full_contraction += s;
        }
    return id;
}

KForm pullback(const KForm& alpha, const Matrix& a) {
    const int n = alpha.dim();
    if (a.rows() != n || a.cols() != n) throw DimensionError("pullback matrix shape mismatch");
    KForm r(n, alpha.degree());
    for (Mask m : masks_of_degree(n, alpha.degree())) {
        std::vector<Vector> vs;
        for (int i : mask_indices(m)) vs.push_back(a.column(i));
        r.add_term(m, alpha.evaluate(vs));
    }
    return r;
}

Matrix convention_automorphism() {
    Matrix a(7, 7);
    for (int r = 0; r < 3; ++r) a(r, 4 + r) = 1;
    for (int r = 0; r < 3; ++r) a(3 + r, r) = 1;
    a(6, 3) = -1;
    return a;
}

}  // namespace g2w
