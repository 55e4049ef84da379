#include "g2weitz/associative.hpp"

#include "g2weitz/torsion.hpp"

#include <algorithm>

namespace g2w {

Vector AssocFrame::ambient(const Vector& c) const {
    Vector v = zero_vector(7);
    for (int k = 0; k < 4; ++k) v[normal[k]] += c[k];
    return v;
}

Vector AssocFrame::normal_coords(const Vector& v) const {
    Vector c(4);
    for (int k = 0; k < 4; ++k) c[k] = v[normal[k]];
    return c;
}

Vector AssocFrame::tangent_coords(const Vector& v) const {
    Vector c(3);
    for (int i = 0; i < 3; ++i) c[i] = dot(v, f[i]);
    return c;
}

Ambient make_ambient(const LieAlgebraStructure& L, const G2Data& g2) {
    Ambient a{L, christoffel(L), {}, g2};
    a.R = curvature(L, a.G);
    return a;
}

AssocFrame check_associative(const LieAlgebraStructure& L, const G2Data& g2, std::array<int, 3> span) {
    for (int i : span)
        if (i < 0 || i >= 7) throw AssocError("span index out of range");
    if (span[0] == span[1] || span[0] == span[2] || span[1] == span[2]) throw AssocError("span indices must be distinct");
    std::vector<int> idx(span.begin(), span.end());
    if (!is_subalgebra(L, idx)) throw AssocError("span is not a subalgebra");
    AssocFrame fr;
    fr.tangent = span;
    int n = 0;
    for (int k = 0; k < 7; ++k)
        if (std::find(idx.begin(), idx.end(), k) == idx.end()) fr.normal[n++] = k;
    const Rational v = g2.phi_at(span[0], span[1], span[2]);
    if (v != 1 && v != -1) throw AssocError("span is not calibrated: phi restricts to " + v.get_str() + " vol");
    fr.orientation_sign = v == 1 ? 1 : -1;
    for (int i = 0; i < 3; ++i) fr.f[i] = basis_vector(7, span[i]);
    fr.f[2] = fr.orientation_sign * fr.f[2];
    for (int k = 0; k < 4; ++k) fr.eta[k] = basis_vector(7, fr.normal[k]);
    if (!is_zero(associator(fr.f[0], fr.f[1], fr.f[2], g2))) throw AssocError("associator does not vanish on the span");
    return fr;
}

static int permutation_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

bool self_dual_iso_check(const AssocFrame& fr, const G2Data& g2) {
    // Orientation of (f, eta) relative to the one phi induces.
    std::vector<int> order(fr.tangent.begin(), fr.tangent.end());
    order.insert(order.end(), fr.normal.begin(), fr.normal.end());
    const int phi_orient = g2.convention() == Convention::plus ? 1 : -1;
    const int s = permutation_sign(order) * fr.orientation_sign * phi_orient;
    std::array<KForm, 3> omega;
    for (int a = 0; a < 3; ++a) {
        KForm w = interior(fr.f[a], g2.phi());
        KForm r(4, 2);
        for (int k = 0; k < 4; ++k)
            for (int l = k + 1; l < 4; ++l) r.add_term(indices_mask({k, l}), w.component({fr.normal[k], fr.normal[l]}));
        omega[a] = a == 2 ? -r : r;
    }
    const Rational n0 = form_inner(omega[0], omega[0]);
    if (sgn(n0) == 0) return false;
    for (int a = 0; a < 3; ++a) {
        if (!(s * hodge(omega[a]) == omega[a])) return false;
        if (form_inner(omega[a], omega[a]) != n0) return false;
        for (int b = a + 1; b < 3; ++b)
            if (sgn(form_inner(omega[a], omega[b]))) return false;
    }
    return true;
}

ShapeData shape_data(const ChristoffelTable& G, const AssocFrame& fr) {
    ShapeData sd;
    for (int k = 0; k < 4; ++k) {
        sd.S[k] = Matrix(3, 3);
        for (int i = 0; i < 3; ++i) {
            Vector d = nabla(G, fr.f[i], fr.eta[k]);
            for (int j = 0; j < 3; ++j) sd.S[k](j, i) = -dot(d, fr.f[j]);
        }
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sd.B[i][j] = fr.normal_coords(nabla(G, fr.f[i], fr.f[j]));
    return sd;
}

Matrix shape_operator(const ShapeData& sd, const Vector& sigma) {
    Matrix m(3, 3);
    for (int k = 0; k < 4; ++k)
        if (sgn(sigma[k])) m += sigma[k] * sd.S[k];
    return m;
}

Vector second_fundamental_form(const ShapeData& sd, const Vector& u, const Vector& v) {
    Vector r = zero_vector(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (sgn(u[i]) && sgn(v[j])) r = r + (u[i] * v[j]) * sd.B[i][j];
    return r;
}

bool shape_duality_check(const ShapeData& sd) {
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (sd.B[i][j][k] != sd.S[k](j, i)) return false;
    return true;
}

bool totally_geodesic(const ShapeData& sd) {
    return std::all_of(sd.S.begin(), sd.S.end(), [](const Matrix& m) { return m.is_zero(); });
}

Vector op_A(const ShapeData& sd, const Vector& sigma) {
    const Matrix Ss = shape_operator(sd, sigma);
    Vector r = zero_vector(4);
    for (int l = 0; l < 4; ++l)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[l] += Ss(j, i) * sd.S[l](j, i);
    return r;
}

Vector op_B(const ShapeData& sd, const G2Data& g2, const AssocFrame& fr, const Vector& sigma) {
    const Matrix Ss = shape_operator(sd, sigma);
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) {
        const Vector Sfi = Ss.column(i);
        for (int j = 0; j < 3; ++j) {
            Vector ej = zero_vector(3);
            ej[j] = 1;
            Vector b = fr.ambient(second_fundamental_form(sd, ej, Sfi));
            if (is_zero(b)) continue;
            out = out + cross(cross(fr.f[i], fr.f[j], g2), b, g2);
        }
    }
    return fr.normal_coords(out);
}

Vector partial_ricci(const CurvatureTensor& R, const AssocFrame& fr, const Vector& sigma) {
    const Vector s = fr.ambient(sigma);
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) out = out + curvature_apply(R, fr.f[i], s, fr.f[i]);
    return fr.normal_coords(out);
}

static Rational bilinear(const Matrix& T, const Vector& u, const Vector& v) {
    Rational s = 0;
    for (int a = 0; a < 7; ++a) {
        if (sgn(u[a]) == 0) continue;
        for (int b = 0; b < 7; ++b)
            if (sgn(v[b])) s += u[a] * T(a, b) * v[b];
    }
    return s;
}

static Rational trilinear(const Tensor3& t, const Vector& w, const Vector& u, const Vector& v) {
    Rational s = 0;
    for (int c = 0; c < 7; ++c) {
        if (sgn(w[c]) == 0) continue;
        for (int a = 0; a < 7; ++a) {
            if (sgn(u[a]) == 0) continue;
            for (int b = 0; b < 7; ++b)
                if (sgn(v[b])) s += w[c] * u[a] * v[b] * t(c, a, b);
        }
    }
    return s;
}

// Sharp of (nabla_w psi)(e_m, u, v, .), via the corollary formula.
static Vector nabla_psi_sharp(const Matrix& T, const G2Data& g2, const Vector& w, int m, const Vector& u,
                              const Vector& v) {
    Vector out = zero_vector(7);
    // Tw_r = T(w, e_r); the formula is linear in the first slot.
    Matrix Tw(7, 7);
    for (int r = 0; r < 7; ++r)
        for (int l = 0; l < 7; ++l)
            if (sgn(w[l])) Tw(0, r) += w[l] * T(l, r);
    for (int p = 0; p < 7; ++p) {
        if (sgn(u[p]) == 0) continue;
        for (int q = 0; q < 7; ++q) {
            if (sgn(v[q]) == 0) continue;
            const Rational uv = u[p] * v[q];
            for (int k = 0; k < 7; ++k)
                out[k] += uv * nabla_psi_formula(Tw, g2, 0, m, p, q, k);
        }
    }
    return out;
}

Vector calT(const G2Data& g2, const Matrix& T, const Tensor3& nablaT, const Vector& w, const Vector& z,
            const Vector& u, const Vector& v) {
    Vector out = zero_vector(7);
    for (int m = 0; m < 7; ++m) {
        const Vector em = basis_vector(7, m);
        const Rational a = bilinear(T, z, em);
        const Rational b = bilinear(T, w, em);
        if (sgn(a)) out = out + a * nabla_psi_sharp(T, g2, w, m, u, v);
        if (sgn(b)) out = out - b * nabla_psi_sharp(T, g2, z, m, u, v);
        const Rational c = trilinear(nablaT, w, z, em) - trilinear(nablaT, z, w, em);
        if (sgn(c)) out = out + c * associator(em, u, v, g2);
    }
    return out;
}

Vector calT_sum(const G2Data& g2, const Matrix& T, const Tensor3& nablaT, const AssocFrame& fr,
                const Vector& sigma) {
    const Vector s = fr.ambient(sigma);
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) {
        const Vector& fi = fr.f[i];
        const Vector& fn = fr.f[(i + 1) % 3];
        out = out + cross(fi, calT(g2, T, nablaT, fn, s, fi, fn), g2);
    }
    return fr.normal_coords(out);
}

bool leibniz_defect_check(const ChristoffelTable& G, const G2Data& g2, const Matrix& T) {
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            const Vector u = basis_vector(7, a), v = basis_vector(7, b);
            const Vector uv = cross(u, v, g2);
            for (int c = 0; c < 7; ++c) {
                const Vector z = basis_vector(7, c);
                Vector d = nabla(G, z, uv) - cross(nabla(G, z, u), v, g2) - cross(u, nabla(G, z, v), g2);
                for (int m = 0; m < 7; ++m)
                    if (sgn(T(c, m))) d = d - T(c, m) * associator(basis_vector(7, m), u, v, g2);
                if (!is_zero(d)) return false;
            }
        }
    return true;
}

bool curvature_defect_check(const ChristoffelTable& G, const CurvatureTensor& R, const G2Data& g2,
                            const Matrix& T) {
    const Tensor3 nT = nabla_invariant_tensor(G, T);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            const Vector w = basis_vector(7, a), z = basis_vector(7, b);
            for (int c = 0; c < 7; ++c)
                for (int d = 0; d < 7; ++d) {
                    const Vector u = basis_vector(7, c), v = basis_vector(7, d);
                    Vector lhs = curvature_apply(R, w, z, cross(u, v, g2));
                    Vector rhs = cross(curvature_apply(R, w, z, u), v, g2) + cross(u, curvature_apply(R, w, z, v), g2) +
                                 calT(g2, T, nT, w, z, u, v);
                    if (lhs != rhs) return false;
                }
        }
    return true;
}

std::array<Matrix, 3> normal_connection(const ChristoffelTable& G, const AssocFrame& fr) {
    std::array<Matrix, 3> N;
    for (int i = 0; i < 3; ++i) {
        N[i] = Matrix(4, 4);
        for (int k = 0; k < 4; ++k) N[i].set_column(k, fr.normal_coords(nabla(G, fr.f[i], fr.eta[k])));
    }
    return N;
}

Matrix normal_curvature(const LieAlgebraStructure& L, const std::array<Matrix, 3>& N, const AssocFrame& fr, int i,
                        int j) {
    Matrix r = N[i] * N[j] - N[j] * N[i];
    const Vector br = fr.tangent_coords(L.bracket(fr.f[i], fr.f[j]));
    for (int m = 0; m < 3; ++m)
        if (sgn(br[m])) r -= br[m] * N[m];
    return r;
}

bool ricci_equation_check(const Ambient& amb, const AssocFrame& fr) {
    const auto N = normal_connection(amb.G, fr);
    const ShapeData sd = shape_data(amb.G, fr);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Matrix Rp = normal_curvature(amb.L, N, fr, i, j);
            for (int s = 0; s < 4; ++s)
                for (int n = 0; n < 4; ++n) {
                    const Rational amb_term = dot(curvature_apply(amb.R, fr.f[i], fr.f[j], fr.eta[s]), fr.eta[n]);
                    const Matrix comm = sd.S[s] * sd.S[n] - sd.S[n] * sd.S[s];
                    if (Rp(n, s) != amb_term + comm(j, i)) return false;
                }
        }
    return true;
}

}  // namespace g2w
