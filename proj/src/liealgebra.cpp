#include "g2weitz/liealgebra.hpp"

#include <algorithm>

namespace g2w {

LieAlgebraStructure::LieAlgebraStructure(const std::vector<KForm>& de) : de_(de) {
    const int n = static_cast<int>(de.size());
    if (n < 1 || n > kMaxDim) throw DimensionError("Lie algebra dimension must lie in 1..9");
    for (const auto& f : de)
        if (f.dim() != n || f.degree() != 2) throw DimensionError("structure equations must be 2-forms of the algebra's dimension");
    c_ = Tensor3(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) c_(i, j, k) = -de[k].component({i, j});
}

LieAlgebraStructure LieAlgebraStructure::from_constants(const Tensor3& c) {
    const int n = c.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (c(i, j, k) != -c(j, i, k)) throw LieError("structure constants are not antisymmetric");
    std::vector<KForm> de;
    for (int k = 0; k < n; ++k) {
        KForm f(n, 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) f.add_term(indices_mask({i, j}), -c(i, j, k));
        de.push_back(f);
    }
    return LieAlgebraStructure(de);
}

Vector LieAlgebraStructure::bracket(const Vector& x, const Vector& y) const {
    const int n = dim();
    Vector r = zero_vector(n);
    for (int i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (int k = 0; k < n; ++k)
                if (sgn(c_(i, j, k))) r[k] += x[i] * y[j] * c_(i, j, k);
        }
    }
    return r;
}

bool jacobi_check(const LieAlgebraStructure& L) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                Vector s = L.bracket(L.bracket(ei, ej), ek) + L.bracket(L.bracket(ej, ek), ei) +
                           L.bracket(L.bracket(ek, ei), ej);
                if (!is_zero(s)) return false;
            }
    return true;
}

// d(e^{i1} ^ rest) = de^{i1} ^ rest - e^{i1} ^ d(rest), unrolled over the sorted indices.
KForm ce_differential(const LieAlgebraStructure& L, const KForm& alpha) {
    const int n = L.dim();
    if (alpha.dim() != n) throw DimensionError("form dimension differs from the algebra's");
    KForm r(n, alpha.degree() + 1);
    if (r.degree() > n) return r;
    for (const auto& [m, c] : alpha.terms()) {
        auto idx = mask_indices(m);
        for (size_t p = 0; p < idx.size(); ++p) {
            KForm left = KForm::scalar(n, (p % 2) ? Rational(-c) : c);
            for (size_t q = 0; q < p; ++q) left = wedge(left, KForm::basis(n, {idx[q]}));
            KForm t = wedge(left, L.de()[idx[p]]);
            for (size_t q = p + 1; q < idx.size(); ++q) t = wedge(t, KForm::basis(n, {idx[q]}));
            r += t;
        }
    }
    return r;
}

bool dd_zero(const LieAlgebraStructure& L) {
    return std::all_of(L.de().begin(), L.de().end(),
                       [&](const KForm& f) { return ce_differential(L, f).is_zero(); });
}

static void require_jacobi(const LieAlgebraStructure& L) {
    if (!jacobi_check(L)) throw LieError("structure constants violate the Jacobi identity");
}

ChristoffelTable christoffel(const LieAlgebraStructure& L) {
    require_jacobi(L);
    const int n = L.dim();
    const Tensor3& c = L.c();
    ChristoffelTable G(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) G(i, j, k) = (c(i, j, k) - c(j, k, i) + c(k, i, j)) / 2;
    return G;
}

CurvatureTensor curvature(const LieAlgebraStructure& L, const ChristoffelTable& G) {
    const int n = L.dim();
    const Tensor3& c = L.c();
    CurvatureTensor R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rational& a = G(j, k, l);
                    const Rational& b = G(i, k, l);
                    const Rational& br = c(i, j, l);
                    if (sgn(a) == 0 && sgn(b) == 0 && sgn(br) == 0) continue;
                    for (int m = 0; m < n; ++m) R(i, j, k, m) += a * G(i, l, m) - b * G(j, l, m) - br * G(l, k, m);
                }
    return R;
}

bool christoffel_metric_check(const ChristoffelTable& G) {
    const int n = G.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (G(i, j, k) != -G(i, k, j)) return false;
    return true;
}

bool christoffel_torsion_free_check(const LieAlgebraStructure& L, const ChristoffelTable& G) {
    const int n = G.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (G(i, j, k) - G(j, i, k) != L.c()(i, j, k)) return false;
    return true;
}

bool curvature_antisymmetry_check(const CurvatureTensor& R) {
    const int n = R.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m)
                    if (R(i, j, k, m) != -R(j, i, k, m)) return false;
    return true;
}

bool curvature_bianchi_check(const CurvatureTensor& R) {
    const int n = R.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m)
                    if (sgn(R(i, j, k, m) + R(j, k, i, m) + R(k, i, j, m))) return false;
    return true;
}

// R_ijkl = <R(e_i, e_j) e_k, e_l> = R_klij.
bool curvature_pair_symmetry_check(const CurvatureTensor& R) {
    const int n = R.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (R(i, j, k, l) != R(k, l, i, j)) return false;
    return true;
}

Vector nabla(const ChristoffelTable& G, const Vector& x, const Vector& y) {
    const int n = G.dim();
    Vector r = zero_vector(n);
    for (int i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational xy = x[i] * y[j];
            for (int m = 0; m < n; ++m)
                if (sgn(G(i, j, m))) r[m] += xy * G(i, j, m);
        }
    }
    return r;
}

Vector curvature_apply(const CurvatureTensor& R, const Vector& x, const Vector& y, const Vector& z) {
    const int n = R.dim();
    Vector r = zero_vector(n);
    for (int i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (int k = 0; k < n; ++k) {
                if (sgn(z[k]) == 0) continue;
                Rational xyz = x[i] * y[j] * z[k];
                for (int m = 0; m < n; ++m)
                    if (sgn(R(i, j, k, m))) r[m] += xyz * R(i, j, k, m);
            }
        }
    }
    return r;
}

Tensor3 nabla_invariant_tensor(const ChristoffelTable& G, const Matrix& T) {
    const int n = G.dim();
    Tensor3 t(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                Rational s = 0;
                for (int m = 0; m < n; ++m) s -= G(i, k, m) * T(m, l) + G(i, l, m) * T(k, m);
                t(i, k, l) = s;
            }
    return t;
}

Rational scalar_curvature(const CurvatureTensor& R, const std::vector<int>& indices) {
    Rational k = 0;
    for (int i : indices)
        for (int j : indices) k += R(i, j, j, i);
    return k;
}

bool is_subalgebra(const LieAlgebraStructure& L, const std::vector<int>& indices) {
    for (int a : indices)
        for (int b : indices)
            for (int k = 0; k < L.dim(); ++k)
                if (std::find(indices.begin(), indices.end(), k) == indices.end() && sgn(L.c()(a, b, k)))
                    return false;
    return true;
}

LieAlgebraStructure subalgebra(const LieAlgebraStructure& L, const std::vector<int>& indices) {
    if (!is_subalgebra(L, indices)) throw LieError("span is not closed under the bracket");
    const int m = static_cast<int>(indices.size());
    Tensor3 c(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < m; ++k) c(a, b, k) = L.c()(indices[a], indices[b], indices[k]);
    return LieAlgebraStructure::from_constants(c);
}

}  // namespace g2w
