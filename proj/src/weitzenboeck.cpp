#include "g2weitz/weitzenboeck.hpp"

#include <stdexcept>

namespace g2w {

Matrix weitzenboeck_torsion(const Matrix& T, Convention conv) {
    return conv == Convention::minus ? -T.transpose() : T.transpose();
}

WeitzenboeckSetup make_setup(const Ambient& amb, const AssocFrame& frame, const Matrix& T) {
    const Matrix Top = weitzenboeck_torsion(T, amb.g2.convention());
    return {amb,         frame, T, nabla_invariant_tensor(amb.G, T), Top, nabla_invariant_tensor(amb.G, Top),
            normal_connection(amb.G, frame)};
}

static Rational tb(const WeitzenboeckSetup& w, const Vector& u, const Vector& v) {
    Rational s = 0;
    for (int a = 0; a < 7; ++a) {
        if (sgn(u[a]) == 0) continue;
        for (int b = 0; b < 7; ++b)
            if (sgn(v[b])) s += u[a] * w.Top(a, b) * v[b];
    }
    return s;
}

// (nabla_x T)(u, v)
static Rational ntb(const WeitzenboeckSetup& w, const Vector& x, const Vector& u, const Vector& v) {
    Rational s = 0;
    for (int c = 0; c < 7; ++c) {
        if (sgn(x[c]) == 0) continue;
        for (int a = 0; a < 7; ++a) {
            if (sgn(u[a]) == 0) continue;
            for (int b = 0; b < 7; ++b)
                if (sgn(v[b])) s += x[c] * u[a] * v[b] * w.nablaTop(c, a, b);
        }
    }
    return s;
}

Vector dirac_plain(const WeitzenboeckSetup& w, const NormalJet& jet) {
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) out = out + cross(w.frame.f[i], w.frame.ambient(jet.derivs[i]), w.amb.g2);
    return w.frame.normal_coords(out);
}

Vector dirac_c(const WeitzenboeckSetup& w, const NormalJet& jet) {
    Vector out = zero_vector(7);
    for (int i = 0; i < 2; ++i) out = out + cross(w.frame.f[i], w.frame.ambient(jet.derivs[i]), w.amb.g2);
    return w.frame.normal_coords(out);
}

Vector torsion_twist(const WeitzenboeckSetup& w, const Vector& sigma) {
    const Vector s = w.frame.ambient(sigma);
    Vector r(4);
    for (int k = 0; k < 4; ++k) r[k] = tb(w, s, w.frame.eta[k]);
    return r;
}

Vector fueter_dirac(const WeitzenboeckSetup& w, const NormalJet& jet) {
    return dirac_plain(w, jet) + torsion_twist(w, jet.value);
}

Vector p1(const WeitzenboeckSetup& w, const NormalJet& jet, int c_sign) {
    const auto& f = w.frame.f;
    const auto& g2 = w.amb.g2;
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational tii = tb(w, f[i], f[i]);
            const Rational tji = tb(w, f[j], f[i]);
            if (sgn(tii)) out = out + tii * cross(f[j], w.frame.ambient(jet.derivs[j]), g2);
            if (sgn(tji)) out = out - tji * cross(f[j], w.frame.ambient(jet.derivs[i]), g2);
        }
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const Rational C = (tb(w, f[i], f[j]) - tb(w, f[j], f[i])) / 2;
        if (sgn(C)) out = out - (2 * c_sign * C) * w.frame.ambient(jet.derivs[k]);
    }
    return w.frame.normal_coords(out);
}

Vector p2(const WeitzenboeckSetup& w, const NormalJet& jet) {
    const auto& fr = w.frame;
    const Vector s = fr.ambient(jet.value);
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) {
        const Vector d = fr.ambient(jet.derivs[i]);
        for (int l = 0; l < 4; ++l) {
            const Rational c = ntb(w, fr.f[i], s, fr.eta[l]) + tb(w, d, fr.eta[l]);
            if (sgn(c)) out = out + c * cross(fr.f[i], fr.eta[l], w.amb.g2);
        }
    }
    return fr.normal_coords(out);
}

Vector c_term(const WeitzenboeckSetup& w, const NormalJet& jet) {
    const auto& f = w.frame.f;
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const Rational C = (tb(w, f[i], f[j]) - tb(w, f[j], f[i])) / 2;
        if (sgn(C)) out = out - (2 * C) * w.frame.ambient(jet.derivs[k]);
    }
    return w.frame.normal_coords(out);
}

Vector p2_shape(const WeitzenboeckSetup& w, const Vector& sigma) {
    const auto& fr = w.frame;
    const ShapeData sd = shape_data(w.amb.G, fr);
    const Vector s = fr.ambient(sigma);
    // Tangent vector S_v(f_i) from its tangent coordinates.
    auto shape_image = [&](const Matrix& S, int i) {
        Vector out = zero_vector(7);
        for (int j = 0; j < 3; ++j)
            if (sgn(S(j, i))) out = out + S(j, i) * fr.f[j];
        return out;
    };
    const Matrix Ss = shape_operator(sd, sigma);
    Vector out = zero_vector(7);
    for (int i = 0; i < 3; ++i) {
        const Vector a = shape_image(Ss, i);
        for (int l = 0; l < 4; ++l) {
            const Rational c = -tb(w, a, fr.eta[l]) - tb(w, s, shape_image(sd.S[l], i));
            if (sgn(c)) out = out + c * cross(fr.f[i], fr.eta[l], w.amb.g2);
        }
    }
    return fr.normal_coords(out);
}

Vector p3(const WeitzenboeckSetup& w, const NormalJet& jet) {
    const auto& fr = w.frame;
    const Vector s = fr.ambient(jet.value);
    Vector out = zero_vector(4);
    for (int l = 0; l < 4; ++l) {
        Rational c = tb(w, s, fr.eta[l]);
        for (int i = 0; i < 3; ++i) c += w.amb.g2.phi().evaluate({fr.f[i], fr.ambient(jet.derivs[i]), fr.eta[l]});
        if (sgn(c) == 0) continue;
        for (int k = 0; k < 4; ++k) out[k] += c * tb(w, fr.eta[l], fr.eta[k]);
    }
    return out;
}

Vector op_J(const WeitzenboeckSetup& w, const Vector& sigma) {
    const Vector e = basis_vector(7, w.frame.tangent[2]);
    return w.frame.normal_coords(cross(e, w.frame.ambient(sigma), w.amb.g2));
}

Vector nabla_third(const WeitzenboeckSetup& w, const NormalJet& jet) {
    return Rational(w.frame.orientation_sign) * jet.derivs[2];
}

NormalJet invariant_jet(const WeitzenboeckSetup& w, const Vector& sigma) {
    NormalJet j{sigma, {}};
    for (int i = 0; i < 3; ++i) j.derivs[i] = w.N[i] * sigma;
    return j;
}

NormalJet invariant_jet_direct(const WeitzenboeckSetup& w, const Vector& sigma) {
    NormalJet j{sigma, {}};
    const Vector s = w.frame.ambient(sigma);
    for (int i = 0; i < 3; ++i) j.derivs[i] = w.frame.normal_coords(nabla(w.amb.G, w.frame.f[i], s));
    return j;
}

std::string to_string(OpId id) {
    switch (id) {
        case OpId::Dplain: return "Dplain";
        case OpId::DA: return "DA";
        case OpId::P1: return "P1";
        case OpId::P2: return "P2";
        case OpId::P3: return "P3";
        case OpId::J: return "J";
        case OpId::Dc: return "Dc";
        case OpId::nabla7: return "nabla7";
        case OpId::lapl: return "lapl";
        case OpId::curvterm: return "curvterm";
        case OpId::ricciPartial: return "ricciPartial";
        case OpId::opB: return "opB";
        case OpId::opA: return "opA";
        case OpId::tsum: return "tsum";
        case OpId::P2shape: return "P2shape";
        case OpId::Cterm: return "Cterm";
    }
    return "?";
}

const std::vector<OpId>& all_op_ids() {
    static const std::vector<OpId> ids = {OpId::Dplain, OpId::DA,       OpId::P1,   OpId::P2,
                                          OpId::P3,     OpId::J,        OpId::Dc,   OpId::nabla7,
                                          OpId::lapl,   OpId::curvterm, OpId::ricciPartial, OpId::opB,
                                          OpId::opA,    OpId::tsum,     OpId::P2shape,  OpId::Cterm};
    return ids;
}

OpId parse_op_id(const std::string& s) {
    for (OpId id : all_op_ids())
        if (to_string(id) == s) return id;
    throw std::invalid_argument("unknown operator id '" + s + "'");
}

template <class F>
static OperatorMatrix columns_of(F&& op) {
    OperatorMatrix m(4, 4);
    for (int c = 0; c < 4; ++c) m.set_column(c, op(basis_vector(4, c)));
    return m;
}

static OperatorMatrix lapl_matrix(const WeitzenboeckSetup& w) {
    OperatorMatrix m(4, 4);
    for (int i = 0; i < 3; ++i) m -= w.N[i] * w.N[i];
    for (int i = 0; i < 3; ++i) {
        const Vector nii = w.frame.tangent_coords(nabla(w.amb.G, w.frame.f[i], w.frame.f[i]));
        for (int j = 0; j < 3; ++j)
            if (sgn(nii[j])) m += nii[j] * w.N[j];
    }
    return m;
}

static OperatorMatrix curvterm_matrix(const WeitzenboeckSetup& w) {
    const auto& fr = w.frame;
    std::array<std::array<Matrix, 3>, 3> Rp;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) Rp[i][j] = normal_curvature(w.amb.L, w.N, fr, i, j);
    return columns_of([&](const Vector& sigma) {
        Vector out = zero_vector(7);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                out = out - cross(cross(fr.f[i], fr.f[j], w.amb.g2), fr.ambient(Rp[i][j] * sigma), w.amb.g2);
        return fr.normal_coords(out);
    });
}

OperatorMatrix invariant_matrix(const WeitzenboeckSetup& w, OpId id) {
    auto jet_op = [&](auto&& f) { return columns_of([&](const Vector& s) { return f(invariant_jet(w, s)); }); };
    switch (id) {
        case OpId::Dplain: return jet_op([&](const NormalJet& j) { return dirac_plain(w, j); });
        case OpId::DA: return jet_op([&](const NormalJet& j) { return fueter_dirac(w, j); });
        case OpId::P1: return jet_op([&](const NormalJet& j) { return p1(w, j); });
        case OpId::P2: return jet_op([&](const NormalJet& j) { return p2(w, j); });
        case OpId::P3: return jet_op([&](const NormalJet& j) { return p3(w, j); });
        case OpId::J: return columns_of([&](const Vector& s) { return op_J(w, s); });
        case OpId::Dc: return jet_op([&](const NormalJet& j) { return dirac_c(w, j); });
        case OpId::nabla7: return jet_op([&](const NormalJet& j) { return nabla_third(w, j); });
        case OpId::lapl: return lapl_matrix(w);
        case OpId::curvterm: return curvterm_matrix(w);
        case OpId::ricciPartial:
            return columns_of([&](const Vector& s) { return partial_ricci(w.amb.R, w.frame, s); });
        case OpId::opB: {
            const ShapeData sd = shape_data(w.amb.G, w.frame);
            return columns_of([&](const Vector& s) { return op_B(sd, w.amb.g2, w.frame, s); });
        }
        case OpId::opA: {
            const ShapeData sd = shape_data(w.amb.G, w.frame);
            return columns_of([&](const Vector& s) { return op_A(sd, s); });
        }
        case OpId::tsum:
            return columns_of([&](const Vector& s) { return calT_sum(w.amb.g2, w.T, w.nablaT, w.frame, s); });
        case OpId::P2shape: return columns_of([&](const Vector& s) { return p2_shape(w, s); });
        case OpId::Cterm: return jet_op([&](const NormalJet& j) { return c_term(w, j); });
    }
    throw std::invalid_argument("unknown operator id");
}

OperatorMatrix weitzenboeck_residual_without(const WeitzenboeckSetup& w, OpId omitted) {
    const OperatorMatrix DA = invariant_matrix(w, OpId::DA);
    OperatorMatrix r = DA * DA;
    for (OpId id : {OpId::lapl, OpId::curvterm, OpId::P1, OpId::P2, OpId::P3})
        if (id != omitted) r -= invariant_matrix(w, id);
    return r;
}

OperatorMatrix weitzenboeck_residual(const WeitzenboeckSetup& w) {
    return weitzenboeck_residual_without(w, OpId::Dplain);
}

OperatorMatrix weitzenboeck_residual_corrected(const WeitzenboeckSetup& w) {
    return weitzenboeck_residual(w) + Rational(2) * invariant_matrix(w, OpId::Cterm) -
           invariant_matrix(w, OpId::P2shape);
}

OperatorMatrix curvature_rewrite_residual(const WeitzenboeckSetup& w) {
    return invariant_matrix(w, OpId::curvterm) -
           (invariant_matrix(w, OpId::ricciPartial) + invariant_matrix(w, OpId::opB) - invariant_matrix(w, OpId::tsum));
}

WeitzenboeckSetup nearly_parallel_setup(const G2Data& g2, const AssocFrame& frame, const Rational& tau0) {
    std::vector<KForm> de(7, KForm(7, 2));
    const Ambient amb = make_ambient(LieAlgebraStructure(de), g2);
    WeitzenboeckSetup w = make_setup(amb, frame, (tau0 / 4) * Matrix::identity(7));
    w.Top = w.T;
    w.nablaTop = w.nablaT;
    return w;
}

Vector nearly_parallel_identity(const NormalJet& jet, const Rational& tau0, const G2Data& g2, const AssocFrame& frame) {
    const WeitzenboeckSetup w = nearly_parallel_setup(g2, frame, tau0);
    return p1(w, jet) + p2(w, jet) + p3(w, jet) - tau0 * dirac_plain(w, jet) - (tau0 * tau0 / 16) * jet.value;
}

OperatorMatrix support_anticommutator(const WeitzenboeckSetup& w) {
    const OperatorMatrix Dc = invariant_matrix(w, OpId::Dc);
    const OperatorMatrix J = invariant_matrix(w, OpId::J);
    return Dc * J + J * Dc;
}

OperatorMatrix support_identity(const WeitzenboeckSetup& w) {
    return support_anticommutator(w) - Rational(4) * Matrix::identity(4);
}

LccCertificate lcc_certificate(const WeitzenboeckSetup& w) {
    LccCertificate c;
    c.DA = invariant_matrix(w, OpId::DA);
    c.DA2 = c.DA * c.DA;
    c.lapl = invariant_matrix(w, OpId::lapl);
    const OperatorMatrix J = invariant_matrix(w, OpId::J);
    c.JD = J * invariant_matrix(w, OpId::Dplain);
    c.nabla7 = invariant_matrix(w, OpId::nabla7);
    c.kernel_dim = static_cast<int>(kernel(c.DA).size());
    if (w.Top.is_zero()) {
        c.note = "torsion vanishes; the certificate does not apply";
        return c;
    }
    c.applicable = true;
    const OperatorMatrix rem = c.DA2 - c.lapl - Rational(2) * c.JD + Rational(3) * c.nabla7;
    Rational k;
    if (rem.is_scalar(&k)) {
        c.identity_constant = k;
        c.identity_11_4 = k == Rational(11, 4);
    }
    // On ker DA one has D sigma = -twist(sigma), hence J D = -J twist.
    const OperatorMatrix tw = columns_of([&](const Vector& s) { return torsion_twist(w, s); });
    Rational mu;
    if ((-(J * tw)).is_scalar(&mu)) c.kernel_substitution = mu;
    if (c.identity_constant && c.kernel_substitution) c.coefficient = *c.identity_constant + 2 * *c.kernel_substitution;
    c.rigid = c.kernel_dim == 0 && c.coefficient.has_value() && sgn(*c.coefficient) > 0;
    if (!c.identity_constant) c.note = "remainder is not a multiple of the identity";
    return c;
}

bool rigidity_criterion_np(const Rational& k_scalar, const Rational& tau0, const Rational& f_minus_lower) {
    return f_minus_lower >= -(k_scalar / 4 - Rational(3, 16) * tau0 * tau0);
}

}  // namespace g2w
