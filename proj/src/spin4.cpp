#include "g2weitz/spin4.hpp"

#include "g2weitz/linalg.hpp"

namespace g2w {

SpinMatrix::SpinMatrix() {
    for (auto& row : e_)
        for (auto& x : row) x = {0, 0};
}

SpinMatrix SpinMatrix::identity() {
    SpinMatrix m;
    m(0, 0) = {1, 0};
    m(1, 1) = {1, 0};
    return m;
}

SpinMatrix SpinMatrix::adjoint() const {
    SpinMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = e_[c][r].conj();
    return m;
}

ComplexRational SpinMatrix::trace() const { return e_[0][0] + e_[1][1]; }

bool SpinMatrix::is_zero() const { return *this == SpinMatrix(); }

bool SpinMatrix::is_anti_hermitian() const { return (*this + adjoint()).is_zero(); }

SpinMatrix SpinMatrix::operator+(const SpinMatrix& o) const {
    SpinMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = e_[r][c] + o(r, c);
    return m;
}

SpinMatrix SpinMatrix::operator-(const SpinMatrix& o) const {
    SpinMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = e_[r][c] - o(r, c);
    return m;
}

SpinMatrix SpinMatrix::operator*(const SpinMatrix& o) const {
    SpinMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = e_[r][0] * o(0, c) + e_[r][1] * o(1, c);
    return m;
}

SpinMatrix SpinMatrix::scaled(const Rational& s) const {
    SpinMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = {s * e_[r][c].re, s * e_[r][c].im};
    return m;
}

SpinMatrix gamma(int i) {
    SpinMatrix m;
    switch (i) {
        case 0:
            return SpinMatrix::identity();
        case 1:
            m(0, 0) = {0, 1};
            m(1, 1) = {0, -1};
            return m;
        case 2:
            m(0, 1) = {-1, 0};
            m(1, 0) = {1, 0};
            return m;
        case 3:
            m(0, 1) = {0, 1};
            m(1, 0) = {0, 1};
            return m;
        default:
            throw DimensionError("gamma index must lie in 1..4");
    }
}

SpinMatrix gamma(const Vector& v) {
    if (v.size() != 4) throw DimensionError("gamma expects a 4-vector");
    SpinMatrix m;
    for (int i = 0; i < 4; ++i)
        if (sgn(v[i])) m = m + gamma(i).scaled(v[i]);
    return m;
}

SpinMatrix rho(const KForm& beta) {
    if (beta.dim() != 4 || beta.degree() != 2) throw DimensionError("rho expects a 2-form on R^4");
    SpinMatrix m;
    for (const auto& [mask, c] : beta.terms()) {
        auto idx = mask_indices(mask);
        m = m - (gamma(idx[0]).adjoint() * gamma(idx[1])).scaled(c);
    }
    return m;
}

bool clifford_check(const Vector& v) {
    return gamma(v).adjoint() * gamma(v) == SpinMatrix::identity().scaled(dot(v, v));
}

bool orthonormal_pair_check() {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            auto s = gamma(a).adjoint() * gamma(b) + gamma(b).adjoint() * gamma(a);
            if (!s.is_zero()) return false;
        }
    return true;
}

std::vector<KForm> anti_self_dual_basis() {
    return {KForm::basis(4, {0, 1}) - KForm::basis(4, {2, 3}),
            KForm::basis(4, {0, 2}) + KForm::basis(4, {1, 3}),
            KForm::basis(4, {0, 3}) - KForm::basis(4, {1, 2})};
}

std::vector<KForm> self_dual_basis() {
    return {KForm::basis(4, {0, 1}) + KForm::basis(4, {2, 3}),
            KForm::basis(4, {0, 2}) - KForm::basis(4, {1, 3}),
            KForm::basis(4, {0, 3}) + KForm::basis(4, {1, 2})};
}

int rho_rank(const std::vector<KForm>& forms) {
    std::vector<Vector> cols;
    for (const auto& f : forms) {
        auto m = rho(f);
        Vector v;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                v.push_back(m(r, c).re);
                v.push_back(m(r, c).im);
            }
        cols.push_back(v);
    }
    return rank(Matrix::from_columns(cols));
}

std::string to_string(const SpinMatrix& m) {
    auto z = [](const ComplexRational& x) { return x.re.get_str() + (sgn(x.im) < 0 ? "" : "+") + x.im.get_str() + "i"; };
    return "[[" + z(m(0, 0)) + "," + z(m(0, 1)) + "],[" + z(m(1, 0)) + "," + z(m(1, 1)) + "]]";
}

}  // namespace g2w
