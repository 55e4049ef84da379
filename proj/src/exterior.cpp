#include "g2weitz/exterior.hpp"

#include <algorithm>
#include <bit>

namespace g2w {

Vector zero_vector(int dim) { return Vector(dim, Rational(0)); }

Vector basis_vector(int dim, int i, const Rational& c) {
    Vector v = zero_vector(dim);
    v.at(i) = c;
    return v;
}

static void check_same(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
}

Vector operator+(const Vector& a, const Vector& b) {
    check_same(a, b);
    Vector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    check_same(a, b);
    Vector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a);
    for (auto& x : r) x = -x;
    return r;
}

Vector operator*(const Rational& s, const Vector& a) {
    Vector r(a);
    for (auto& x : r) x *= s;
    return r;
}

Rational dot(const Vector& a, const Vector& b) {
    check_same(a, b);
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) && sgn(b[i])) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

int popcount(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

std::vector<int> mask_indices(Mask m) {
    std::vector<int> r;
    for (int i = 0; i < 16; ++i)
        if (m & (1u << i)) r.push_back(i);
    return r;
}

Mask indices_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= static_cast<Mask>(1u << i);
    return m;
}

bool tuple_less(Mask a, Mask b) {
    return mask_indices(a) < mask_indices(b);
}

std::vector<Mask> masks_of_degree(int dim, int degree) {
    std::vector<Mask> r;
    for (unsigned m = 0; m < (1u << dim); ++m)
        if (popcount(static_cast<Mask>(m)) == degree) r.push_back(static_cast<Mask>(m));
    std::sort(r.begin(), r.end(), tuple_less);
    return r;
}

// Sign of the permutation sorting idx; 0 if an index repeats.
static int sort_sign(std::vector<int> idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    return sign;
}

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || dim > kMaxDim) throw DimensionError("dimension must lie in 1..9");
    if (degree < 0) throw DimensionError("negative degree");
}

KForm KForm::basis(int dim, const std::vector<int>& idx, const Rational& c) {
    KForm f(dim, static_cast<int>(idx.size()));
    for (int i : idx)
        if (i < 0 || i >= dim) throw DimensionError("index exceeds dimension");
    int s = sort_sign(idx);
    if (s != 0) f.add_term(indices_mask(idx), s * c);
    return f;
}

KForm KForm::volume(int dim) {
    KForm f(dim, dim);
    f.add_term(static_cast<Mask>((1u << dim) - 1), 1);
    return f;
}

KForm KForm::scalar(int dim, const Rational& c) {
    KForm f(dim, 0);
    f.add_term(0, c);
    return f;
}

Rational KForm::coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational KForm::component(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != degree_) throw DimensionError("component arity mismatch");
    int s = sort_sign(idx);
    if (s == 0) return 0;
    return s * coeff(indices_mask(idx));
}

static Rational determinant(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Rational KForm::evaluate(const std::vector<Vector>& vs) const {
    if (static_cast<int>(vs.size()) != degree_) throw DimensionError("evaluation arity mismatch");
    for (const auto& v : vs)
        if (static_cast<int>(v.size()) != dim_) throw DimensionError("vector dimension mismatch");
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
        auto idx = mask_indices(m);
        std::vector<std::vector<Rational>> a(degree_, std::vector<Rational>(degree_));
        for (int r = 0; r < degree_; ++r)
            for (int k = 0; k < degree_; ++k) a[r][k] = vs[k][idx[r]];
        s += c * determinant(std::move(a));
    }
    return s;
}

void KForm::add_term(Mask m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

static void check_same(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw DimensionError("form dimension mismatch");
    if (a.degree() != b.degree()) throw DimensionError("form degree mismatch");
}

KForm& KForm::operator+=(const KForm& o) {
    check_same(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    check_same(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

KForm& KForm::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

KForm KForm::operator-() const {
    KForm r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

bool KForm::operator==(const KForm& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
}

// Number of (i in a, j in b) with i > j: the sign of moving e^b past e^a's higher indices.
static int merge_sign(Mask a, Mask b) {
    int inv = 0;
    for (int j = 0; j < 16; ++j)
        if (b & (1u << j)) inv += popcount(static_cast<Mask>(a & ~((1u << (j + 1)) - 1)));
    return (inv & 1) ? -1 : 1;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw DimensionError("form dimension mismatch");
    KForm r(a.dim(), a.degree() + b.degree());
    if (r.degree() > r.dim()) return r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            r.add_term(static_cast<Mask>(ma | mb), merge_sign(ma, mb) * ca * cb);
        }
    return r;
}

KForm interior(const Vector& v, const KForm& a) {
    if (static_cast<int>(v.size()) != a.dim()) throw DimensionError("vector dimension mismatch");
    if (a.degree() == 0) throw DimensionError("interior product of a 0-form");
    KForm r(a.dim(), a.degree() - 1);
    for (const auto& [m, c] : a.terms())
        for (int i : mask_indices(m)) {
            if (sgn(v[i]) == 0) continue;
            int below = popcount(static_cast<Mask>(m & ((1u << i) - 1)));
            r.add_term(static_cast<Mask>(m & ~(1u << i)), ((below & 1) ? -1 : 1) * v[i] * c);
        }
    return r;
}

KForm hodge(const KForm& a) {
    const Mask full = static_cast<Mask>((1u << a.dim()) - 1);
    KForm r(a.dim(), a.dim() - a.degree());
    for (const auto& [m, c] : a.terms()) {
        Mask comp = static_cast<Mask>(full & ~m);
        r.add_term(comp, merge_sign(m, comp) * c);
    }
    return r;
}

Rational form_inner(const KForm& a, const KForm& b) {
    check_same(a, b);
    Rational s = 0;
    for (const auto& [m, c] : a.terms()) {
        auto it = b.terms().find(m);
        if (it != b.terms().end()) s += c * it->second;
    }
    return s;
}

Vector to_coords(const KForm& a) {
    auto ms = masks_of_degree(a.dim(), a.degree());
    Vector v;
    v.reserve(ms.size());
    for (Mask m : ms) v.push_back(a.coeff(m));
    return v;
}

KForm from_coords(int dim, int degree, const Vector& c) {
    auto ms = masks_of_degree(dim, degree);
    if (c.size() != ms.size()) throw DimensionError("coordinate length mismatch");
    KForm f(dim, degree);
    for (size_t i = 0; i < ms.size(); ++i) f.add_term(ms[i], c[i]);
    return f;
}

}  // namespace g2w
