#pragma once

#include "g2weitz/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace g2w {

constexpr int kMaxDim = 9;

// Components in the standard orthonormal basis of an n-dimensional space.
using Vector = std::vector<Rational>;

Vector zero_vector(int dim);
Vector basis_vector(int dim, int i, const Rational& c = 1);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& a);
Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Bit i set <=> covector e^{i+1} present. Indices are 0-based internally.
using Mask = std::uint16_t;

int popcount(Mask m);
std::vector<int> mask_indices(Mask m);
Mask indices_mask(const std::vector<int>& idx);
// All masks of the given degree, ordered lexicographically by index tuple.
std::vector<Mask> masks_of_degree(int dim, int degree);
// Lexicographic comparison of the sorted index tuples.
bool tuple_less(Mask a, Mask b);

class KForm {
  public:
    KForm() = default;
    KForm(int dim, int degree);

    // c * e^{i1} ^ ... ^ e^{ik} for arbitrary (0-based) order; zero if an index repeats.
    static KForm basis(int dim, const std::vector<int>& idx, const Rational& c = 1);
    static KForm volume(int dim);
    static KForm scalar(int dim, const Rational& c);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<Mask, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(Mask m) const;
    // alpha(e_{i1}, ..., e_{ik}) for arbitrary index order.
    Rational component(const std::vector<int>& idx) const;
    // alpha(v1, ..., vk) by determinant expansion.
    Rational evaluate(const std::vector<Vector>& vs) const;

    void add_term(Mask m, const Rational& c);

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    KForm& operator*=(const Rational& s);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
    KForm operator-() const;
    bool operator==(const KForm& o) const;

  private:
    int dim_ = 0;
    int degree_ = 0;
    std::map<Mask, Rational> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm interior(const Vector& v, const KForm& a);
KForm hodge(const KForm& a);
Rational form_inner(const KForm& a, const KForm& b);

// Coordinates over masks_of_degree(dim, degree).
Vector to_coords(const KForm& a);
KForm from_coords(int dim, int degree, const Vector& c);

}  // namespace g2w
