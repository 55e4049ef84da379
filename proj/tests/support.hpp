#pragma once

#include "g2weitz/cli_io.hpp"
#include "g2weitz/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace g2w;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240917u);
    return gen;
}

inline Rational random_rational(int range = 5, int den = 4) {
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    Rational r(num(rng()), d(rng()));
    r.canonicalize();
    return r;
}

inline Vector random_vector(int dim) {
    Vector v(dim);
    for (auto& x : v) x = random_rational();
    return v;
}

inline KForm random_form(int dim, int degree, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    KForm f(dim, degree);
    for (Mask m : masks_of_degree(dim, degree))
        if (keep(rng())) f.add_term(m, random_rational());
    return f;
}

inline int perm_sign(std::vector<int> p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// Alternation-based evaluation of a wedge product on vectors.
inline Rational wedge_by_permutations(const KForm& a, const KForm& b, const std::vector<Vector>& vs) {
    const int p = a.degree(), q = b.degree(), n = p + q;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational sum = 0;
    do {
        std::vector<Vector> va, vb;
        for (int i = 0; i < p; ++i) va.push_back(vs[perm[i]]);
        for (int i = p; i < n; ++i) vb.push_back(vs[perm[i]]);
        sum += perm_sign(perm) * a.evaluate(va) * b.evaluate(vb);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    for (int i = 2; i <= q; ++i) fact *= i;
    return sum / fact;
}

inline std::string data_path(const std::string& name) { return std::string(G2WEITZ_DATA_DIR) + "/" + name; }

inline LoadedGeometry load(const std::string& name) { return load_geometry(data_path(name)); }

}  // namespace testing_support
