#include "slnstate/symkit.hpp"

namespace slnstate {

std::vector<Rational> elementary_values(const std::vector<Rational>& values) {
    std::vector<Rational> e(values.size() + 1, Rational(0));
    e[0] = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
    return e;
}

Rational elementary_value(int k, const std::vector<Rational>& values) {
    if (k < 0 || k > static_cast<int>(values.size())) return 0;
    return elementary_values(values)[static_cast<std::size_t>(k)];
}

std::vector<Rational> complete_difference_series(int upto, const std::vector<Rational>& values,
                                                 const std::vector<Rational>& sigma) {
    if (upto < 0) return {};
    const std::size_t n = static_cast<std::size_t>(upto) + 1;
    // numerator prod_{r}(1 - r t), truncated
    std::vector<Rational> num(n, Rational(0));
    num[0] = 1;
    for (const auto& r : sigma)
        for (std::size_t k = n - 1; k >= 1; --k) num[k] -= r * num[k - 1];
    // divide by each (1 - s t): multiply by the geometric series in s t
    for (const auto& s : values)
        for (std::size_t k = 1; k < n; ++k) num[k] += s * num[k - 1];
    return num;
}

Rational complete_difference(int k, const std::vector<Rational>& values,
                             const std::vector<Rational>& sigma) {
    if (k < 0) return 0;
    return complete_difference_series(k, values, sigma)[static_cast<std::size_t>(k)];
}

Rational schur_difference(const Partition& lambda, const std::vector<Rational>& a,
                          const std::vector<Rational>& b) {
    const int l = lambda.length();
    if (l == 0) return 1;
    int top = lambda.part(0) + l;
    auto h = complete_difference_series(top, a, b);
    auto hk = [&](int k) -> Rational {
        if (k < 0 || k > top) return 0;
        return h[static_cast<std::size_t>(k)];
    };
    RMatrix m(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = hk(lambda.part(i) - i + j);
    return determinant(std::move(m));
}

Rational schur_box_ratio(int m, int n, const std::vector<Rational>& omega1,
                         const std::vector<Rational>& omega2) {
    if (static_cast<int>(omega1.size()) != m || static_cast<int>(omega2.size()) != n)
        throw DomainError("schur_box_ratio: alphabet sizes must be m and n");
    Rational det = schur_difference(Partition::box(m, n), omega1, omega2);
    Rational prod = 1;
    for (const auto& s : omega1)
        for (const auto& r : omega2) prod *= (s - r);
    if (det != prod)
        throw std::logic_error("schur_box_ratio: determinant " + to_string(det) +
                          " disagrees with resultant " + to_string(prod));
    return det;
}

SymPoly affine_elementary_substitution(int i, int m, const Rational& a, const Rational& b,
                                       const std::string& name) {
    if (m < 1) throw DomainError("alphabet size must be positive");
    if (i < 0 || i > m) throw DomainError("elementary index out of range");
    Alphabet al{name, m};
    SymPoly out = SymPoly::constant(0, {al});
    Rational apow = 1;
    for (int j = 0; j <= i; ++j) {
        Rational bpow = 1;
        for (int t = 0; t < i - j; ++t) bpow *= b;
        out = out + SymPoly::generator(al, j) * (apow * bpow * binomial(m - j, i - j));
        apow *= a;
    }
    return out;
}

}  // namespace slnstate
