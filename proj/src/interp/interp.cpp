#include "slnstate/interp.hpp"

#include <map>
#include <mutex>

namespace slnstate {

namespace {

std::string cache_key(int m, const RootSet& sigma, const std::string& alphabet) {
    std::string k = std::to_string(m) + "|" + alphabet;
    for (const auto& r : sigma.roots()) k += "|" + to_string(r);
    return k;
}

// prod_{x in X}(x - r) = sum_k (-r)^{m-k} X_k
SymPoly linear_factor(const Alphabet& a, const Rational& r) {
    SymPoly f = SymPoly::constant(0, {a});
    for (int k = 0; k <= a.size; ++k) {
        Rational c = 1;
        for (int t = 0; t < a.size - k; ++t) c *= -r;
        f = f + SymPoly::generator(a, k) * c;
    }
    return f;
}

std::shared_ptr<const InterpolationBasis> build_basis(int m, const RootSet& sigma,
                                                      const std::string& alphabet) {
    const int N = sigma.size();
    Alphabet a{alphabet, m};
    std::vector<SymPoly> factors;
    for (int r = 0; r < N; ++r) factors.push_back(linear_factor(a, sigma[r]));
    auto basis = std::make_shared<InterpolationBasis>();
    for (Subset omega : subsets_of_size(N, m)) {
        SymPoly num = SymPoly::constant(1, {a});
        Rational den = 1;
        for (int r = 0; r < N; ++r) {
            if (omega.contains(r)) continue;
            num = num * factors[static_cast<std::size_t>(r)];
            for (int s : omega.indices()) den *= sigma[s] - sigma[r];
        }
        basis->push_back({omega, std::move(num), den});
    }
    return basis;
}

}  // namespace

std::shared_ptr<const InterpolationBasis> interpolation_basis(int m, const RootSet& sigma,
                                                              const std::string& alphabet) {
    if (m < 1 || m > sigma.size())
        throw DomainError("interpolation needs 1 <= m <= |sigma|");
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const InterpolationBasis>> cache;
    auto key = cache_key(m, sigma, alphabet);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto basis = build_basis(m, sigma, alphabet);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, basis).first->second;
}

SymPoly interpolate(const std::function<Rational(Subset)>& values, int m, const RootSet& sigma,
                    const std::string& alphabet) {
    auto basis = interpolation_basis(m, sigma, alphabet);
    SymPoly out = SymPoly::constant(0, {Alphabet{alphabet, m}});
    for (const auto& b : *basis) {
        Rational v = values(b.omega);
        if (v != 0) out = out + b.numerator * (v / b.denominator);
    }
    return out;
}

int exact_partial_degree(const SymPoly& g) {
    if (g.alphabets().size() > 1) throw DomainError("partial degree needs a single alphabet");
    if (g.is_zero()) return -1;
    if (g.alphabets().empty()) return 0;
    return 2 * expand_monomials(g).degree_in(0);
}

bool reconstruct_check(const SymPoly& g, int m, const RootSet& sigma) {
    if (g.alphabets().size() > 1 || (g.alphabets().size() == 1 && g.alphabets()[0].size != m))
        throw DomainError("reconstruct_check expects one alphabet of size m");
    const int N = sigma.size();
    int pd = exact_partial_degree(g);
    if (pd > 2 * (N - m))
        throw DomainError("partial degree " + std::to_string(pd) + " exceeds the bound " +
                          std::to_string(2 * (N - m)));
    std::string name = g.alphabets().empty() ? "X" : g.alphabets()[0].name;
    SymPoly gg = g.embed({Alphabet{name, m}});
    auto f = [&](Subset s) { return gg.evaluate(s.values(sigma)); };
    return interpolate(f, m, sigma, name) == gg;
}

}  // namespace slnstate
