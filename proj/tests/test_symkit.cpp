#include <doctest.h>

#include <functional>
#include <random>

#include "slnstate/symkit.hpp"

using namespace slnstate;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

// Brute force h_k of a list by summing over multisets.
Rational complete_brute(int k, const std::vector<Rational>& xs, std::size_t start = 0) {
    if (k == 0) return 1;
    Rational total = 0;
    for (std::size_t i = start; i < xs.size(); ++i) total += xs[i] * complete_brute(k - 1, xs, i);
    return total;
}

// Skew Schur s_{lambda/mu}(xs) by enumerating semistandard fillings.
Rational skew_schur(const Partition& lambda, const Partition& mu, const std::vector<Rational>& xs) {
    if (!(mu.length() <= lambda.length())) return 0;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return 0;
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = mu.part(r); c < lambda.part(r); ++c) boxes.emplace_back(r, c);
    int n = static_cast<int>(xs.size());
    std::map<std::pair<int, int>, int> fill;
    std::function<Rational(std::size_t)> go = [&](std::size_t i) -> Rational {
        if (i == boxes.size()) {
            Rational t = 1;
            for (auto& [b, v] : fill) t *= xs[static_cast<std::size_t>(v)];
            return t;
        }
        auto [r, c] = boxes[i];
        int lo = 0;
        if (auto it = fill.find({r, c - 1}); it != fill.end()) lo = std::max(lo, it->second);
        if (auto it = fill.find({r - 1, c}); it != fill.end()) lo = std::max(lo, it->second + 1);
        Rational total = 0;
        for (int v = lo; v < n; ++v) {
            fill[{r, c}] = v;
            total += go(i + 1);
        }
        fill.erase({r, c});
        return total;
    };
    return go(0);
}

// S_lambda(X - Y) = sum_mu s_mu(X) (-1)^{|lambda/mu|} s_{lambda'/mu'}(Y)
Rational supersymmetric_oracle(const Partition& lambda, const std::vector<Rational>& x,
                               const std::vector<Rational>& y) {
    Rational total = 0;
    for (const auto& mu : partitions_in_box(lambda.length(), lambda.part(0))) {
        bool inside = true;
        for (int i = 0; i < mu.length(); ++i) inside = inside && mu.part(i) <= lambda.part(i);
        if (!inside) continue;
        Rational sign = (lambda.weight() - mu.weight()) % 2 ? -1 : 1;
        total += skew_schur(mu, Partition{}, x) * sign * skew_schur(lambda.conjugate(), mu.conjugate(), y);
    }
    return total;
}

}  // namespace

TEST_CASE("rationals parse, print and canonicalize") {
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(to_string(make_rational(-6, 2)) == "-3/1");
    CHECK(to_string(parse_rational(" 4/6 ")) == "2/3");
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("binomials") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    for (int n = 1; n < 12; ++n)
        for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("exact linear algebra") {
    RMatrix a = {ints({2, 1, 0}), ints({1, 3, 1}), ints({0, 1, 4})};
    CHECK(determinant(a) == 18);
    auto x = solve(a, ints({1, 2, 3}));
    for (int i = 0; i < 3; ++i) {
        Rational row = 0;
        for (int j = 0; j < 3; ++j) row += a[i][j] * x[j];
        CHECK(row == i + 1);
    }
    auto inv = inverse(a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * inv[k][j];
            CHECK(s == (i == j ? 1 : 0));
        }
    RMatrix sing = {ints({1, 2}), ints({2, 4})};
    CHECK(determinant(sing) == 0);
    CHECK_THROWS_AS(solve(sing, ints({1, 1})), DomainError);
    // Bareiss needs a row swap here
    RMatrix swap = {ints({0, 1}), ints({1, 0})};
    CHECK(determinant(swap) == -1);
}

TEST_CASE("root sets and subsets") {
    CHECK_THROWS_AS(RootSet(ints({1, 1})), DomainError);
    CHECK(RootSet::standard(3).roots() == ints({0, 1, 2}));
    auto subs = subsets_of_size(4, 2);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front().indices() == std::vector<int>{0, 1});
    CHECK(subs.back().indices() == std::vector<int>{2, 3});
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].indices() < subs[i].indices());
    Subset a = Subset::of({0, 2}), b = Subset::of({2, 3});
    CHECK((a & b) == Subset::of({2}));
    CHECK((a | b).size() == 3);
    CHECK((a - b) == Subset::of({0}));
    CHECK(a.complement(4) == Subset::of({1, 3}));
    CHECK(a.values(RootSet(ints({5, 6, 7}))) == ints({5, 7}));
}

TEST_CASE("partitions") {
    Partition p({3, 1});
    CHECK(p.conjugate() == Partition({2, 1, 1}));
    CHECK(p.weight() == 4);
    CHECK(p.complement(2, 3) == Partition({2}));
    CHECK(Partition{}.complement(2, 2) == Partition::box(2, 2));
    for (int r = 0; r <= 4; ++r)
        for (int c = 0; c <= 4; ++c) {
            auto all = partitions_in_box(r, c);
            CHECK(Rational(static_cast<long>(all.size())) == binomial(r + c, r));
            for (const auto& q : all) {
                CHECK(q.fits(r, c));
                CHECK(q.complement(r, c).complement(r, c) == q);
            }
        }
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("sympoly arithmetic and evaluation") {
    Alphabet x{"X", 3};
    SymPoly e1 = SymPoly::generator(x, 1), e2 = SymPoly::generator(x, 2);
    auto v = ints({1, 2, 5});
    CHECK(e1.evaluate(v) == 8);
    CHECK(e2.evaluate(v) == 2 + 5 + 10);
    SymPoly p = e1 * e1 - e2 * Rational(2);  // power sum p_2
    CHECK(p.evaluate(v) == 1 + 4 + 25);
    CHECK(p.degree() == 4);
    CHECK(e1.pow(3).degree() == 6);
    CHECK((p - p).is_zero());
    CHECK(p.partial_degree("X") == 4);
    Alphabet y{"Y", 1};
    SymPoly mixed = e1 * SymPoly::generator(y, 1);
    CHECK(mixed.evaluate({{"X", v}, {"Y", ints({3})}}) == 24);
    CHECK(e1.embed({x, y}) + SymPoly::generator(y, 1) ==
          SymPoly::generator(y, 1) + e1.embed({x, y}));
    SymPoly sub = p.substitute("X", {SymPoly::constant(1, {}), SymPoly::constant(0, {}), SymPoly::constant(0, {})});
    CHECK(sub.evaluate(std::vector<Rational>{}) == 1);
}

TEST_CASE("monomial expansion matches elementary and complete functions") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            SymPoly g = SymPoly::generator({"X", n}, k);
            CHECK(expand_monomials(g) == monomial_elementary(n, 0, n, k));
            CHECK(monomial_elementary(n, 0, n, k).is_symmetric());
        }
    auto h2 = monomial_complete(3, 0, 3, 2);
    CHECK(h2.evaluate(ints({1, 2, 3})) == complete_brute(2, ints({1, 2, 3})));
    CHECK(h2.degree_in(0) == 2);
}

TEST_CASE("elementary values and complete differences") {
    auto v = ints({2, -1, 3});
    auto e = elementary_values(v);
    CHECK(e == ints({1, 4, 1, -6}));
    CHECK(elementary_value(4, v) == 0);
    // h_k(X - Y) = sum_j h_{k-j}(X) (-1)^j e_j(Y)
    auto x = ints({1, 4}), y = ints({0, 2, 3});
    auto ey = elementary_values(y);
    auto series = complete_difference_series(6, x, y);
    for (int k = 0; k <= 6; ++k) {
        Rational expect = 0;
        for (int j = 0; j <= std::min<int>(k, 3); ++j)
            expect += complete_brute(k - j, x) * (j % 2 ? -1 : 1) * ey[static_cast<std::size_t>(j)];
        CHECK(complete_difference(k, x, y) == expect);
        CHECK(series[static_cast<std::size_t>(k)] == expect);
    }
    CHECK(complete_difference(-1, x, y) == 0);
}

TEST_CASE("Jacobi-Trudi agrees with the tableau expansion of S_lambda(X - Y)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 4);
    for (const auto& lambda : partitions_in_box(3, 3)) {
        std::vector<Rational> x, y;
        for (int i = 0; i < 2; ++i) x.emplace_back(d(rng));
        for (int i = 0; i < 3; ++i) y.emplace_back(d(rng));
        CHECK(schur_difference(lambda, x, y) == supersymmetric_oracle(lambda, x, y));
        CHECK(schur_difference(lambda, x, {}) == skew_schur(lambda, Partition{}, x));
    }
}

TEST_CASE("box Schur function factors as a resultant") {
    auto a = ints({1, 5}), b = ints({2, -1, 7});
    Rational prod = 1;
    for (auto& s : a)
        for (auto& t : b) prod *= s - t;
    CHECK(schur_box_ratio(2, 3, a, b) == prod);
    CHECK(schur_difference(Partition::box(2, 3), a, b) == prod);
}

TEST_CASE("affine substitution of elementary functions") {
    auto x = ints({1, 3, -2});
    std::vector<std::pair<Rational, Rational>> maps = {{2, 1}, {-1, 0}, {make_rational(1, 2), -3}};
    for (auto [a, b] : maps) {
        std::vector<Rational> image;
        for (auto& v : x) image.push_back(a * v + b);
        auto e = elementary_values(image);
        for (int i = 0; i <= 3; ++i)
            CHECK(affine_elementary_substitution(i, 3, a, b).evaluate(x) == e[static_cast<std::size_t>(i)]);
    }
    // composing two substitutions is the substitution by the composite map
    Rational a1 = 2, b1 = 1, a2 = -3, b2 = 5;
    std::vector<SymPoly> inner;
    for (int k = 1; k <= 3; ++k) inner.push_back(affine_elementary_substitution(k, 3, a1, b1));
    for (int i = 1; i <= 3; ++i) {
        SymPoly composed = affine_elementary_substitution(i, 3, a2, b2).substitute("X", inner);
        CHECK(composed == affine_elementary_substitution(i, 3, a2 * a1, a2 * b1 + b2));
    }
}
