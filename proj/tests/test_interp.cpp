#include <doctest.h>

#include <random>

#include "slnstate/interp.hpp"

using namespace slnstate;

namespace {

RootSet odd_roots() { return RootSet({make_rational(-1, 2), Rational(3), Rational(0), make_rational(7, 3), Rational(-4)}); }

}  // namespace

TEST_CASE("interpolation basis is the Kronecker family on m-subsets") {
    for (const RootSet& sigma : {RootSet::standard(4), odd_roots()}) {
        int N = sigma.size();
        for (int m = 1; m <= N; ++m) {
            auto basis = interpolation_basis(m, sigma);
            auto subs = subsets_of_size(N, m);
            REQUIRE(basis->size() == subs.size());
            for (std::size_t i = 0; i < subs.size(); ++i) {
                CHECK((*basis)[i].omega == subs[i]);
                SymPoly q = (*basis)[i].polynomial();
                CHECK(exact_partial_degree(q) <= 2 * (N - m));
                for (std::size_t j = 0; j < subs.size(); ++j)
                    CHECK(q.evaluate(subs[j].values(sigma)) == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("interpolation basis is cached per ring data") {
    auto a = interpolation_basis(2, RootSet::standard(4));
    auto b = interpolation_basis(2, RootSet::standard(4));
    auto c = interpolation_basis(2, RootSet::standard(4), "Y");
    CHECK(a.get() == b.get());
    CHECK(a.get() != c.get());
    CHECK_THROWS_AS(interpolation_basis(0, RootSet::standard(3)), DomainError);
    CHECK_THROWS_AS(interpolation_basis(4, RootSet::standard(3)), DomainError);
}

TEST_CASE("interpolating arbitrary data reproduces it") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-20, 20);
    RootSet sigma = odd_roots();
    for (int m = 1; m <= 4; ++m) {
        std::map<Subset, Rational> data;
        for (Subset s : subsets_of_size(5, m)) data[s] = make_rational(d(rng), 1 + (d(rng) + 20) % 5);
        SymPoly p = interpolate([&](Subset s) { return data.at(s); }, m, sigma);
        for (auto& [s, v] : data) CHECK(p.evaluate(s.values(sigma)) == v);
        CHECK(exact_partial_degree(p) <= 2 * (5 - m));
    }
}

TEST_CASE("exact partial degree") {
    Alphabet x{"X", 3};
    CHECK(exact_partial_degree(SymPoly::generator(x, 1).pow(3)) == 6);
    CHECK(exact_partial_degree(SymPoly::generator(x, 3)) == 2);
    CHECK(exact_partial_degree(SymPoly::generator(x, 3).pow(2) * SymPoly::generator(x, 2)) == 6);
    CHECK(exact_partial_degree(SymPoly::constant(5)) == 0);
    CHECK(exact_partial_degree(SymPoly(std::vector<Alphabet>{x})) == -1);
    // power sum p2
    SymPoly p2 = SymPoly::generator(x, 1).pow(2) - SymPoly::generator(x, 2) * Rational(2);
    CHECK(exact_partial_degree(p2) == 4);
}

TEST_CASE("reconstruction inside the bound and rejection above it") {
    Alphabet x{"X", 2};
    SymPoly e1 = SymPoly::generator(x, 1), e2 = SymPoly::generator(x, 2);
    // N = 5, m = 2: bound 6
    RootSet sigma = RootSet::standard(5);
    CHECK(reconstruct_check(e1.pow(3), 2, sigma));
    CHECK(reconstruct_check(e2.pow(3) - e1 * e2 + SymPoly::constant(4, {x}), 2, sigma));
    CHECK(reconstruct_check(SymPoly::constant(make_rational(2, 7)), 2, sigma));
    CHECK_THROWS_AS(reconstruct_check(e1.pow(4), 2, sigma), DomainError);
    CHECK_THROWS_AS(reconstruct_check(e1, 3, sigma), DomainError);
    CHECK(reconstruct_check(e1.pow(3) * make_rational(1, 3), 2, odd_roots()));
}
