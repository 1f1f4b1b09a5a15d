#include <deque>
#include <random>
#include <sstream>

#include "slnstate/circlering.hpp"
#include "slnstate/cli.hpp"
#include "slnstate/interp.hpp"
#include "slnstate/invariants.hpp"
#include "slnstate/statecalc.hpp"

namespace slnstate::cli {

namespace {

struct Collector {
    std::deque<PropertyOutcome> out;

    PropertyOutcome& open(const std::string& name) {
        out.push_back({name, true, 0, ""});
        return out.back();
    }
};

void check(PropertyOutcome& p, bool ok, const std::string& what) {
    ++p.cases;
    if (!ok && p.pass) {
        p.pass = false;
        p.counterexample = what;
    }
}

// Random polynomial in e_1..e_m with total exponent at most N - m per monomial.
SymPoly random_bounded_poly(std::mt19937_64& rng, int m, int N) {
    Alphabet a{"X", m};
    SymPoly p(std::vector<Alphabet>{a});
    std::uniform_int_distribution<int> coef(-9, 9), terms(1, 5), den(1, 4);
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        int budget = std::uniform_int_distribution<int>(0, N - m)(rng);
        for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, m - 1)(rng))];
        int num = coef(rng);
        p.add_term(e, make_rational(num, den(rng)));
    }
    return p;
}

void suite_interpolation(Collector& c, std::uint64_t seed) {
    auto& vanish = c.open("vanishing law h_k(omega - sigma) = 0 for N-m < k <= N-m+5");
    for (int N = 1; N <= 5; ++N) {
        RootSet sigma = RootSet::standard(N);
        for (int m = 1; m <= N; ++m)
            for (Subset s : subsets_of_size(N, m))
                for (int k = N - m + 1; k <= N - m + 5; ++k)
                    check(vanish, complete_difference(k, s.values(sigma), sigma.roots()) == 0,
                          "N=" + std::to_string(N) + " omega=" + to_string(s) + " k=" + std::to_string(k));
    }
    auto& round = c.open("interpolation reconstructs bounded polynomials");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 60; ++i) {
        int N = std::uniform_int_distribution<int>(2, 5)(rng);
        int m = std::uniform_int_distribution<int>(1, N - 1)(rng);
        SymPoly g = random_bounded_poly(rng, m, N);
        bool ok = false;
        try {
            ok = reconstruct_check(g, m, RootSet::standard(N));
        } catch (const DomainError&) {
        }
        check(round, ok, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " g=" + to_string(g));
    }
    auto& reject = c.open("interpolation rejects polynomials above the partial-degree bound");
    for (int N = 2; N <= 5; ++N)
        for (int m = 1; m < N; ++m) {
            SymPoly g = SymPoly::generator({"X", m}, 1).pow(N - m + 1);
            bool threw = false;
            try {
                reconstruct_check(g, m, RootSet::standard(N));
            } catch (const DomainError&) {
                threw = true;
            }
            check(reject, threw, "N=" + std::to_string(N) + " m=" + std::to_string(m));
        }
}

void suite_circle_ring(Collector& c, std::uint64_t seed) {
    auto& dim = c.open("circle ring dimension is C(N,m)");
    auto& basis = c.open("both Schur families are bases");
    auto& pairing = c.open("zeta pairing is the complement permutation");
    for (int N = 1; N <= 4; ++N)
        for (int m = 1; m <= N; ++m) {
            auto r = make_circle_ring(N, m);
            std::string tag = "N=" + std::to_string(N) + " m=" + std::to_string(m);
            check(dim, Rational(r->dimension()) == binomial(N, m), tag);
            bool ok = true;
            try {
                change_of_basis_matrix(*r, false);
                change_of_basis_matrix(*r, true);
            } catch (const DomainError&) {
                ok = false;
            }
            check(basis, ok, tag);
            for (const auto& lambda : r->schur_basis()) {
                auto a = from_schur(r, lambda, false);
                for (const auto& mu : r->schur_basis()) {
                    Rational z = zeta(a * from_schur(r, mu, true));
                    Rational expect = mu == lambda.complement(m, N - m) ? 1 : 0;
                    check(pairing, z == expect, tag + " lambda=" + to_string(lambda) + " mu=" + to_string(mu));
                }
            }
        }
    auto& laws = c.open("ring multiplication is commutative, associative and unital");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int i = 0; i < 40; ++i) {
        int N = std::uniform_int_distribution<int>(2, 5)(rng);
        int m = std::uniform_int_distribution<int>(1, N - 1)(rng);
        auto r = make_circle_ring(N, m);
        auto rnd = [&] {
            CircleRingElement e{r, {}};
            for (int k = 0; k < r->dimension(); ++k) {
                int num = v(rng);
                e.coords.push_back(make_rational(num, 1 + (v(rng) + 5) % 3));
            }
            return e;
        };
        auto a = rnd(), b = rnd(), d = rnd();
        check(laws, a * b == b * a && (a * b) * d == a * (b * d) && a * ring_one(r) == a,
              "N=" + std::to_string(N) + " m=" + std::to_string(m));
    }
}

void suite_idempotents(Collector& c, std::uint64_t) {
    auto& eval = c.open("Q_phi idempotent, orthogonal, summing to one; inadmissible Q_phi vanish");
    auto& adm = c.open("evaluation criterion agrees with set-theoretic admissibility");
    auto& sym = c.open("symbolic normal forms confirm the idempotent identities");
    for (int N = 2; N <= 4; ++N) {
        RootSet sigma = RootSet::standard(N);
        std::vector<std::pair<std::string, MoyGraph>> graphs = {{"circle_1", fixtures::circle(1, N)}};
        for (int a = 1; a < N; ++a)
            for (int b = a; a + b <= N; ++b)
                graphs.emplace_back("theta_" + std::to_string(a) + "_" + std::to_string(b), fixtures::theta(a, b, N));
        for (const auto& [name, g] : graphs) {
            std::string tag = name + " N=" + std::to_string(N);
            auto ring = idempotent_ring(g, sigma);
            StateRingElement total{ring, std::vector<Rational>(static_cast<std::size_t>(ring->dimension()), Rational(0))};
            for (const auto& phi : enumerate_pre_states(g, N)) {
                auto q = reduce_pre_state_idempotent(ring, phi);
                bool admissible = is_state(g, phi);
                check(adm, admissible == admissibility_via_evaluation(g, phi, sigma), tag);
                if (!admissible) {
                    check(eval, q.is_zero(), tag + " inadmissible pre-state survives");
                    continue;
                }
                check(eval, q * q == q, tag + " idempotence");
                check(eval, q == state_idempotent(ring, *ring->position(phi)), tag + " indicator");
                total = total + q;
            }
            check(eval, total == state_ring_one(ring), tag + " sum");
            if (N <= 3 || name == "circle_1" || name == "theta_1_1") {
                auto rep = symbolic_idempotent_check(g, sigma);
                check(sym, rep.ok(), tag + (rep.ok() ? "" : ": " + rep.failures.front()));
            }
        }
    }
}

void suite_moves(Collector& c, std::uint64_t) {
    auto& reid = c.open("Reidemeister fixture pairs share state counts and h-histograms");
    for (const auto& f : fixtures::reidemeister_pairs()) {
        RootSet sigma = RootSet::standard(f.before.N);
        auto a = enumerate_states(braid_closure_to_knotted(f.before), sigma);
        auto b = enumerate_states(braid_closure_to_knotted(f.after), sigma);
        check(reid, a.histogram == b.histogram, f.name);
    }
    auto& card = c.open("transport cardinalities match the local-move counts");
    for (int N = 2; N <= 4; ++N) {
        RootSet sigma = RootSet::standard(N);
        for (int a = 1; a < N; ++a)
            for (int b = 1; a + b <= N; ++b) {
                MoyGraph circ = fixtures::circle(a + b, N);
                for (const auto& phi : enumerate_states(circ, sigma).states) {
                    auto t = transport(circ, LocalMove::EdgeSplit, {{0}, a}, phi, sigma);
                    check(card, Rational(static_cast<long>(t.size())) == binomial(a + b, a),
                          "split N=" + std::to_string(N));
                }
                MoyGraph th = fixtures::theta(a, b, N);
                for (const auto& phi : enumerate_states(th, sigma).states)
                    check(card, transport(th, LocalMove::EdgeMerge, {{0, 1}, 0}, phi, sigma).size() == 1,
                          "merge N=" + std::to_string(N));
            }
        for (int m = 1; m <= N; ++m) {
            MoyGraph circ = fixtures::circle(m, N);
            for (const auto& phi : enumerate_states(circ, sigma).states) {
                auto t = transport(circ, LocalMove::CircleCreate, {{}, m}, phi, sigma);
                check(card, Rational(static_cast<long>(t.size())) == binomial(N, m), "create N=" + std::to_string(N));
                check(card, transport(circ, LocalMove::CircleAnnihilate, {{0}, 0}, phi, sigma).size() == 1,
                      "annihilate N=" + std::to_string(N));
            }
            MoyGraph two = fixtures::two_circles(m, m, N);
            for (const auto& phi : enumerate_states(two, sigma).states) {
                std::size_t expect = phi.values[0] == phi.values[1] ? 1 : 0;
                check(card, transport(two, LocalMove::Saddle, {{0, 1}, 0}, phi, sigma).size() == expect,
                      "saddle N=" + std::to_string(N));
            }
        }
        for (int c1 = 1; c1 < N; ++c1)
            for (int c2 = 1; c1 + c2 <= N; ++c2)
                for (int c3 = c1; c3 <= c1 + c2; ++c3) {
                    MoyGraph g1 = fixtures::chi_gamma1(c1, c2, c3, N);
                    for (const auto& phi : enumerate_states(g1, sigma).states) {
                        std::size_t expect = (phi.values[0] & phi.values[4]).empty() ? 1 : 0;
                        check(card, transport(g1, LocalMove::Chi1ToChi0, {{0, 1, 2, 3, 4}, 0}, phi, sigma).size() == expect,
                              "chi1 N=" + std::to_string(N));
                    }
                    MoyGraph g0 = fixtures::chi_gamma0(c1, c2, c3, N);
                    for (const auto& phi : enumerate_states(g0, sigma).states) {
                        std::size_t expect = (phi.values[0] & phi.values[4]).empty() ? 1 : 0;
                        check(card, transport(g0, LocalMove::Chi0ToChi1, {{0, 1, 2, 3, 4}, 0}, phi, sigma).size() == expect,
                              "chi0 N=" + std::to_string(N));
                    }
                }
    }
}

ColoredBraid torus_negative(int p, int q, int m, int N) {
    ColoredBraid b{p, {}, {m}, N};
    for (int r = 0; r < q; ++r)
        for (int i = 1; i < p; ++i) b.word.push_back(-i);
    int comps = b.component_count();
    b.colors.assign(static_cast<std::size_t>(comps), m);
    return b;
}

void suite_bounds(Collector& c, std::uint64_t seed) {
    auto& inside = c.open("exact negative-braid values lie inside the bound interval");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) {
        int b = std::uniform_int_distribution<int>(1, 5)(rng);
        int l = b == 1 ? 0 : std::uniform_int_distribution<int>(0, 12)(rng);
        int N = std::uniform_int_distribution<int>(2, 5)(rng);
        int m = std::uniform_int_distribution<int>(1, N - 1)(rng);
        ColoredBraid br{b, {}, {m}, N};
        for (int k = 0; k < l; ++k) br.word.push_back(-std::uniform_int_distribution<int>(1, b - 1)(rng));
        br.colors.assign(static_cast<std::size_t>(br.component_count()), m);
        auto e = s_exact(br, m, N);
        auto bd = s_bounds(br, m, N);
        bool ok = e.value && (!bd.lower || *bd.lower <= *e.value) && (!bd.upper || *e.value <= *bd.upper);
        std::ostringstream os;
        os << "b=" << b << " word=";
        for (int g : br.word) os << g << " ";
        check(inside, ok, os.str());
    }
    auto& genus = c.open("|s| = 2m(N-m)g* with 2g* = l+1-b on negative torus knots");
    auto& sym = c.open("symmetry relation chain has no violations");
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {3, 4}})
        for (int N = 2; N <= 5; ++N)
            for (int m = 1; m < N; ++m) {
                ColoredBraid br = torus_negative(p, q, m, N);
                long l = br.length(), b = br.strands;
                auto e = s_exact(br, m, N);
                check(genus, e.value && std::labs(*e.value) == static_cast<long>(m) * (N - m) * (l + 1 - b),
                      "T(" + std::to_string(p) + "," + std::to_string(q) + ") N=" + std::to_string(N));
                ColoredBraid pos = br;
                for (int& g : pos.word) g = -g;
                std::map<SValueKey, long> vals;
                vals[{m, KnotVariant::Original}] = *e.value;
                vals[{N - m, KnotVariant::Original}] = *s_exact(br, N - m, N).value;
                vals[{m, KnotVariant::Mirror}] = *s_exact(pos, m, N).value;
                check(sym, symmetry_relations(m, N, vals).empty(),
                      "T(" + std::to_string(p) + "," + std::to_string(q) + ") N=" + std::to_string(N));
            }
}

}  // namespace

std::vector<std::string> verify_suite_names() { return {"interpolation", "circle-ring", "idempotents", "moves", "bounds"}; }

std::vector<PropertyOutcome> run_verify_suite(const std::string& suite, std::uint64_t seed) {
    Collector c;
    if (suite == "interpolation")
        suite_interpolation(c, seed);
    else if (suite == "circle-ring")
        suite_circle_ring(c, seed);
    else if (suite == "idempotents")
        suite_idempotents(c, seed);
    else if (suite == "moves")
        suite_moves(c, seed);
    else if (suite == "bounds")
        suite_bounds(c, seed);
    else
        throw DomainError("unknown suite '" + suite + "'");
    return {c.out.begin(), c.out.end()};
}

}  // namespace slnstate::cli
