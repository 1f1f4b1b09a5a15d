#include "slnstate/statecalc.hpp"

#include <algorithm>

#include "slnstate/interp.hpp"

namespace slnstate {

IdempotentRing::IdempotentRing(MoyGraph gamma, RootSet sigma, std::vector<State> states)
    : gamma_(std::move(gamma)), sigma_(std::move(sigma)), states_(std::move(states)) {}

std::shared_ptr<const IdempotentRing> IdempotentRing::make(const MoyGraph& gamma, const RootSet& sigma,
                                                           unsigned threads) {
    validate(gamma);
    if (!is_closed(gamma)) throw DomainError("idempotent ring needs a closed MOY graph");
    if (sigma.size() != gamma.N) throw DomainError("sigma must have exactly N roots");
    EnumerationOptions opts;
    opts.threads = threads;
    auto states = enumerate_states(gamma, sigma, opts).states;
    return std::make_shared<const IdempotentRing>(gamma, sigma, std::move(states));
}

std::optional<int> IdempotentRing::position(const State& phi) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), phi);
    if (it == states_.end() || *it != phi) return std::nullopt;
    return static_cast<int>(it - states_.begin());
}

SymPoly IdempotentRing::q_polynomial(const State& phi) const {
    if (phi.values.size() != gamma_.edges.size()) throw DomainError("pre-state has the wrong number of values");
    SymPoly q = SymPoly::constant(1);
    for (std::size_t i = 0; i < gamma_.edges.size(); ++i) {
        const auto& e = gamma_.edges[i];
        if (phi.values[i].size() != e.color) throw DomainError("pre-state value has the wrong size");
        if (e.color == 0) continue;
        auto basis = interpolation_basis(e.color, sigma_, edge_alphabet(e.id));
        for (const auto& b : *basis)
            if (b.omega == phi.values[i]) q = q * b.polynomial();
    }
    return q;
}

IdempotentRingPtr idempotent_ring(const MoyGraph& gamma, const RootSet& sigma, unsigned threads) {
    return IdempotentRing::make(gamma, sigma, threads);
}

namespace {

void check_same(const StateRingElement& a, const StateRingElement& b) {
    if (!a.ring || a.ring != b.ring) throw DomainError("elements belong to different idempotent rings");
}

}  // namespace

StateRingElement StateRingElement::operator+(const StateRingElement& o) const {
    check_same(*this, o);
    StateRingElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

StateRingElement StateRingElement::operator*(const StateRingElement& o) const {
    check_same(*this, o);
    StateRingElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] *= o.coords[i];
    return r;
}

StateRingElement StateRingElement::operator*(const Rational& c) const {
    StateRingElement r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

bool StateRingElement::operator==(const StateRingElement& o) const {
    check_same(*this, o);
    return coords == o.coords;
}

bool StateRingElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

StateRingElement state_ring_one(const IdempotentRingPtr& ring) {
    return {ring, std::vector<Rational>(static_cast<std::size_t>(ring->dimension()), Rational(1))};
}

StateRingElement state_idempotent(const IdempotentRingPtr& ring, int index) {
    if (index < 0 || index >= ring->dimension()) throw DomainError("state index out of range");
    StateRingElement e{ring, std::vector<Rational>(static_cast<std::size_t>(ring->dimension()), Rational(0))};
    e.coords[static_cast<std::size_t>(index)] = 1;
    return e;
}

StateRingElement reduce(const IdempotentRingPtr& ring, const SymPoly& p) {
    const auto& g = ring->graph();
    for (const auto& a : p.alphabets()) {
        bool found = false;
        for (const auto& e : g.edges)
            if (edge_alphabet(e.id) == a.name) {
                if (e.color != a.size) throw DomainError("alphabet '" + a.name + "' has the wrong size");
                found = true;
            }
        if (!found) throw DomainError("alphabet '" + a.name + "' is not an edge of the graph");
    }
    StateRingElement out{ring, {}};
    for (const auto& phi : ring->states()) {
        std::map<std::string, std::vector<Rational>> values;
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].color > 0)
                values[edge_alphabet(g.edges[i].id)] = phi.values[i].values(ring->sigma());
        out.coords.push_back(p.evaluate(values));
    }
    return out;
}

StateRingElement reduce_pre_state_idempotent(const IdempotentRingPtr& ring, const State& phi) {
    const auto& g = ring->graph();
    if (phi.values.size() != g.edges.size()) throw DomainError("pre-state has the wrong number of values");
    // Q_phi is a product over edges, so each coordinate is a product of
    // single-alphabet evaluations.
    std::vector<SymPoly> factors;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (phi.values[i].size() != e.color) throw DomainError("pre-state value has the wrong size");
        SymPoly f = SymPoly::constant(1);
        if (e.color > 0)
            for (const auto& b : *interpolation_basis(e.color, ring->sigma(), "X"))
                if (b.omega == phi.values[i]) f = b.polynomial();
        factors.push_back(std::move(f));
    }
    StateRingElement out{ring, {}};
    for (const auto& psi : ring->states()) {
        Rational c = 1;
        for (std::size_t i = 0; i < g.edges.size() && c != 0; ++i)
            if (g.edges[i].color > 0) c *= factors[i].evaluate(psi.values[i].values(ring->sigma()));
        out.coords.push_back(c);
    }
    return out;
}

}  // namespace slnstate
