#pragma once

#include <map>
#include <memory>
#include <optional>

#include "slnstate/diagrams.hpp"
#include "slnstate/symkit.hpp"

namespace slnstate {

// Assignment of a root subset to every arc, aligned with the diagram's arc list.
struct State {
    std::vector<Subset> values;
    auto operator<=>(const State&) const = default;
};

struct GradedStateSet {
    RootSet sigma;
    std::vector<State> states;  // sorted
    std::vector<int> h;         // aligned with states
    std::map<int, long> histogram;
};

struct EnumerationOptions {
    unsigned threads = 1;
    std::map<int, Subset> fixed;  // arc id -> prescribed value
};

GradedStateSet enumerate_states(const KnottedMoyGraph& d, const RootSet& sigma,
                                const EnumerationOptions& opts = {});
GradedStateSet enumerate_states(const MoyGraph& g, const RootSet& sigma,
                                const EnumerationOptions& opts = {});
GradedStateSet enumerate_quasi_states(const KnottedMoyGraph& d, const RootSet& sigma,
                                      const EnumerationOptions& opts = {});
// Every assignment of subsets of the right sizes, without admissibility.
std::vector<State> enumerate_pre_states(const MoyGraph& g, int N);

bool vertex_admissible(const KnottedMoyGraph& d, int vertex, const State& psi);
bool crossing_admissible(const KnottedMoyGraph& d, int crossing, const State& psi, bool quasi);
bool is_state(const KnottedMoyGraph& d, const State& psi);
bool is_state(const MoyGraph& g, const State& psi);
bool is_quasi_state(const KnottedMoyGraph& d, const State& psi);

// Crossing contribution h_psi(c) and the total grading h(psi).
int crossing_grading(const KnottedMoyGraph& d, int crossing, const State& psi);
int grading(const KnottedMoyGraph& d, const State& psi);

// Resolution of every crossing into its square, with the unique compatible state.
// Throws DomainError when psi is not a state of d.
std::pair<MoyGraph, State> resolve_state(const KnottedMoyGraph& d, const State& psi);

// Global shifts; d must have no MOY vertices.
int shift_s(const KnottedMoyGraph& d);
int shift_s_prime(const KnottedMoyGraph& d);

// Vertex-by-vertex test through the generators of the vertex ideals.
bool admissibility_via_evaluation(const MoyGraph& g, const State& phi, const RootSet& sigma);
bool vertex_admissible_via_evaluation(const MoyGraph& g, int vertex, const State& phi,
                                      const RootSet& sigma);

// Apply r -> a r + b to sigma (a != 0) and re-express the states over the sorted new roots.
GradedStateSet relabel_sigma(const GradedStateSet& states, const Rational& a, const Rational& b);
RootSet sorted_roots(const RootSet& sigma);

// Duality partners: L^op = color complement of the mirror, Lbar = mirror of the reverse.
KnottedMoyGraph op_diagram(const KnottedMoyGraph& d);
KnottedMoyGraph bar_diagram(const KnottedMoyGraph& d);
State state_dual_op(const State& psi, int N);
State state_dual_bar(const State& psi);

std::string edge_alphabet(int id);

// Ring spanned by the idempotents Q_phi, phi in S(Gamma), in evaluation coordinates.
class IdempotentRing : public std::enable_shared_from_this<IdempotentRing> {
public:
    static std::shared_ptr<const IdempotentRing> make(const MoyGraph& gamma, const RootSet& sigma,
                                                      unsigned threads = 1);

    const MoyGraph& graph() const { return gamma_; }
    const RootSet& sigma() const { return sigma_; }
    const std::vector<State>& states() const { return states_; }
    int dimension() const { return static_cast<int>(states_.size()); }
    std::optional<int> position(const State& phi) const;

    // Q_phi = prod_e q_{phi(e)}(X_e) for any pre-state phi.
    SymPoly q_polynomial(const State& phi) const;

    IdempotentRing(MoyGraph gamma, RootSet sigma, std::vector<State> states);

private:
    MoyGraph gamma_;
    RootSet sigma_;
    std::vector<State> states_;
};

using IdempotentRingPtr = std::shared_ptr<const IdempotentRing>;

struct StateRingElement {
    IdempotentRingPtr ring;
    std::vector<Rational> coords;

    StateRingElement operator+(const StateRingElement& o) const;
    StateRingElement operator*(const StateRingElement& o) const;
    StateRingElement operator*(const Rational& c) const;
    bool operator==(const StateRingElement& o) const;
    bool is_zero() const;
};

IdempotentRingPtr idempotent_ring(const MoyGraph& gamma, const RootSet& sigma, unsigned threads = 1);
StateRingElement state_ring_one(const IdempotentRingPtr& ring);
StateRingElement state_idempotent(const IdempotentRingPtr& ring, int index);
// Image of a polynomial in the edge alphabets (named by edge_alphabet).
StateRingElement reduce(const IdempotentRingPtr& ring, const SymPoly& p);
StateRingElement reduce_pre_state_idempotent(const IdempotentRingPtr& ring, const State& phi);

// Local moves on closed MOY graphs.
enum class LocalMove { EdgeSplit, EdgeMerge, Chi1ToChi0, Chi0ToChi1, CircleCreate, CircleAnnihilate, Saddle };

std::string to_string(LocalMove m);
LocalMove parse_local_move(const std::string& name);

// edges: EdgeSplit [e]; EdgeMerge [f1, f2]; Chi1ToChi0 [e1, e2, e, e3, e4];
// Chi0ToChi1 [e1, e2, e', e3, e4]; CircleAnnihilate [e]; Saddle [e1, e2].
// color: the first summand for EdgeSplit, the new circle for CircleCreate.
struct MoveSite {
    std::vector<int> edges;
    int color = 0;
};

MoyGraph apply_move(const MoyGraph& g, LocalMove move, const MoveSite& site);
// States of the moved graph agreeing with phi on every surviving edge.
std::vector<State> transport(const MoyGraph& g, LocalMove move, const MoveSite& site, const State& phi,
                             const RootSet& sigma);

// Symbolic normal forms modulo the per-edge ideals (h_{N-c+1..N}(X_e - sigma)).
struct VariableBlock {
    int first = 0;
    int size = 0;
};

MonomialPoly reduce_normal_form(const MonomialPoly& p, const std::vector<VariableBlock>& blocks,
                                const RootSet& sigma);
// q_omega in the variables of one block.
MonomialPoly block_idempotent(int variables, const VariableBlock& block, Subset omega,
                              const RootSet& sigma);

struct SymbolicReport {
    long checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Verifies idempotence, orthogonality, the partition of unity and the vanishing of
// inadmissible pre-state idempotents by exact polynomial reduction.
SymbolicReport symbolic_idempotent_check(const MoyGraph& g, const RootSet& sigma);

namespace fixtures {

MoyGraph circle(int m, int N);
MoyGraph theta(int a, int b, int N);
MoyGraph two_circles(int m, int n, int N);
MoyGraph square(int n, int m, int k, int N);  // resolved crossing square, closed up
MoyGraph chi_gamma1(int c1, int c2, int c3, int N);  // colors of e1, e2, e3; e4 = c1 + c2 - c3
MoyGraph chi_gamma0(int c1, int c2, int c3, int N);
MoyGraph four_valent(int a, int b, int c, int N);  // a + b in, c + (a + b - c) out
MoyGraph split_theta(int a, int b, int N);          // theta with its fat edge split again
MoyGraph with_zero_edge(int m, int N);
MoyGraph double_theta(int a, int b, int N);          // disjoint union of two thetas

struct NamedGraph {
    std::string name;
    MoyGraph graph;
};

std::vector<NamedGraph> moy_graphs(int N);

struct NamedBraidPair {
    std::string name;
    ColoredBraid before;
    ColoredBraid after;
};

// Braid-closure diagram pairs related by a single Reidemeister move.
std::vector<NamedBraidPair> reidemeister_pairs();

}  // namespace fixtures

}  // namespace slnstate
