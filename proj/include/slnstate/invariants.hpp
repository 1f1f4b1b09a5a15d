#pragma once

#include <optional>
#include <string>
#include <variant>

#include "slnstate/diagrams.hpp"
#include "slnstate/statecalc.hpp"

namespace slnstate {

struct SInvariantResult {
    std::optional<long> value;
    std::optional<long> lower;
    std::optional<long> upper;
    std::vector<std::string> provenance;
    int m = 1;
    int N = 2;
};

struct Unknot {};
struct Unlink {
    int components = 1;
};
// Diagram classes accepted by s_exact; a braid is classified by its word.
using LinkClass = std::variant<Unknot, Unlink, ColoredBraid>;

SInvariantResult s_exact(const LinkClass& link, int m, int N);
SInvariantResult s_bounds(const ColoredBraid& braid, int m, int N, std::optional<int> slice_genus_hint = {});

enum class KnotVariant { Original, Reverse, Bar, Mirror };

struct SValueKey {
    int color = 1;
    KnotVariant variant = KnotVariant::Original;
    auto operator<=>(const SValueKey&) const = default;
};

std::string to_string(KnotVariant v);
// Violations of s(K) = s^(N-m)(K) = s(-K) = -s(Kbar) = -s(K_mir) among the supplied values.
std::vector<std::string> symmetry_relations(int m, int N, const std::map<SValueKey, long>& values);

enum class Chirality { Chiral, Inconclusive };
struct ChiralityResult {
    Chirality verdict = Chirality::Inconclusive;
    int self_linking = 0;
};
ChiralityResult chirality_certificate(const ColoredBraid& braid);

// Elementary cobordism moves acting on an ordered list of link components.
struct CobordismMove {
    enum class Kind { Reidemeister, SaddleMerge, SaddleSplit, Create, Annihilate } kind = Kind::Reidemeister;
    int first = -1;   // merge: kept component; split / annihilate: component
    int second = -1;  // merge: absorbed component
};

struct CobordismTransport {
    int euler_characteristic = 0;
    long degree_bound = 0;  // -m(N-m) chi
    // Number of states of the target compatible with psi via the surface.
    mpz_class compatible_states;
    std::optional<std::vector<Subset>> target;  // constant state per target component
    std::optional<std::string> obstruction;
};

CobordismTransport cobordism_constant_state_transport(int source_components,
                                                      const std::vector<CobordismMove>& moves,
                                                      const std::vector<Subset>& psi, int m, int N);

}  // namespace slnstate
