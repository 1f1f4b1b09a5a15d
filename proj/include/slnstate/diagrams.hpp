#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slnstate/symkit.hpp"

namespace slnstate {

struct Edge {
    int id = 0;
    int color = 0;
    bool operator==(const Edge&) const = default;
};

// Ordered incoming and outgoing edge ids.
struct Vertex {
    std::vector<int> in;
    std::vector<int> out;
    bool operator==(const Vertex&) const = default;
};

// Planar arc layout at a crossing: a1 lower-left, a2 lower-right, a3 upper-right,
// a4 upper-left. a1, a2 are incoming; a1 continues to a3 and a2 to a4.
// sign = +1 when the a1-a3 strand passes over.
struct Crossing {
    int sign = 1;
    std::array<int, 4> a{};
    bool operator==(const Crossing&) const = default;
};

struct MoyGraph {
    int N = 0;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    bool operator==(const MoyGraph&) const = default;
};

struct KnottedMoyGraph {
    int N = 0;
    std::vector<Edge> arcs;
    std::vector<Vertex> vertices;
    std::vector<Crossing> crossings;
    bool operator==(const KnottedMoyGraph&) const = default;
};

KnottedMoyGraph as_knotted(const MoyGraph& g);
// Throws DomainError if the diagram still has crossings.
MoyGraph as_moy(const KnottedMoyGraph& d);

// Where an arc starts or ends.
struct ArcEnd {
    enum class Kind { None, Vertex, Crossing } kind = Kind::None;
    int index = -1;  // vertex or crossing index
    int slot = -1;   // position in the vertex list, or 0..3 for a1..a4
};

struct ArcEnds {
    ArcEnd tail;
    ArcEnd head;
};

// Endpoint table aligned with d.arcs; validates endpoint multiplicities.
std::vector<ArcEnds> arc_ends(const KnottedMoyGraph& d);
int arc_index(const KnottedMoyGraph& d, int id);  // -1 if absent

// Checks ids, colors, endpoint multiplicities, crossing colors and flow conservation.
void validate(const KnottedMoyGraph& d);
void validate(const MoyGraph& g);
// Every arc has both endpoints or neither (a free loop).
bool is_closed(const KnottedMoyGraph& d);
bool is_closed(const MoyGraph& g);

// Components of a diagram without MOY vertices, as lists of arc ids in traversal order.
std::vector<std::vector<int>> link_components(const KnottedMoyGraph& d);

KnottedMoyGraph mirror(const KnottedMoyGraph& d);
KnottedMoyGraph reverse_orientation(const KnottedMoyGraph& d);
// Colors k -> N - k; throws DomainError where flow would break.
KnottedMoyGraph color_complement(const KnottedMoyGraph& d);

struct ColoredBraid {
    int strands = 1;
    std::vector<int> word;    // +-i for sigma_i^{+-1}, 1 <= i < strands
    std::vector<int> colors;  // one per closure component
    int N = 2;

    int writhe() const;
    int positive_count() const;
    int negative_count() const;
    int length() const { return static_cast<int>(word.size()); }
    // Components as lists of bottom strand positions; ordered by smallest position.
    std::vector<std::vector<int>> components() const;
    int component_count() const { return static_cast<int>(components().size()); }
};

// `text` is the signed word, e.g. "1 -2 1" or "1,-2,1". A single color applies
// to every component.
ColoredBraid parse_braid(const std::string& text, int strands, const std::vector<int>& colors, int N);
// "b=<int> N=<int>" / signed word / comma-separated colors.
ColoredBraid parse_braid_file(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

KnottedMoyGraph braid_closure_to_knotted(const ColoredBraid& braid);

std::string to_pd_json(const KnottedMoyGraph& d);
KnottedMoyGraph parse_pd_json(const std::string& text);

}  // namespace slnstate
