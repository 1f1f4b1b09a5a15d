#include "slnstate/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace slnstate {

KnottedMoyGraph as_knotted(const MoyGraph& g) { return {g.N, g.edges, g.vertices, {}}; }

MoyGraph as_moy(const KnottedMoyGraph& d) {
    if (!d.crossings.empty()) throw DomainError("diagram has crossings; expected a MOY graph");
    return {d.N, d.arcs, d.vertices};
}

int arc_index(const KnottedMoyGraph& d, int id) {
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        if (d.arcs[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<ArcEnds> arc_ends(const KnottedMoyGraph& d) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        if (!pos.emplace(d.arcs[i].id, static_cast<int>(i)).second)
            throw DomainError("duplicate arc id " + std::to_string(d.arcs[i].id));
    }
    std::vector<ArcEnds> ends(d.arcs.size());
    auto set_end = [&](int id, bool head, ArcEnd e) {
        auto it = pos.find(id);
        if (it == pos.end()) throw DomainError("unknown arc id " + std::to_string(id));
        ArcEnd& slot = head ? ends[static_cast<std::size_t>(it->second)].head
                            : ends[static_cast<std::size_t>(it->second)].tail;
        if (slot.kind != ArcEnd::Kind::None)
            throw DomainError("arc " + std::to_string(id) + " has more than one " +
                              (head ? "head" : "tail"));
        slot = e;
    };
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const auto& vx = d.vertices[v];
        for (std::size_t s = 0; s < vx.in.size(); ++s)
            set_end(vx.in[s], true, {ArcEnd::Kind::Vertex, static_cast<int>(v), static_cast<int>(s)});
        for (std::size_t s = 0; s < vx.out.size(); ++s)
            set_end(vx.out[s], false, {ArcEnd::Kind::Vertex, static_cast<int>(v), static_cast<int>(s)});
    }
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        for (int s = 0; s < 4; ++s)
            set_end(d.crossings[c].a[static_cast<std::size_t>(s)], s < 2,
                    {ArcEnd::Kind::Crossing, static_cast<int>(c), s});
    return ends;
}

void validate(const KnottedMoyGraph& d) {
    if (d.N < 1 || d.N > kMaxRoots)
        throw DomainError("N must lie in 1.." + std::to_string(kMaxRoots));
    auto ends = arc_ends(d);
    (void)ends;
    std::map<int, int> color;
    for (const auto& e : d.arcs) {
        if (e.color < 0 || e.color > d.N)
            throw DomainError("arc " + std::to_string(e.id) + " has color outside 0..N");
        color[e.id] = e.color;
    }
    for (const auto& c : d.crossings) {
        if (c.sign != 1 && c.sign != -1) throw DomainError("crossing sign must be +1 or -1");
        if (color[c.a[0]] != color[c.a[2]] || color[c.a[1]] != color[c.a[3]])
            throw DomainError("crossing strands change color (a1/a3 or a2/a4)");
    }
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        int in = 0, out = 0;
        for (int id : d.vertices[v].in) in += color[id];
        for (int id : d.vertices[v].out) out += color[id];
        if (in != out)
            throw DomainError("flow is not conserved at vertex " + std::to_string(v));
        if (d.vertices[v].in.empty() && d.vertices[v].out.empty())
            throw DomainError("vertex " + std::to_string(v) + " has no edges");
    }
}

void validate(const MoyGraph& g) { validate(as_knotted(g)); }

bool is_closed(const KnottedMoyGraph& d) {
    for (const auto& e : arc_ends(d))
        if ((e.head.kind == ArcEnd::Kind::None) != (e.tail.kind == ArcEnd::Kind::None)) return false;
    return true;
}

bool is_closed(const MoyGraph& g) { return is_closed(as_knotted(g)); }

std::vector<std::vector<int>> link_components(const KnottedMoyGraph& d) {
    if (!d.vertices.empty()) throw DomainError("link components need a diagram without vertices");
    auto ends = arc_ends(d);
    std::vector<bool> seen(d.arcs.size(), false);
    std::vector<std::vector<int>> comps;
    for (std::size_t start = 0; start < d.arcs.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::size_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            comp.push_back(d.arcs[cur].id);
            const auto& h = ends[cur].head;
            if (h.kind == ArcEnd::Kind::None) break;
            int next = d.crossings[static_cast<std::size_t>(h.index)].a[static_cast<std::size_t>(h.slot + 2)];
            cur = static_cast<std::size_t>(arc_index(d, next));
        }
        comps.push_back(comp);
    }
    return comps;
}

KnottedMoyGraph mirror(const KnottedMoyGraph& d) {
    KnottedMoyGraph m = d;
    for (auto& c : m.crossings) c.sign = -c.sign;
    return m;
}

KnottedMoyGraph reverse_orientation(const KnottedMoyGraph& d) {
    KnottedMoyGraph r = d;
    for (auto& v : r.vertices) std::swap(v.in, v.out);
    for (auto& c : r.crossings) {
        std::swap(c.a[0], c.a[2]);
        std::swap(c.a[1], c.a[3]);
    }
    return r;
}

KnottedMoyGraph color_complement(const KnottedMoyGraph& d) {
    KnottedMoyGraph r = d;
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        if (d.vertices[v].in.size() != d.vertices[v].out.size())
            throw DomainError("color complement breaks flow at vertex " + std::to_string(v));
    for (auto& e : r.arcs) e.color = d.N - e.color;
    return r;
}

}  // namespace slnstate
