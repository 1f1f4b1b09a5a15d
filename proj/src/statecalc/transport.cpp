#include "slnstate/statecalc.hpp"

#include <algorithm>

namespace slnstate {

namespace {

struct Ends {
    int tail = -1;  // vertex index
    int head = -1;
};

Ends ends_of(const MoyGraph& g, int id) {
    if (arc_index(as_knotted(g), id) < 0) throw DomainError("unknown edge " + std::to_string(id));
    Ends e;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& vx = g.vertices[v];
        if (std::find(vx.out.begin(), vx.out.end(), id) != vx.out.end()) e.tail = static_cast<int>(v);
        if (std::find(vx.in.begin(), vx.in.end(), id) != vx.in.end()) e.head = static_cast<int>(v);
    }
    return e;
}

int color(const MoyGraph& g, int id) {
    int i = arc_index(as_knotted(g), id);
    if (i < 0) throw DomainError("unknown edge " + std::to_string(id));
    return g.edges[static_cast<std::size_t>(i)].color;
}

int fresh_id(const MoyGraph& g) {
    int next = 0;
    for (const auto& e : g.edges) next = std::max(next, e.id + 1);
    return next;
}

void remove_vertices(MoyGraph& g, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) g.vertices.erase(g.vertices.begin() + *it);
}

void remove_edge(MoyGraph& g, int id) {
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.id == id; }),
                  g.edges.end());
}

void replace_in_vertex_lists(MoyGraph& g, int from, int to, bool in_lists) {
    for (auto& v : g.vertices)
        for (int& x : in_lists ? v.in : v.out)
            if (x == from) x = to;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw DomainError("move site is invalid: " + what);
}

void need_sites(const MoveSite& s, std::size_t n) {
    need(s.edges.size() == n, "expected " + std::to_string(n) + " edge ids");
}

bool same_members(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

std::string to_string(LocalMove m) {
    switch (m) {
        case LocalMove::EdgeSplit: return "edge_split";
        case LocalMove::EdgeMerge: return "edge_merge";
        case LocalMove::Chi1ToChi0: return "chi1";
        case LocalMove::Chi0ToChi1: return "chi0";
        case LocalMove::CircleCreate: return "circle_create";
        case LocalMove::CircleAnnihilate: return "circle_annihilate";
        case LocalMove::Saddle: return "saddle";
    }
    return "?";
}

LocalMove parse_local_move(const std::string& name) {
    for (auto m : {LocalMove::EdgeSplit, LocalMove::EdgeMerge, LocalMove::Chi1ToChi0, LocalMove::Chi0ToChi1,
                   LocalMove::CircleCreate, LocalMove::CircleAnnihilate, LocalMove::Saddle})
        if (to_string(m) == name) return m;
    throw ParseError("unknown move '" + name + "'");
}

MoyGraph apply_move(const MoyGraph& src, LocalMove move, const MoveSite& site) {
    validate(src);
    if (!is_closed(src)) throw DomainError("local moves need a closed MOY graph");
    MoyGraph g = src;
    switch (move) {
        case LocalMove::EdgeSplit: {
            need_sites(site, 1);
            int e = site.edges[0], c = color(g, e);
            need(site.color > 0 && site.color < c, "split color must lie strictly between 0 and the edge color");
            Ends en = ends_of(g, e);
            int f1 = fresh_id(g), f2 = f1 + 1, out = f1 + 2;
            g.edges.push_back({f1, site.color});
            g.edges.push_back({f2, c - site.color});
            if (en.head < 0) {
                g.vertices.push_back({{e}, {f1, f2}});
                g.vertices.push_back({{f1, f2}, {e}});
            } else {
                g.edges.push_back({out, c});
                replace_in_vertex_lists(g, e, out, true);
                g.vertices.push_back({{e}, {f1, f2}});
                g.vertices.push_back({{f1, f2}, {out}});
            }
            break;
        }
        case LocalMove::EdgeMerge: {
            need_sites(site, 2);
            int f1 = site.edges[0], f2 = site.edges[1];
            need(f1 != f2, "merge needs two distinct edges");
            Ends a = ends_of(g, f1), b = ends_of(g, f2);
            need(a.tail >= 0 && a.tail == b.tail && a.head >= 0 && a.head == b.head && a.tail != a.head,
                 "edges must form a digon");
            const auto& split = g.vertices[static_cast<std::size_t>(a.tail)];
            const auto& join = g.vertices[static_cast<std::size_t>(a.head)];
            need(split.in.size() == 1 && same_members(split.out, {f1, f2}), "digon must open at a 1-in vertex");
            need(join.out.size() == 1 && same_members(join.in, {f1, f2}), "digon must close at a 1-out vertex");
            int e = split.in[0], out = join.out[0];
            remove_edge(g, f1);
            remove_edge(g, f2);
            remove_vertices(g, {a.tail, a.head});
            if (out != e) {
                replace_in_vertex_lists(g, out, e, true);
                remove_edge(g, out);
            }
            break;
        }
        case LocalMove::Chi1ToChi0: {
            need_sites(site, 5);
            int e1 = site.edges[0], e2 = site.edges[1], e = site.edges[2], e3 = site.edges[3], e4 = site.edges[4];
            Ends en = ends_of(g, e);
            need(en.tail >= 0 && en.head >= 0 && en.tail != en.head, "middle edge must join two vertices");
            const auto& v1 = g.vertices[static_cast<std::size_t>(en.tail)];
            const auto& v2 = g.vertices[static_cast<std::size_t>(en.head)];
            need(v1.in == std::vector<int>{e1, e2} && v1.out == std::vector<int>{e}, "tail vertex must be (e1,e2)->e");
            need(v2.in == std::vector<int>{e} && v2.out == std::vector<int>{e3, e4}, "head vertex must be e->(e3,e4)");
            int c = color(g, e3) - color(g, e1);
            need(c >= 0, "color of e3 must be at least that of e1");
            int ep = fresh_id(g);
            remove_vertices(g, {en.tail, en.head});
            remove_edge(g, e);
            g.edges.push_back({ep, c});
            g.vertices.push_back({{e1, ep}, {e3}});
            g.vertices.push_back({{e2}, {ep, e4}});
            break;
        }
        case LocalMove::Chi0ToChi1: {
            need_sites(site, 5);
            int e1 = site.edges[0], e2 = site.edges[1], ep = site.edges[2], e3 = site.edges[3], e4 = site.edges[4];
            Ends en = ends_of(g, ep);
            need(en.tail >= 0 && en.head >= 0 && en.tail != en.head, "rung must join two vertices");
            const auto& b = g.vertices[static_cast<std::size_t>(en.tail)];
            const auto& a = g.vertices[static_cast<std::size_t>(en.head)];
            need(a.in == std::vector<int>{e1, ep} && a.out == std::vector<int>{e3}, "vertex A must be (e1,e')->e3");
            need(b.in == std::vector<int>{e2} && b.out == std::vector<int>{ep, e4}, "vertex B must be e2->(e',e4)");
            int e = fresh_id(g);
            int c = color(g, e1) + color(g, e2);
            remove_vertices(g, {en.tail, en.head});
            remove_edge(g, ep);
            g.edges.push_back({e, c});
            g.vertices.push_back({{e1, e2}, {e}});
            g.vertices.push_back({{e}, {e3, e4}});
            break;
        }
        case LocalMove::CircleCreate: {
            need(site.edges.empty(), "circle creation takes no edges");
            need(site.color >= 0 && site.color <= g.N, "circle color must lie in 0..N");
            g.edges.push_back({fresh_id(g), site.color});
            break;
        }
        case LocalMove::CircleAnnihilate: {
            need_sites(site, 1);
            Ends en = ends_of(g, site.edges[0]);
            need(en.tail < 0 && en.head < 0, "only a free circle can be annihilated");
            remove_edge(g, site.edges[0]);
            break;
        }
        case LocalMove::Saddle: {
            need_sites(site, 2);
            int e1 = site.edges[0], e2 = site.edges[1];
            need(e1 != e2, "saddle needs two distinct edges");
            need(color(g, e1) == color(g, e2), "saddle edges must share a color");
            for (int e : {e1, e2}) {
                Ends en = ends_of(g, e);
                if (en.head < 0) g.vertices.push_back({{e}, {e}});
            }
            Ends a = ends_of(g, e1), b = ends_of(g, e2);
            auto& ha = g.vertices[static_cast<std::size_t>(a.head)].in;
            auto& hb = g.vertices[static_cast<std::size_t>(b.head)].in;
            if (a.head == b.head) {
                for (int& x : ha) x = x == e1 ? e2 : (x == e2 ? e1 : x);
            } else {
                std::replace(ha.begin(), ha.end(), e1, e2);
                std::replace(hb.begin(), hb.end(), e2, e1);
            }
            break;
        }
    }
    validate(g);
    return g;
}

std::vector<State> transport(const MoyGraph& g, LocalMove move, const MoveSite& site, const State& phi,
                             const RootSet& sigma) {
    if (!is_state(g, phi)) throw DomainError("transport needs a state of the source graph");
    MoyGraph target = apply_move(g, move, site);
    EnumerationOptions opts;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        int id = g.edges[i].id;
        int j = arc_index(as_knotted(target), id);
        if (j >= 0 && target.edges[static_cast<std::size_t>(j)].color == g.edges[i].color)
            opts.fixed[id] = phi.values[i];
    }
    return enumerate_states(target, sigma, opts).states;
}

}  // namespace slnstate
