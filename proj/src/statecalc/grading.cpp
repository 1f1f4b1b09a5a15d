#include "slnstate/statecalc.hpp"

#include <algorithm>
#include <numeric>

namespace slnstate {

namespace {

Subset value_of(const KnottedMoyGraph& d, const State& psi, int id) {
    int i = arc_index(d, id);
    if (i < 0) throw DomainError("unknown arc id " + std::to_string(id));
    return psi.values[static_cast<std::size_t>(i)];
}

void check_shape(const KnottedMoyGraph& d, const State& psi) {
    if (psi.values.size() != d.arcs.size())
        throw DomainError("state has " + std::to_string(psi.values.size()) + " values for " +
                          std::to_string(d.arcs.size()) + " arcs");
}

int color_of(const KnottedMoyGraph& d, int id) {
    return d.arcs[static_cast<std::size_t>(arc_index(d, id))].color;
}

}  // namespace

bool vertex_admissible(const KnottedMoyGraph& d, int vertex, const State& psi) {
    const auto& v = d.vertices[static_cast<std::size_t>(vertex)];
    Subset uin, uout;
    for (int id : v.in) {
        Subset s = value_of(d, psi, id);
        if (!(uin & s).empty()) return false;
        uin = uin | s;
    }
    for (int id : v.out) {
        Subset s = value_of(d, psi, id);
        if (!(uout & s).empty()) return false;
        uout = uout | s;
    }
    return uin == uout;
}

bool crossing_admissible(const KnottedMoyGraph& d, int crossing, const State& psi, bool quasi) {
    const auto& a = d.crossings[static_cast<std::size_t>(crossing)].a;
    Subset v1 = value_of(d, psi, a[0]), v2 = value_of(d, psi, a[1]);
    Subset v3 = value_of(d, psi, a[2]), v4 = value_of(d, psi, a[3]);
    if (!quasi) return v1 == v3 && v2 == v4;
    return (v1 & v2) == (v3 & v4) && (v1 | v2) == (v3 | v4);
}

static bool sizes_ok(const KnottedMoyGraph& d, const State& psi) {
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        if (psi.values[i].size() != d.arcs[i].color || !psi.values[i].subset_of(Subset::full(d.N)))
            return false;
    return true;
}

bool is_state(const KnottedMoyGraph& d, const State& psi) {
    check_shape(d, psi);
    if (!sizes_ok(d, psi)) return false;
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        if (!vertex_admissible(d, static_cast<int>(v), psi)) return false;
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        if (!crossing_admissible(d, static_cast<int>(c), psi, false)) return false;
    return true;
}

bool is_state(const MoyGraph& g, const State& psi) { return is_state(as_knotted(g), psi); }

bool is_quasi_state(const KnottedMoyGraph& d, const State& psi) {
    check_shape(d, psi);
    if (!sizes_ok(d, psi)) return false;
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        if (!vertex_admissible(d, static_cast<int>(v), psi)) return false;
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        if (!crossing_admissible(d, static_cast<int>(c), psi, true)) return false;
    return true;
}

int crossing_grading(const KnottedMoyGraph& d, int crossing, const State& psi) {
    const auto& c = d.crossings[static_cast<std::size_t>(crossing)];
    int n = color_of(d, c.a[0]), m = color_of(d, c.a[1]);
    int inter = (value_of(d, psi, c.a[0]) & value_of(d, psi, c.a[1])).size();
    if (c.sign > 0) return m != n ? inter : inter - n;
    return m != n ? -inter : n - inter;
}

int grading(const KnottedMoyGraph& d, const State& psi) {
    check_shape(d, psi);
    int h = 0;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) h += crossing_grading(d, static_cast<int>(c), psi);
    return h;
}

std::pair<MoyGraph, State> resolve_state(const KnottedMoyGraph& d, const State& psi) {
    check_shape(d, psi);
    if (!is_state(d, psi)) throw DomainError("resolve_state needs a state of the diagram");
    MoyGraph g{d.N, d.arcs, d.vertices};
    State phi = psi;
    int next = 0;
    for (const auto& e : d.arcs) next = std::max(next, e.id + 1);
    for (const auto& c : d.crossings) {
        const int a1 = c.a[0], a2 = c.a[1], a3 = c.a[2], a4 = c.a[3];
        Subset p1 = value_of(d, psi, a1), p2 = value_of(d, psi, a2);
        int n = color_of(d, a1), m = color_of(d, a2);
        Subset s1 = p2 - p1, s2 = p2 & p1, s3 = p1 - p2, s4 = p1 | p2;
        int k = s1.size();
        int e1 = next++, e2 = next++, e3 = next++, e4 = next++;
        g.edges.push_back({e1, k});
        g.edges.push_back({e2, m - k});
        g.edges.push_back({e3, n + k - m});
        g.edges.push_back({e4, n + k});
        phi.values.push_back(s1);
        phi.values.push_back(s2);
        phi.values.push_back(s3);
        phi.values.push_back(s4);
        g.vertices.push_back({{a1, e1}, {e4}});
        g.vertices.push_back({{a2}, {e1, e2}});
        g.vertices.push_back({{e4}, {a4, e3}});
        g.vertices.push_back({{e2, e3}, {a3}});
    }
    return {g, phi};
}

int shift_s(const KnottedMoyGraph& d) {
    if (!d.vertices.empty()) throw DomainError("shift_s needs a diagram without MOY vertices");
    int total = 0;
    for (const auto& c : d.crossings) {
        int n = color_of(d, c.a[0]), m = color_of(d, c.a[1]);
        if (m == n || m == d.N - n) continue;
        total += c.sign > 0 ? d.N - 2 * n : 2 * m - d.N;
    }
    return total;
}

int shift_s_prime(const KnottedMoyGraph& d) {
    if (!d.vertices.empty()) throw DomainError("shift_s_prime needs a diagram without MOY vertices");
    int total = 0;
    for (const auto& c : d.crossings) {
        int n = color_of(d, c.a[0]), m = color_of(d, c.a[1]);
        if (m == n || m == d.N - n) continue;
        total += c.sign > 0 ? d.N - 2 * m : 2 * n - d.N;
    }
    return total;
}

bool vertex_admissible_via_evaluation(const MoyGraph& g, int vertex, const State& phi, const RootSet& sigma) {
    KnottedMoyGraph d = as_knotted(g);
    const auto& v = g.vertices[static_cast<std::size_t>(vertex)];
    std::vector<Rational> xin, yout;
    for (int id : v.in)
        for (auto& r : value_of(d, phi, id).values(sigma)) xin.push_back(r);
    for (int id : v.out)
        for (auto& r : value_of(d, phi, id).values(sigma)) yout.push_back(r);
    if (xin.size() != yout.size()) return false;
    auto ex = elementary_values(xin), ey = elementary_values(yout);
    if (ex != ey) return false;
    const int m = static_cast<int>(xin.size());
    const int N = sigma.size();
    auto h = complete_difference_series(N, xin, sigma.roots());
    for (int p = 1; p <= m; ++p) {
        int k = N + 1 - p;
        if (k < 0) continue;
        if (h[static_cast<std::size_t>(k)] != 0) return false;
    }
    return true;
}

bool admissibility_via_evaluation(const MoyGraph& g, const State& phi, const RootSet& sigma) {
    if (phi.values.size() != g.edges.size()) throw DomainError("pre-state has the wrong number of values");
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (!vertex_admissible_via_evaluation(g, static_cast<int>(v), phi, sigma)) return false;
    return true;
}

RootSet sorted_roots(const RootSet& sigma) {
    auto r = sigma.roots();
    std::sort(r.begin(), r.end());
    return RootSet(r);
}

GradedStateSet relabel_sigma(const GradedStateSet& states, const Rational& a, const Rational& b) {
    if (a == 0) throw DomainError("relabeling needs a != 0");
    const int N = states.sigma.size();
    std::vector<Rational> mapped;
    for (const auto& r : states.sigma.roots()) mapped.push_back(a * r + b);
    std::vector<int> order(static_cast<std::size_t>(N));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return mapped[static_cast<std::size_t>(i)] < mapped[static_cast<std::size_t>(j)];
    });
    std::vector<int> pos(static_cast<std::size_t>(N));
    std::vector<Rational> sorted;
    for (int k = 0; k < N; ++k) {
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
        sorted.push_back(mapped[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]);
    }
    std::vector<std::pair<State, int>> items;
    for (std::size_t i = 0; i < states.states.size(); ++i) {
        State s;
        for (Subset v : states.states[i].values) {
            std::uint32_t bits = 0;
            for (int j : v.indices()) bits |= 1u << pos[static_cast<std::size_t>(j)];
            s.values.emplace_back(bits);
        }
        items.emplace_back(std::move(s), states.h[i]);
    }
    std::sort(items.begin(), items.end());
    GradedStateSet out;
    out.sigma = RootSet(sorted);
    for (auto& [s, h] : items) {
        out.states.push_back(s);
        out.h.push_back(h);
    }
    out.histogram = states.histogram;
    return out;
}

KnottedMoyGraph op_diagram(const KnottedMoyGraph& d) { return color_complement(mirror(d)); }

KnottedMoyGraph bar_diagram(const KnottedMoyGraph& d) { return mirror(reverse_orientation(d)); }

State state_dual_op(const State& psi, int N) {
    State out;
    for (Subset s : psi.values) out.values.push_back(s.complement(N));
    return out;
}

State state_dual_bar(const State& psi) { return psi; }

std::string edge_alphabet(int id) { return "e" + std::to_string(id); }

}  // namespace slnstate
