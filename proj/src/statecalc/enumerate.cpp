#include "slnstate/statecalc.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace slnstate {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

struct Incidence {
    bool crossing = false;
    int index = 0;
};

class Enumerator {
public:
    Enumerator(const KnottedMoyGraph& d, const RootSet& sigma, bool quasi, const EnumerationOptions& opts)
        : d_(d), N_(sigma.size()), quasi_(quasi), opts_(opts) {
        validate(d);
        if (sigma.size() < d.N)
            throw DomainError("sigma has fewer than N roots");
        ends_ = arc_ends(d);
        const std::size_t n = d.arcs.size();
        for (std::size_t i = 0; i < n; ++i) index_[d.arcs[i].id] = i;
        incident_.resize(n);
        auto add = [&](int id, Incidence inc) {
            auto& list = incident_[idx(id)];
            for (const auto& x : list)
                if (x.crossing == inc.crossing && x.index == inc.index) return;
            list.push_back(inc);
        };
        for (std::size_t v = 0; v < d.vertices.size(); ++v) {
            for (int id : d.vertices[v].in) add(id, {false, static_cast<int>(v)});
            for (int id : d.vertices[v].out) add(id, {false, static_cast<int>(v)});
        }
        for (std::size_t c = 0; c < d.crossings.size(); ++c)
            for (int id : d.crossings[c].a) add(id, {true, static_cast<int>(c)});
        for (const auto& [id, s] : opts.fixed) {
            int i = arc_index(d, id);
            if (i < 0) throw DomainError("fixed value for unknown arc " + std::to_string(id));
            if (s.size() != d.arcs[static_cast<std::size_t>(i)].color || !s.subset_of(Subset::full(N_)))
                throw DomainError("fixed value for arc " + std::to_string(id) + " has the wrong size");
        }
        build_order();
        for (const auto& e : d.arcs) {
            if (e.color > N_) throw DomainError("arc color exceeds the number of roots");
            candidates_.push_back(subsets_of_size(N_, e.color));
        }
    }

    std::vector<State> run(unsigned threads) {
        const std::size_t n = d_.arcs.size();
        if (n == 0) return {State{}};
        std::vector<std::uint32_t> assign(n, kUnset);
        std::size_t first = order_[0];
        std::vector<Subset> firsts = options_for(first, assign);
        std::vector<std::vector<State>> buckets(firsts.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            std::vector<std::uint32_t> a(n, kUnset);
            for (std::size_t k; (k = next.fetch_add(1)) < firsts.size();) {
                a[first] = firsts[k].bits();
                if (consistent(first, a)) dfs(1, a, buckets[k]);
                a[first] = kUnset;
            }
        };
        unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(firsts.size())));
        if (t == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        std::vector<State> out;
        for (auto& b : buckets)
            for (auto& s : b) out.push_back(std::move(s));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const KnottedMoyGraph& d_;
    int N_;
    bool quasi_;
    const EnumerationOptions& opts_;
    std::vector<ArcEnds> ends_;
    std::vector<std::vector<Incidence>> incident_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<Subset>> candidates_;

    std::map<int, std::size_t> index_;

    std::size_t idx(int id) const { return index_.at(id); }

    void build_order() {
        const std::size_t n = d_.arcs.size();
        std::vector<bool> used(n, false);
        for (std::size_t start = 0; start < n; ++start) {
            if (used[start]) continue;
            std::vector<std::size_t> queue{start};
            used[start] = true;
            for (std::size_t q = 0; q < queue.size(); ++q) {
                std::size_t a = queue[q];
                order_.push_back(a);
                for (const auto& inc : incident_[a]) {
                    std::vector<int> ids;
                    if (inc.crossing) {
                        for (int id : d_.crossings[static_cast<std::size_t>(inc.index)].a) ids.push_back(id);
                    } else {
                        const auto& v = d_.vertices[static_cast<std::size_t>(inc.index)];
                        ids = v.in;
                        ids.insert(ids.end(), v.out.begin(), v.out.end());
                    }
                    for (int id : ids) {
                        std::size_t b = idx(id);
                        if (!used[b]) {
                            used[b] = true;
                            queue.push_back(b);
                        }
                    }
                }
            }
        }
    }

    // Value forced on arc a by a constraint whose other arcs are all assigned.
    std::optional<std::uint32_t> forced(std::size_t a, const std::vector<std::uint32_t>& as) const {
        const int id = d_.arcs[a].id;
        for (const auto& inc : incident_[a]) {
            if (inc.crossing) {
                const auto& c = d_.crossings[static_cast<std::size_t>(inc.index)].a;
                int slot = 0;
                while (c[static_cast<std::size_t>(slot)] != id) ++slot;
                if (!quasi_) {
                    std::uint32_t partner = as[idx(c[static_cast<std::size_t>((slot + 2) % 4)])];
                    if (partner != kUnset) return partner;
                    continue;
                }
                std::uint32_t v[4];
                bool all = true;
                for (int s = 0; s < 4; ++s) {
                    if (s == slot) continue;
                    v[s] = as[idx(c[static_cast<std::size_t>(s)])];
                    if (v[s] == kUnset) all = false;
                }
                if (!all) continue;
                // same side pair (a1, a2) or (a3, a4); the other member is `mate`
                int mate = slot ^ 1;
                int o1 = slot < 2 ? 2 : 0, o2 = o1 + 1;
                std::uint32_t inter = v[o1] & v[o2], uni = v[o1] | v[o2];
                return (uni & ~v[mate]) | inter;
            }
            const auto& vx = d_.vertices[static_cast<std::size_t>(inc.index)];
            std::uint32_t uin = 0, uout = 0;
            int missing = 0;
            for (int x : vx.in) {
                std::uint32_t s = as[idx(x)];
                if (s == kUnset) ++missing; else uin |= s;
            }
            for (int x : vx.out) {
                std::uint32_t s = as[idx(x)];
                if (s == kUnset) ++missing; else uout |= s;
            }
            if (missing != 1) continue;
            bool is_in = std::find(vx.in.begin(), vx.in.end(), id) != vx.in.end();
            return is_in ? (uout & ~uin) : (uin & ~uout);
        }
        return std::nullopt;
    }

    std::vector<Subset> options_for(std::size_t a, const std::vector<std::uint32_t>& as) const {
        auto it = opts_.fixed.find(d_.arcs[a].id);
        if (it != opts_.fixed.end()) return {it->second};
        if (auto f = forced(a, as)) {
            Subset s(*f);
            if (s.size() != d_.arcs[a].color) return {};
            return {s};
        }
        return candidates_[a];
    }

    bool vertex_ok(int v, const std::vector<std::uint32_t>& as) const {
        const auto& vx = d_.vertices[static_cast<std::size_t>(v)];
        std::uint32_t uin = 0, uout = 0;
        bool all_in = true, all_out = true;
        for (int x : vx.in) {
            std::uint32_t s = as[idx(x)];
            if (s == kUnset) { all_in = false; continue; }
            if (uin & s) return false;
            uin |= s;
        }
        for (int x : vx.out) {
            std::uint32_t s = as[idx(x)];
            if (s == kUnset) { all_out = false; continue; }
            if (uout & s) return false;
            uout |= s;
        }
        if (all_in && (uout & ~uin)) return false;
        if (all_out && (uin & ~uout)) return false;
        return true;
    }

    bool crossing_ok(int c, const std::vector<std::uint32_t>& as) const {
        const auto& a = d_.crossings[static_cast<std::size_t>(c)].a;
        std::uint32_t v[4];
        for (int s = 0; s < 4; ++s) v[s] = as[idx(a[static_cast<std::size_t>(s)])];
        if (!quasi_) {
            if (v[0] != kUnset && v[2] != kUnset && v[0] != v[2]) return false;
            if (v[1] != kUnset && v[3] != kUnset && v[1] != v[3]) return false;
            return true;
        }
        for (int side = 0; side < 2; ++side) {
            int p = side == 0 ? 0 : 2, q = side == 0 ? 2 : 0;
            if (v[p] == kUnset || v[p + 1] == kUnset) continue;
            std::uint32_t inter = v[p] & v[p + 1], uni = v[p] | v[p + 1];
            for (int s = q; s < q + 2; ++s)
                if (v[s] != kUnset && ((inter & ~v[s]) || (v[s] & ~uni))) return false;
            if (v[q] != kUnset && v[q + 1] != kUnset &&
                ((v[q] & v[q + 1]) != inter || (v[q] | v[q + 1]) != uni))
                return false;
        }
        return true;
    }

    bool consistent(std::size_t a, const std::vector<std::uint32_t>& as) const {
        for (const auto& inc : incident_[a])
            if (!(inc.crossing ? crossing_ok(inc.index, as) : vertex_ok(inc.index, as))) return false;
        return true;
    }

    void dfs(std::size_t k, std::vector<std::uint32_t>& as, std::vector<State>& out) const {
        if (k == order_.size()) {
            State s;
            s.values.reserve(as.size());
            for (auto b : as) s.values.emplace_back(b);
            out.push_back(std::move(s));
            return;
        }
        std::size_t a = order_[k];
        for (Subset s : options_for(a, as)) {
            as[a] = s.bits();
            if (consistent(a, as)) dfs(k + 1, as, out);
        }
        as[a] = kUnset;
    }
};

GradedStateSet graded(const KnottedMoyGraph& d, const RootSet& sigma, std::vector<State> states) {
    GradedStateSet g;
    g.sigma = sigma;
    g.states = std::move(states);
    for (const auto& s : g.states) {
        int h = grading(d, s);
        g.h.push_back(h);
        ++g.histogram[h];
    }
    return g;
}

}  // namespace

GradedStateSet enumerate_states(const KnottedMoyGraph& d, const RootSet& sigma, const EnumerationOptions& opts) {
    Enumerator e(d, sigma, false, opts);
    return graded(d, sigma, e.run(opts.threads));
}

GradedStateSet enumerate_states(const MoyGraph& g, const RootSet& sigma, const EnumerationOptions& opts) {
    return enumerate_states(as_knotted(g), sigma, opts);
}

GradedStateSet enumerate_quasi_states(const KnottedMoyGraph& d, const RootSet& sigma,
                                      const EnumerationOptions& opts) {
    Enumerator e(d, sigma, true, opts);
    return graded(d, sigma, e.run(opts.threads));
}

std::vector<State> enumerate_pre_states(const MoyGraph& g, int N) {
    std::vector<State> out{State{}};
    for (const auto& e : g.edges) {
        std::vector<State> next;
        for (const auto& s : out)
            for (Subset v : subsets_of_size(N, e.color)) {
                State t = s;
                t.values.push_back(v);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace slnstate
