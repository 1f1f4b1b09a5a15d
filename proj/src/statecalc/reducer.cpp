#include "slnstate/statecalc.hpp"

#include <algorithm>

namespace slnstate {

namespace {

// h_k(x_first.. x_{first+count-1} - sigma) in an ambient ring of `variables`.
MonomialPoly complete_minus_sigma(int variables, int first, int count, int k, const RootSet& sigma) {
    auto e = elementary_values(sigma.roots());
    MonomialPoly out(variables);
    for (int j = 0; j <= k && j < static_cast<int>(e.size()); ++j) {
        Rational c = (j % 2 ? -1 : 1) * e[static_cast<std::size_t>(j)];
        out = out + monomial_complete(variables, first, count, k - j) * c;
    }
    return out;
}

struct Rule {
    int var;
    int degree;
    MonomialPoly tail;  // x_var^degree == tail modulo the ideal
};

std::vector<Rule> rules_for(int variables, const std::vector<VariableBlock>& blocks, const RootSet& sigma) {
    const int N = sigma.size();
    std::vector<Rule> rules;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.size; ++i) {
            int d = N - b.size + i + 1;
            MonomialPoly g = complete_minus_sigma(variables, b.first + i, b.size - i, d, sigma);
            MonomialPoly lead(variables);
            MonomialPoly::Exponents e(static_cast<std::size_t>(variables), 0);
            e[static_cast<std::size_t>(b.first + i)] = d;
            lead.add_term(e, 1);
            rules.push_back({b.first + i, d, lead - g});
        }
    }
    return rules;
}

}  // namespace

MonomialPoly reduce_normal_form(const MonomialPoly& p, const std::vector<VariableBlock>& blocks,
                                const RootSet& sigma) {
    const int n = p.variables();
    auto rules = rules_for(n, blocks, sigma);
    std::map<MonomialPoly::Exponents, Rational> work(p.terms().begin(), p.terms().end());
    MonomialPoly out(n);
    while (!work.empty()) {
        auto it = std::prev(work.end());  // lex-largest term
        auto e = it->first;
        Rational c = it->second;
        work.erase(it);
        const Rule* rule = nullptr;
        for (const auto& r : rules)
            if (e[static_cast<std::size_t>(r.var)] >= r.degree) {
                rule = &r;
                break;
            }
        if (!rule) {
            out.add_term(e, c);
            continue;
        }
        e[static_cast<std::size_t>(rule->var)] -= rule->degree;
        for (const auto& [te, tc] : rule->tail.terms()) {
            MonomialPoly::Exponents f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += te[i];
            Rational v = c * tc;
            auto w = work.find(f);
            if (w == work.end()) {
                work.emplace(f, v);
            } else {
                w->second += v;
                if (w->second == 0) work.erase(w);
            }
        }
    }
    return out;
}

MonomialPoly block_idempotent(int variables, const VariableBlock& block, Subset omega, const RootSet& sigma) {
    const int N = sigma.size();
    if (omega.size() != block.size) throw DomainError("subset size must match the block size");
    MonomialPoly q = MonomialPoly::constant(variables, 1);
    Rational den = 1;
    for (int r = 0; r < N; ++r) {
        if (omega.contains(r)) continue;
        for (int i = 0; i < block.size; ++i)
            q = q * (MonomialPoly::variable(variables, block.first + i) - MonomialPoly::constant(variables, sigma[r]));
        for (int s : omega.indices()) den *= sigma[s] - sigma[r];
    }
    return q * (Rational(1) / den);
}

namespace {

struct Layout {
    int variables = 0;
    std::map<int, VariableBlock> block;  // edge id -> block
};

Layout layout_for(const MoyGraph& g, const std::vector<int>& ids) {
    Layout l;
    for (int id : ids) {
        if (l.block.count(id)) continue;
        int c = g.edges[static_cast<std::size_t>(arc_index(as_knotted(g), id))].color;
        if (c == 0) continue;
        l.block[id] = {l.variables, c};
        l.variables += c;
    }
    return l;
}

std::vector<VariableBlock> blocks_of(const Layout& l) {
    std::vector<VariableBlock> b;
    for (const auto& [id, blk] : l.block) b.push_back(blk);
    std::sort(b.begin(), b.end(), [](const VariableBlock& x, const VariableBlock& y) { return x.first < y.first; });
    return b;
}

MonomialPoly q_local(const MoyGraph& g, const Layout& l, const State& phi, const RootSet& sigma) {
    MonomialPoly q = MonomialPoly::constant(l.variables, 1);
    for (const auto& [id, blk] : l.block)
        q = q * block_idempotent(l.variables, blk, phi.values[static_cast<std::size_t>(arc_index(as_knotted(g), id))],
                                 sigma);
    return q;
}

std::string describe(const State& phi) {
    std::string s = "[";
    for (std::size_t i = 0; i < phi.values.size(); ++i) s += (i ? "," : "") + to_string(phi.values[i]);
    return s + "]";
}

}  // namespace

SymbolicReport symbolic_idempotent_check(const MoyGraph& g, const RootSet& sigma) {
    validate(g);
    if (sigma.size() != g.N) throw DomainError("sigma must have exactly N roots");
    const int N = g.N;
    SymbolicReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

    // Per-edge identities in the quotient of a single alphabet.
    for (const auto& e : g.edges) {
        if (e.color == 0) continue;
        VariableBlock blk{0, e.color};
        auto subs = subsets_of_size(N, e.color);
        std::vector<MonomialPoly> q;
        MonomialPoly sum(e.color);
        for (Subset s : subs) {
            q.push_back(block_idempotent(e.color, blk, s, sigma));
            sum = sum + q.back();
        }
        ++rep.checks;
        if (!(sum == MonomialPoly::constant(e.color, 1))) fail("edge " + std::to_string(e.id) + ": sum of q is not 1");
        for (std::size_t i = 0; i < q.size(); ++i) {
            auto qi = reduce_normal_form(q[i], {blk}, sigma);
            ++rep.checks;
            if (qi.is_zero()) fail("edge " + std::to_string(e.id) + ": q" + to_string(subs[i]) + " reduces to 0");
            for (std::size_t j = i; j < q.size(); ++j) {
                auto prod = reduce_normal_form(q[i] * q[j], {blk}, sigma);
                ++rep.checks;
                if (i == j && !(prod == qi))
                    fail("edge " + std::to_string(e.id) + ": q" + to_string(subs[i]) + " is not idempotent");
                if (i != j && !prod.is_zero())
                    fail("edge " + std::to_string(e.id) + ": q" + to_string(subs[i]) + " q" + to_string(subs[j]) +
                         " is not 0");
            }
        }
    }

    // Whole-graph identities for Q_phi in all edge variables.
    std::vector<int> all_ids;
    for (const auto& e : g.edges) all_ids.push_back(e.id);
    Layout full = layout_for(g, all_ids);
    auto full_blocks = blocks_of(full);
    auto pre = enumerate_pre_states(g, N);
    const bool expand_all = full.variables <= 6 && pre.size() <= 200;
    if (expand_all) {
        std::vector<MonomialPoly> nf;
        MonomialPoly total(full.variables);
        for (const auto& phi : pre) {
            auto q = q_local(g, full, phi, sigma);
            total = total + q;
            nf.push_back(reduce_normal_form(q, full_blocks, sigma));
        }
        ++rep.checks;
        if (!(total == MonomialPoly::constant(full.variables, 1))) fail("sum of Q over pre-states is not 1");
        for (std::size_t i = 0; i < pre.size(); ++i) {
            std::size_t j = (i + 1) % pre.size();
            auto sq = reduce_normal_form(nf[i] * nf[i], full_blocks, sigma);
            ++rep.checks;
            if (!(sq == nf[i])) fail("Q" + describe(pre[i]) + " is not idempotent");
            if (j != i) {
                auto pr = reduce_normal_form(nf[i] * nf[j], full_blocks, sigma);
                ++rep.checks;
                if (!pr.is_zero()) fail("Q" + describe(pre[i]) + " Q" + describe(pre[j]) + " is not 0");
            }
        }
    }

    // Inadmissible pre-states: find a vertex ideal generator g with g(phi) = c != 0
    // and check (g - c) Q_local == 0 in the per-edge quotient.
    auto d = as_knotted(g);
    for (const auto& phi : pre) {
        if (is_state(g, phi)) continue;
        bool certified = false;
        for (std::size_t v = 0; v < g.vertices.size() && !certified; ++v) {
            if (vertex_admissible(d, static_cast<int>(v), phi)) continue;
            const auto& vx = g.vertices[v];
            std::vector<int> ids = vx.in;
            ids.insert(ids.end(), vx.out.begin(), vx.out.end());
            Layout l = layout_for(g, ids);
            auto blocks = blocks_of(l);
            std::vector<Rational> xin, yout;
            std::vector<int> in_vars, out_vars;
            for (int id : vx.in) {
                auto it = l.block.find(id);
                if (it == l.block.end()) continue;
                for (int k = 0; k < it->second.size; ++k) in_vars.push_back(it->second.first + k);
                for (auto& r : phi.values[static_cast<std::size_t>(arc_index(d, id))].values(sigma)) xin.push_back(r);
            }
            for (int id : vx.out) {
                auto it = l.block.find(id);
                if (it == l.block.end()) continue;
                for (int k = 0; k < it->second.size; ++k) out_vars.push_back(it->second.first + k);
                for (auto& r : phi.values[static_cast<std::size_t>(arc_index(d, id))].values(sigma)) yout.push_back(r);
            }
            // Elementary and complete functions in an arbitrary subset of the variables.
            auto elem = [&](const std::vector<int>& vars, int k) {
                MonomialPoly p(l.variables);
                for (Subset s : subsets_of_size(static_cast<int>(vars.size()), k)) {
                    MonomialPoly::Exponents e(static_cast<std::size_t>(l.variables), 0);
                    for (int i : s.indices()) e[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])] = 1;
                    p.add_term(e, 1);
                }
                return p;
            };
            auto complete = [&](const std::vector<int>& vars, int k) {
                MonomialPoly small = monomial_complete(static_cast<int>(vars.size()), 0, static_cast<int>(vars.size()), k);
                MonomialPoly p(l.variables);
                for (const auto& [se, c] : small.terms()) {
                    MonomialPoly::Exponents e(static_cast<std::size_t>(l.variables), 0);
                    for (std::size_t i = 0; i < vars.size(); ++i) e[static_cast<std::size_t>(vars[i])] = se[i];
                    p.add_term(e, c);
                }
                return p;
            };
            const int m = static_cast<int>(in_vars.size());
            std::vector<std::pair<MonomialPoly, Rational>> gens;
            for (int p = 1; p <= std::max(m, static_cast<int>(out_vars.size())); ++p)
                gens.emplace_back(elem(in_vars, p) - elem(out_vars, p),
                                  elementary_value(p, xin) - elementary_value(p, yout));
            auto es = elementary_values(sigma.roots());
            for (int p = 1; p <= m; ++p) {
                int k = N + 1 - p;
                if (k < 0) continue;
                MonomialPoly h(l.variables);
                for (int j = 0; j <= k && j < static_cast<int>(es.size()); ++j)
                    h = h + complete(in_vars, k - j) * ((j % 2 ? -1 : 1) * es[static_cast<std::size_t>(j)]);
                gens.emplace_back(h, complete_difference(k, xin, sigma.roots()));
            }
            auto q = q_local(g, l, phi, sigma);
            for (const auto& [gen, c] : gens) {
                if (c == 0) continue;
                auto r = reduce_normal_form((gen - MonomialPoly::constant(l.variables, c)) * q, blocks, sigma);
                ++rep.checks;
                if (r.is_zero()) certified = true;
                break;
            }
        }
        if (!certified) fail("no vanishing certificate for inadmissible pre-state " + describe(phi));
    }
    return rep;
}

}  // namespace slnstate
