#include "slnstate/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace slnstate {

namespace {

void check_color(int m, int N) {
    if (N < 2 || N > kMaxRoots) throw DomainError("N must lie in 2.." + std::to_string(kMaxRoots));
    if (m < 1 || m > N - 1) throw DomainError("the color m must satisfy 1 <= m <= N-1");
}

long unit(int m, int N) { return static_cast<long>(m) * (N - m); }

SInvariantResult exact(long v, int m, int N, std::string why) {
    SInvariantResult r;
    r.value = r.lower = r.upper = v;
    r.provenance.push_back(std::move(why));
    r.m = m;
    r.N = N;
    return r;
}

void tighten_lower(SInvariantResult& r, long v, const std::string& why) {
    if (!r.lower || v > *r.lower) {
        r.lower = v;
        r.provenance.push_back("lower " + std::to_string(v) + ": " + why);
    }
}

void tighten_upper(SInvariantResult& r, long v, const std::string& why) {
    if (!r.upper || v < *r.upper) {
        r.upper = v;
        r.provenance.push_back("upper " + std::to_string(v) + ": " + why);
    }
}

}  // namespace

SInvariantResult s_exact(const LinkClass& link, int m, int N) {
    check_color(m, N);
    const long u = unit(m, N);
    if (std::holds_alternative<Unknot>(link)) return exact(0, m, N, "unknot");
    if (auto* ul = std::get_if<Unlink>(&link)) {
        if (ul->components < 1) throw DomainError("an unlink needs at least one component");
        return exact(u * (ul->components - 1), m, N, "unlink with " + std::to_string(ul->components) + " components");
    }
    const auto& br = std::get<ColoredBraid>(link);
    const long b = br.strands, l = br.length();
    if (br.positive_count() == 0)
        return exact(u * (b - l - 1), m, N, "closed negative braid (b=" + std::to_string(b) + ", l=" + std::to_string(l) + ")");
    if (br.negative_count() == 0 && br.component_count() == 1)
        return exact(u * (l - b + 1), m, N,
                     "negation of the mirror, a closed negative braid (b=" + std::to_string(b) + ", l=" +
                         std::to_string(l) + ")");
    return s_bounds(br, m, N);
}

SInvariantResult s_bounds(const ColoredBraid& braid, int m, int N, std::optional<int> genus) {
    check_color(m, N);
    const long u = unit(m, N);
    const long w = braid.writhe(), b = braid.strands;
    const bool knot = braid.component_count() == 1;
    SInvariantResult r;
    r.m = m;
    r.N = N;
    tighten_upper(r, u * (w + b - 1), "slice-Bennequin bound of the closed braid, m(N-m)(w+b-1)");
    if (knot) {
        tighten_lower(r, u * (w - b + 1), "representative self-linking bound, m(N-m)(SL+1) with SL=w-b");
        tighten_lower(r, -u * (-w + b - 1), "slice-Bennequin bound of the mirror, negated");
        if (genus) {
            if (*genus < 0) throw DomainError("slice genus hint must be non-negative");
            long g = 2 * u * *genus;
            tighten_upper(r, g, "slice genus bound |s| <= 2m(N-m)g*");
            tighten_lower(r, -g, "slice genus bound |s| <= 2m(N-m)g*");
        }
    } else if (genus) {
        r.provenance.push_back("slice genus hint ignored: the closure is not a knot");
    }
    if (r.lower && r.upper) {
        if (*r.lower > *r.upper) throw DomainError("bounds are inconsistent (the genus hint is too small)");
        if (*r.lower == *r.upper) r.value = *r.lower;
    }
    return r;
}

std::string to_string(KnotVariant v) {
    switch (v) {
        case KnotVariant::Original: return "K";
        case KnotVariant::Reverse: return "-K";
        case KnotVariant::Bar: return "Kbar";
        case KnotVariant::Mirror: return "K_mir";
    }
    return "?";
}

std::vector<std::string> symmetry_relations(int m, int N, const std::map<SValueKey, long>& values) {
    std::vector<std::string> out;
    std::vector<std::pair<SValueKey, long>> norm;
    for (const auto& [k, v] : values) {
        if (k.color != m && k.color != N - m) {
            out.push_back("color " + std::to_string(k.color) + " is neither m nor N-m");
            continue;
        }
        bool flip = k.variant == KnotVariant::Bar || k.variant == KnotVariant::Mirror;
        norm.emplace_back(k, flip ? -v : v);
    }
    if (norm.size() < 2) return out;
    // The most frequent normalized value is the reference; ties go to the first key.
    long ref = norm.front().second;
    std::size_t best = 0;
    for (const auto& [k, v] : norm) {
        std::size_t c = static_cast<std::size_t>(
            std::count_if(norm.begin(), norm.end(), [&](const auto& p) { return p.second == v; }));
        if (c > best) {
            best = c;
            ref = v;
        }
    }
    for (const auto& [k, v] : norm) {
        if (v == ref) continue;
        long raw = values.at(k);
        out.push_back("s^(" + std::to_string(k.color) + ")(" + to_string(k.variant) + ") = " + std::to_string(raw) +
                      " breaks the relation chain (expected " +
                      std::to_string(k.variant == KnotVariant::Bar || k.variant == KnotVariant::Mirror ? -ref : ref) +
                      ")");
    }
    return out;
}

ChiralityResult chirality_certificate(const ColoredBraid& braid) {
    if (braid.component_count() != 1) throw DomainError("chirality certificate needs a knot (one component)");
    ChiralityResult r;
    r.self_linking = braid.writhe() - braid.strands;
    r.verdict = r.self_linking >= 0 ? Chirality::Chiral : Chirality::Inconclusive;
    return r;
}

CobordismTransport cobordism_constant_state_transport(int source_components, const std::vector<CobordismMove>& moves,
                                                      const std::vector<Subset>& psi, int m, int N) {
    check_color(m, N);
    if (source_components < 0) throw DomainError("negative component count");
    if (static_cast<int>(psi.size()) != source_components)
        throw DomainError("psi must give one subset per source component");
    for (Subset s : psi) {
        if (s.size() != m || !s.subset_of(Subset::full(N))) throw DomainError("psi values must be m-subsets of sigma");
        if (s != psi.front()) throw DomainError("psi must be a constant state");
    }
    std::vector<int> parent;
    std::vector<bool> touches_source;
    auto new_sheet = [&](bool source) {
        parent.push_back(static_cast<int>(parent.size()));
        touches_source.push_back(source);
        return static_cast<int>(parent.size()) - 1;
    };
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    std::vector<int> comps;  // sheet of each current component
    for (int i = 0; i < source_components; ++i) comps.push_back(new_sheet(true));
    CobordismTransport out;
    auto need_index = [&](int i, const char* what) {
        if (i < 0 || i >= static_cast<int>(comps.size()))
            throw DomainError(std::string("malformed move list: ") + what + " index " + std::to_string(i) +
                              " out of range");
    };
    for (const auto& mv : moves) {
        switch (mv.kind) {
            case CobordismMove::Kind::Reidemeister: break;
            case CobordismMove::Kind::SaddleMerge: {
                need_index(mv.first, "merge");
                need_index(mv.second, "merge");
                if (mv.first == mv.second) throw DomainError("malformed move list: merge needs two components");
                int a = find(comps[static_cast<std::size_t>(mv.first)]);
                int b = find(comps[static_cast<std::size_t>(mv.second)]);
                if (a != b) {
                    parent[static_cast<std::size_t>(b)] = a;
                    touches_source[static_cast<std::size_t>(a)] =
                        touches_source[static_cast<std::size_t>(a)] || touches_source[static_cast<std::size_t>(b)];
                }
                comps.erase(comps.begin() + mv.second);
                out.euler_characteristic -= 1;
                break;
            }
            case CobordismMove::Kind::SaddleSplit:
                need_index(mv.first, "split");
                comps.push_back(comps[static_cast<std::size_t>(mv.first)]);
                out.euler_characteristic -= 1;
                break;
            case CobordismMove::Kind::Create:
                comps.push_back(new_sheet(false));
                out.euler_characteristic += 1;
                break;
            case CobordismMove::Kind::Annihilate:
                need_index(mv.first, "annihilate");
                comps.erase(comps.begin() + mv.first);
                out.euler_characteristic += 1;
                break;
        }
    }
    out.degree_bound = -unit(m, N) * out.euler_characteristic;

    std::vector<bool> touches_target(parent.size(), false);
    for (int s : comps) touches_target[static_cast<std::size_t>(find(s))] = true;
    int closed = 0, semi_closed = 0, free_sheets = 0;
    for (std::size_t s = 0; s < parent.size(); ++s) {
        if (find(static_cast<int>(s)) != static_cast<int>(s)) continue;
        bool src = touches_source[s], tgt = touches_target[s];
        if (!src && !tgt) ++closed;
        if (src != tgt) ++semi_closed;
        if (!src && tgt) ++free_sheets;
    }
    mpz_class per;
    mpz_bin_uiui(per.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(m));
    mpz_pow_ui(out.compatible_states.get_mpz_t(), per.get_mpz_t(), static_cast<unsigned long>(free_sheets));
    if (closed || semi_closed) {
        std::string why;
        if (closed) why += std::to_string(closed) + " closed component(s)";
        if (semi_closed) why += std::string(why.empty() ? "" : ", ") + std::to_string(semi_closed) + " semi-closed component(s)";
        out.obstruction = "surface has " + why;
        return out;
    }
    out.target = std::vector<Subset>(comps.size(), source_components ? psi.front() : Subset());
    return out;
}

}  // namespace slnstate
