#include "slnstate/diagrams.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace slnstate {

int ColoredBraid::writhe() const { return positive_count() - negative_count(); }

int ColoredBraid::positive_count() const {
    int n = 0;
    for (int g : word) n += g > 0;
    return n;
}

int ColoredBraid::negative_count() const {
    int n = 0;
    for (int g : word) n += g < 0;
    return n;
}

std::vector<std::vector<int>> ColoredBraid::components() const {
    // perm[p] = top position of the strand starting at bottom position p
    std::vector<int> at(static_cast<std::size_t>(strands));
    std::iota(at.begin(), at.end(), 0);  // at[position] = starting strand
    for (int g : word) {
        int i = std::abs(g) - 1;
        std::swap(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(i + 1)]);
    }
    std::vector<int> perm(static_cast<std::size_t>(strands));
    for (int p = 0; p < strands; ++p) perm[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
    std::vector<bool> seen(static_cast<std::size_t>(strands), false);
    std::vector<std::vector<int>> comps;
    for (int p = 0; p < strands; ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        std::vector<int> c;
        for (int q = p; !seen[static_cast<std::size_t>(q)]; q = perm[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = true;
            c.push_back(q);
        }
        comps.push_back(c);
    }
    return comps;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string t = text;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream is(t);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

ColoredBraid parse_braid(const std::string& text, int strands, const std::vector<int>& colors, int N) {
    ColoredBraid b;
    b.strands = strands;
    b.N = N;
    b.word = parse_int_list(text);
    if (strands < 1) throw DomainError("a braid needs at least one strand");
    if (N < 1 || N > kMaxRoots) throw DomainError("N must lie in 1.." + std::to_string(kMaxRoots));
    for (int g : b.word)
        if (g == 0 || std::abs(g) >= strands)
            throw DomainError("generator " + std::to_string(g) + " is out of range for " +
                              std::to_string(strands) + " strands");
    int comps = b.component_count();
    if (colors.size() == 1)
        b.colors.assign(static_cast<std::size_t>(comps), colors[0]);
    else if (static_cast<int>(colors.size()) == comps)
        b.colors = colors;
    else
        throw DomainError("braid closure has " + std::to_string(comps) + " components but " +
                          std::to_string(colors.size()) + " colors were given");
    for (int c : b.colors)
        if (c < 0 || c > N) throw DomainError("colors must lie in 0..N");
    return b;
}

ColoredBraid parse_braid_file(const std::string& text) {
    std::istringstream is(text);
    std::string header, word, colors;
    if (!std::getline(is, header)) throw ParseError("braid file is empty");
    std::getline(is, word);
    std::getline(is, colors);
    int b = -1, N = -1;
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad header token '" + tok + "'");
        auto key = tok.substr(0, eq);
        auto vals = parse_int_list(tok.substr(eq + 1));
        if (vals.size() != 1) throw ParseError("bad header value in '" + tok + "'");
        if (key == "b")
            b = vals[0];
        else if (key == "N")
            N = vals[0];
        else
            throw ParseError("unknown header key '" + key + "'");
    }
    if (b < 0 || N < 0) throw ParseError("header must give b=<int> N=<int>");
    auto cols = parse_int_list(colors);
    if (cols.empty()) throw ParseError("braid file lists no colors");
    return parse_braid(word, b, cols, N);
}

KnottedMoyGraph braid_closure_to_knotted(const ColoredBraid& braid) {
    const int b = braid.strands;
    auto comps = braid.components();
    if (comps.size() != braid.colors.size()) throw DomainError("braid colors do not match its components");
    std::vector<int> pos_color(static_cast<std::size_t>(b));
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int p : comps[c]) pos_color[static_cast<std::size_t>(p)] = braid.colors[c];

    // Raw arcs: 0..b-1 are bottom placeholders, then two per crossing.
    std::vector<int> parent;
    std::vector<int> raw_color;
    auto fresh = [&](int color) {
        parent.push_back(static_cast<int>(parent.size()));
        raw_color.push_back(color);
        return static_cast<int>(parent.size()) - 1;
    };
    std::vector<int> current;
    for (int p = 0; p < b; ++p) current.push_back(fresh(pos_color[static_cast<std::size_t>(p)]));
    std::vector<Crossing> raw;
    for (int g : braid.word) {
        std::size_t i = static_cast<std::size_t>(std::abs(g) - 1);
        Crossing c;
        c.sign = g > 0 ? 1 : -1;
        c.a[0] = current[i];
        c.a[1] = current[i + 1];
        c.a[2] = fresh(raw_color[static_cast<std::size_t>(c.a[0])]);
        c.a[3] = fresh(raw_color[static_cast<std::size_t>(c.a[1])]);
        current[i + 1] = c.a[2];
        current[i] = c.a[3];
        raw.push_back(c);
    }
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int p = 0; p < b; ++p) parent[static_cast<std::size_t>(find(p))] = find(current[static_cast<std::size_t>(p)]);

    std::map<int, int> renumber;
    KnottedMoyGraph d;
    d.N = braid.N;
    auto id_of = [&](int raw_id) {
        int r = find(raw_id);
        auto it = renumber.find(r);
        if (it != renumber.end()) return it->second;
        int id = static_cast<int>(renumber.size());
        renumber.emplace(r, id);
        d.arcs.push_back({id, raw_color[static_cast<std::size_t>(r)]});
        return id;
    };
    for (auto c : raw) {
        for (auto& x : c.a) x = id_of(x);
        d.crossings.push_back(c);
    }
    for (const auto& comp : comps) id_of(comp.front());
    return d;
}

}  // namespace slnstate
