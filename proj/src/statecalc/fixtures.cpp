#include "slnstate/statecalc.hpp"

namespace slnstate::fixtures {

MoyGraph circle(int m, int N) { return {N, {{0, m}}, {}}; }

MoyGraph theta(int a, int b, int N) {
    return {N, {{0, a}, {1, b}, {2, a + b}}, {{{2}, {0, 1}}, {{0, 1}, {2}}}};
}

MoyGraph two_circles(int m, int n, int N) { return {N, {{0, m}, {1, n}}, {}}; }

MoyGraph square(int n, int m, int k, int N) {
    // 0 = closed a1/a3 strand, 1 = closed a2/a4 strand, then e1..e4
    return {N,
            {{0, n}, {1, m}, {2, k}, {3, m - k}, {4, n + k - m}, {5, n + k}},
            {{{0, 2}, {5}}, {{1}, {2, 3}}, {{5}, {1, 4}}, {{3, 4}, {0}}}};
}

MoyGraph chi_gamma1(int c1, int c2, int c3, int N) {
    int s = c1 + c2;
    return {N,
            {{0, c1}, {1, c2}, {2, s}, {3, c3}, {4, s - c3}, {5, s}},
            {{{0, 1}, {2}}, {{2}, {3, 4}}, {{3, 4}, {5}}, {{5}, {0, 1}}}};
}

MoyGraph chi_gamma0(int c1, int c2, int c3, int N) {
    int s = c1 + c2;
    return {N,
            {{0, c1}, {1, c2}, {2, c3 - c1}, {3, c3}, {4, s - c3}, {5, s}},
            {{{0, 2}, {3}}, {{1}, {2, 4}}, {{3, 4}, {5}}, {{5}, {0, 1}}}};
}

MoyGraph four_valent(int a, int b, int c, int N) {
    return {N, {{0, a}, {1, b}, {2, c}, {3, a + b - c}}, {{{0, 1}, {2, 3}}, {{2, 3}, {0, 1}}}};
}

MoyGraph split_theta(int a, int b, int N) {
    int s = a + b;
    return {N,
            {{0, a}, {1, b}, {2, s}, {3, a}, {4, b}, {5, s}},
            {{{2}, {0, 1}}, {{0, 1}, {5}}, {{5}, {3, 4}}, {{3, 4}, {2}}}};
}

MoyGraph with_zero_edge(int m, int N) { return theta(m, 0, N); }

MoyGraph double_theta(int a, int b, int N) {
    int s = a + b;
    return {N,
            {{0, a}, {1, b}, {2, s}, {3, a}, {4, b}, {5, s}},
            {{{2}, {0, 1}}, {{0, 1}, {2}}, {{5}, {3, 4}}, {{3, 4}, {5}}}};
}

std::vector<NamedGraph> moy_graphs(int N) {
    std::vector<NamedGraph> all = {
        {"circle_1", circle(1, N)},
        {"circle_2", circle(2, N)},
        {"two_circles_1_2", two_circles(1, 2, N)},
        {"theta_1_1", theta(1, 1, N)},
        {"theta_1_2", theta(1, 2, N)},
        {"square_1_1_1", square(1, 1, 1, N)},
        {"square_2_1_1", square(2, 1, 1, N)},
        {"chi1_1_1_1", chi_gamma1(1, 1, 1, N)},
        {"chi0_1_1_1", chi_gamma0(1, 1, 1, N)},
        {"chi0_1_1_2", chi_gamma0(1, 1, 2, N)},
        {"four_valent_1_1_1", four_valent(1, 1, 1, N)},
        {"split_theta_1_1", split_theta(1, 1, N)},
        {"zero_edge_1", with_zero_edge(1, N)},
        {"double_theta_1_1", double_theta(1, 1, N)},
    };
    std::vector<NamedGraph> ok;
    for (auto& g : all) {
        bool fits = true;
        for (const auto& e : g.graph.edges) fits = fits && e.color >= 0 && e.color <= N;
        if (!fits) continue;
        try {
            validate(g.graph);
        } catch (const DomainError&) {
            continue;
        }
        ok.push_back(std::move(g));
    }
    return ok;
}

std::vector<NamedBraidPair> reidemeister_pairs() {
    std::vector<NamedBraidPair> out;
    const std::vector<std::pair<int, int>> colorings = {{1, 1}, {1, 2}, {2, 2}};
    for (int N : {3, 4}) {
        for (auto [m, n] : colorings) {
            std::string tag = "_N" + std::to_string(N) + "_c" + std::to_string(m) + std::to_string(n);
            auto br = [&](int b, std::vector<int> w, std::vector<int> cols) {
                return ColoredBraid{b, std::move(w), std::move(cols), N};
            };
            out.push_back({"R2" + tag, br(2, {1, -1}, {m, n}), br(2, {}, {m, n})});
            out.push_back({"R2_inverse" + tag, br(2, {-1, 1, 1, 1}, {m, n}), br(2, {1, 1}, {m, n})});
            out.push_back({"R3" + tag, br(3, {1, 2, 1}, {m, n}), br(3, {2, 1, 2}, {m, n})});
            out.push_back({"R3_negative" + tag, br(3, {-1, -2, -1}, {m, n}), br(3, {-2, -1, -2}, {m, n})});
            out.push_back({"R1_positive" + tag, br(3, {1, 1, 2}, {m, n}), br(2, {1, 1}, {m, n})});
            out.push_back({"R1_negative" + tag, br(3, {1, 1, -2}, {m, n}), br(2, {1, 1}, {m, n})});
        }
    }
    return out;
}

}  // namespace slnstate::fixtures
