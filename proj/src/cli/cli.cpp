#include "slnstate/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slnstate/circlering.hpp"
#include "slnstate/diagrams.hpp"
#include "slnstate/invariants.hpp"
#include "slnstate/statecalc.hpp"

namespace slnstate::cli {

using ojson = nlohmann::ordered_json;

namespace {

struct InputOptions {
    std::string braid;
    bool braid_given = false;
    int strands = -1;
    std::string colors;
    std::string pd_inline;
    std::string pd_file;
    std::string braid_file;
};

struct Common {
    int N = -1;
    std::string sigma;
    unsigned threads = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int default_N(const Common& c, const EnvLookup& env, int fallback) {
    if (c.N > 0) return c.N;
    if (auto v = env("SLNSTATE_N")) {
        auto vals = parse_int_list(*v);
        if (vals.size() != 1) throw ParseError("SLNSTATE_N must be a single integer");
        return vals[0];
    }
    return fallback;
}

RootSet resolve_sigma(const Common& c, const EnvLookup& env, int N) {
    std::string text = c.sigma;
    if (text.empty())
        if (auto v = env("SLNSTATE_SIGMA")) text = *v;
    if (text.empty()) return RootSet::standard(N);
    std::vector<Rational> roots;
    std::string t = text;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) roots.push_back(parse_rational(tok));
    if (static_cast<int>(roots.size()) != N)
        throw DomainError("sigma must list exactly N = " + std::to_string(N) + " roots");
    return RootSet(roots);
}

void add_input_options(CLI::App* app, InputOptions& in) {
    app->add_option("--braid", in.braid, "signed braid word, e.g. \"-1 -1 -1\"");
    app->add_option("--b", in.strands, "number of braid strands");
    app->add_option("--colors", in.colors, "comma-separated component colors");
    app->add_option("--pd", in.pd_inline, "inline colored PD JSON");
    app->add_option("--pd-file", in.pd_file, "colored PD JSON file");
    app->add_option("--braid-file", in.braid_file, "braid text file");
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--N", c.N, "N (overrides SLNSTATE_N)");
    app->add_option("--sigma", c.sigma, "comma-separated distinct rational roots (overrides SLNSTATE_SIGMA)");
    app->add_option("--threads", c.threads, "worker threads for enumeration");
}

struct Diagram {
    KnottedMoyGraph d;
    std::optional<ColoredBraid> braid;
};

Diagram load_diagram(const InputOptions& in, const Common& c, const EnvLookup& env, std::istream& stdin_stream,
                     const std::string& default_colors = "1") {
    int sources = (in.braid_given ? 1 : 0) + (!in.pd_inline.empty()) + (!in.pd_file.empty()) + (!in.braid_file.empty());
    if (sources > 1) throw ParseError("give exactly one input source");
    Diagram out;
    if (in.braid_given) {
        if (in.strands < 1) throw ParseError("--braid needs --b <strands>");
        auto cols = parse_int_list(in.colors.empty() ? default_colors : in.colors);
        if (cols.empty()) throw ParseError("--colors lists no colors");
        out.braid = parse_braid(in.braid, in.strands, cols, default_N(c, env, 2));
        out.d = braid_closure_to_knotted(*out.braid);
        return out;
    }
    std::string text;
    bool pd = true;
    if (!in.pd_inline.empty()) {
        text = in.pd_inline;
    } else if (!in.pd_file.empty()) {
        text = read_file(in.pd_file);
    } else if (!in.braid_file.empty()) {
        text = read_file(in.braid_file);
        pd = false;
    } else {
        std::stringstream ss;
        ss << stdin_stream.rdbuf();
        text = ss.str();
        auto p = text.find_first_not_of(" \t\r\n");
        if (p == std::string::npos) throw ParseError("no input diagram");
        pd = text[p] == '{';
    }
    if (pd) {
        out.d = parse_pd_json(text);
        if (c.N > 0) {
            out.d.N = c.N;
            validate(out.d);
        }
    } else {
        out.braid = parse_braid_file(text);
        if (c.N > 0) out.braid = parse_braid(
            [&] {
                std::string w;
                for (int g : out.braid->word) w += std::to_string(g) + " ";
                return w;
            }(),
            out.braid->strands, out.braid->colors, c.N);
        out.d = braid_closure_to_knotted(*out.braid);
    }
    return out;
}

ojson state_json(const State& s) {
    ojson a = ojson::array();
    for (Subset v : s.values) a.push_back(v.indices());
    return a;
}

ojson rational_array(const std::vector<Rational>& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

ojson matrix_json(const RMatrix& m) {
    ojson a = ojson::array();
    for (const auto& row : m) a.push_back(rational_array(row));
    return a;
}

ojson optional_int(const std::optional<long>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string dump(const ojson& j) { return j.dump() + "\n"; }

CliResult error_result(int code, const std::string& kind, const std::string& message) {
    ojson j;
    j["error"] = {{"kind", kind}, {"message", message}};
    return {code, dump(j)};
}

}  // namespace

CliResult run(const std::vector<std::string>& args, std::istream& stdin_stream, const EnvLookup& env) {
    CLI::App app{"State-basis computations for colored sl(N) link homology"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    InputOptions in;
    Common common;

    auto* states = app.add_subcommand("states", "enumerate states of a diagram");
    bool quasi = false, histogram_only = false, tsv = false, emit_pd = false;
    add_input_options(states, in);
    add_common(states, common);
    states->add_flag("--quasi", quasi, "enumerate quasi-states");
    states->add_flag("--histogram", histogram_only, "omit the state list");
    states->add_flag("--tsv", tsv, "print the h-histogram as TSV");
    states->add_flag("--emit-pd", emit_pd, "print the diagram as colored PD JSON");

    auto* ring = app.add_subcommand("circle-ring", "dump the circle ring of an m-colored circle");
    int ring_m = 1;
    add_common(ring, common);
    ring->add_option("--m", ring_m, "color m")->required();

    auto* sinv = app.add_subcommand("sinv", "colored Rasmussen invariant values and bounds");
    int sinv_m = 1;
    std::optional<int> genus_hint;
    int unlink = 0;
    bool unknot = false;
    add_input_options(sinv, in);
    add_common(sinv, common);
    sinv->add_option("--m", sinv_m, "color m")->required();
    sinv->add_option("--genus-hint", genus_hint, "known smooth slice genus");
    sinv->add_option("--unlink", unlink, "b-component unlink instead of a braid");
    sinv->add_flag("--unknot", unknot, "the unknot instead of a braid");

    auto* chir = app.add_subcommand("chirality", "self-linking chirality certificate for a knot");
    add_input_options(chir, in);
    add_common(chir, common);

    auto* verify = app.add_subcommand("verify", "run a named property suite");
    std::string suite;
    std::uint64_t seed = kDefaultSeed;
    verify->add_option("suite", suite, "interpolation | circle-ring | idempotents | moves | bounds")->required();
    verify->add_option("--seed", seed, "seed for randomized properties");

    auto* trans = app.add_subcommand("transport", "transport states of a MOY graph across a local move");
    std::string move_name, site_edges;
    int site_color = 0;
    std::optional<int> state_index;
    add_input_options(trans, in);
    add_common(trans, common);
    trans->add_option("--move", move_name, "edge_split | edge_merge | chi1 | chi0 | circle_create | circle_annihilate | saddle")
        ->required();
    trans->add_option("--edges", site_edges, "comma-separated edge ids of the move site");
    trans->add_option("--color", site_color, "split summand or created circle color");
    trans->add_option("--state", state_index, "index of the source state (default: all)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return error_result(2, "parse", e.what());
    }
    for (auto* sc : {states, sinv, chir, trans})
        if (sc->parsed() && sc->count("--braid")) in.braid_given = true;

    try {
        if (states->parsed()) {
            Diagram dg = load_diagram(in, common, env, stdin_stream);
            if (emit_pd) return {0, to_pd_json(dg.d)};
            const int N = dg.d.N;
            RootSet sigma = resolve_sigma(common, env, N);
            EnumerationOptions opts;
            opts.threads = common.threads;
            GradedStateSet gs = quasi ? enumerate_quasi_states(dg.d, sigma, opts) : enumerate_states(dg.d, sigma, opts);
            if (tsv) {
                std::string out = "h\tcount\n";
                for (const auto& [h, c] : gs.histogram) out += std::to_string(h) + "\t" + std::to_string(c) + "\n";
                return {0, out};
            }
            ojson j;
            j["count"] = gs.states.size();
            j["histogram"] = ojson::object();
            for (const auto& [h, c] : gs.histogram) j["histogram"][std::to_string(h)] = c;
            if (!histogram_only) {
                ojson ids = ojson::array();
                for (const auto& a : dg.d.arcs) ids.push_back(a.id);
                j["arcs"] = ids;
                j["states"] = ojson::array();
                for (std::size_t i = 0; i < gs.states.size(); ++i)
                    j["states"].push_back({{"h", gs.h[i]}, {"values", state_json(gs.states[i])}});
            }
            return {0, dump(j)};
        }
        if (ring->parsed()) {
            const int N = default_N(common, env, 2);
            auto r = make_circle_ring(N, ring_m, resolve_sigma(common, env, N));
            ojson j;
            j["N"] = N;
            j["m"] = ring_m;
            j["sigma"] = rational_array(r->sigma().roots());
            j["dimension"] = r->dimension();
            j["grading_shift"] = r->grading_shift();
            ojson parts = ojson::array(), subs = ojson::array();
            for (const auto& p : r->schur_basis()) parts.push_back(p.parts());
            for (Subset s : r->idempotent_index()) subs.push_back(s.indices());
            j["partitions"] = parts;
            j["subsets"] = subs;
            j["schur_matrix"] = matrix_json(change_of_basis_matrix(*r, false));
            j["difference_schur_matrix"] = matrix_json(change_of_basis_matrix(*r, true));
            RMatrix pairing;
            for (const auto& lambda : r->schur_basis()) {
                std::vector<Rational> row;
                auto a = from_schur(r, lambda, false);
                for (const auto& mu : r->schur_basis()) row.push_back(zeta(a * from_schur(r, mu, true)));
                pairing.push_back(row);
            }
            j["zeta_pairing"] = matrix_json(pairing);
            return {0, dump(j)};
        }
        if (sinv->parsed()) {
            const int N = default_N(common, env, 2);
            SInvariantResult res;
            if (unknot) {
                res = s_exact(Unknot{}, sinv_m, N);
            } else if (unlink > 0) {
                res = s_exact(Unlink{unlink}, sinv_m, N);
            } else {
                Common c2 = common;
                c2.N = N;
                Diagram dg = load_diagram(in, c2, env, stdin_stream, std::to_string(sinv_m));
                if (!dg.braid) throw DomainError("sinv needs a braid input");
                ColoredBraid br = *dg.braid;
                br.colors.assign(br.colors.size(), sinv_m);
                res = s_exact(br, sinv_m, N);
                if (genus_hint) {
                    auto b = s_bounds(br, sinv_m, N, genus_hint);
                    if (!res.value) res = b;
                }
            }
            ojson j;
            j["value"] = optional_int(res.value);
            j["lower"] = optional_int(res.lower);
            j["upper"] = optional_int(res.upper);
            j["provenance"] = res.provenance;
            j["m"] = res.m;
            j["N"] = res.N;
            return {0, dump(j)};
        }
        if (chir->parsed()) {
            Diagram dg = load_diagram(in, common, env, stdin_stream);
            if (!dg.braid) throw DomainError("chirality needs a braid input");
            auto r = chirality_certificate(*dg.braid);
            ojson j;
            j["verdict"] = r.verdict == Chirality::Chiral ? "chiral" : "inconclusive";
            j["self_linking"] = r.self_linking;
            return {0, dump(j)};
        }
        if (verify->parsed()) {
            auto outcomes = run_verify_suite(suite, seed);
            bool all = true;
            ojson props = ojson::array();
            for (const auto& o : outcomes) {
                all = all && o.pass;
                ojson p = {{"name", o.name}, {"pass", o.pass}, {"cases", o.cases}};
                if (!o.pass) p["counterexample"] = o.counterexample;
                props.push_back(p);
            }
            ojson j = {{"suite", suite}, {"seed", seed}, {"pass", all}, {"properties", props}};
            return {all ? 0 : 1, dump(j)};
        }
        if (trans->parsed()) {
            Diagram dg = load_diagram(in, common, env, stdin_stream);
            MoyGraph g = as_moy(dg.d);
            RootSet sigma = resolve_sigma(common, env, g.N);
            LocalMove mv = parse_local_move(move_name);
            MoveSite site{parse_int_list(site_edges), site_color};
            MoyGraph target = apply_move(g, mv, site);
            auto src = enumerate_states(g, sigma).states;
            ojson j;
            j["move"] = to_string(mv);
            j["target"] = ojson::parse(to_pd_json(as_knotted(target)));
            j["transports"] = ojson::array();
            for (std::size_t i = 0; i < src.size(); ++i) {
                if (state_index && static_cast<std::size_t>(*state_index) != i) continue;
                auto comp = transport(g, mv, site, src[i], sigma);
                ojson list = ojson::array();
                for (const auto& s : comp) list.push_back(state_json(s));
                j["transports"].push_back({{"source", state_json(src[i])}, {"count", comp.size()}, {"compatible", list}});
            }
            if (state_index && (*state_index < 0 || static_cast<std::size_t>(*state_index) >= src.size()))
                throw DomainError("state index out of range");
            return {0, dump(j)};
        }
    } catch (const ParseError& e) {
        return error_result(2, "parse", e.what());
    } catch (const DomainError& e) {
        return error_result(1, "domain", e.what());
    }
    return error_result(2, "parse", "no subcommand");
}

CliResult run(const std::vector<std::string>& args) {
    return run(args, std::cin, [](const std::string& name) -> std::optional<std::string> {
        const char* v = std::getenv(name.c_str());
        if (!v) return std::nullopt;
        return std::string(v);
    });
}

}  // namespace slnstate::cli
