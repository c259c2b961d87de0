// media: command-line front end. JSON reports go to stdout, one-line
// summaries to stderr. Exit 0 = holds, 1 = fails, 2 = input error.

#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "media/axioms.hpp"
#include "media/family.hpp"
#include "media/io.hpp"
#include "media/morphisms.hpp"
#include "media/structure.hpp"

using namespace media;
using Json = nlohmann::ordered_json;

namespace {

constexpr int holds = 0;
constexpr int fails = 1;
constexpr int input_error = 2;

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};

Json edge_json(const Graph& g, Vertex a, Vertex b) { return Json::array({g.label(a), g.label(b)}); }

Json graph_witness_json(const Graph& g, const GraphWitness& w) {
    return std::visit(
        overloaded{
            [&](const NotConnectedWitness& x) {
                return Json{{"kind", "NotConnected"}, {"from", g.label(x.from)}, {"to", g.label(x.to)}};
            },
            [&](const OddCycleWitness& x) {
                Json cycle = Json::array();
                for (Vertex v : x.cycle) cycle.push_back(g.label(v));
                return Json{{"kind", "OddCycle"}, {"cycle", cycle}};
            },
            [&](const ThetaWitness& x) {
                Json edges = Json::array();
                for (EdgeIndex e : {x.edges.first, x.edges.middle, x.edges.last}) {
                    edges.push_back(edge_json(g, g.edge(e).first, g.edge(e).second));
                }
                return Json{{"kind", "ThetaNotTransitive"}, {"edges", edges}};
            },
            [&](const NonConvexSemicubeWitness& x) {
                return Json{{"kind", "NonConvexSemicube"},
                            {"edge", edge_json(g, x.edge.tail, x.edge.head)},
                            {"a", g.label(x.a)},
                            {"b", g.label(x.b)},
                            {"outside", g.label(x.outside)}};
            },
            [&](const ArcRelationWitness& x) {
                Json arcs = Json::array();
                for (Arc a : {x.arcs.first, x.arcs.middle, x.arcs.last}) arcs.push_back(edge_json(g, a.tail, a.head));
                return Json{{"kind", "ArcRelationNotTransitive"}, {"arcs", arcs}};
            },
        },
        w);
}

Json violation_json(const TokenSystem& sys, const Violation& v) {
    auto st = [&](StateIndex s) { return sys.state_label(s); };
    auto tk = [&](TokenIndex t) { return sys.token_label(t); };
    Json out = std::visit(
        overloaded{
            [&](const MissingReverse& x) { return Json{{"kind", "MissingReverse"}, {"token", tk(x.token)}}; },
            [&](const SelfReverse& x) { return Json{{"kind", "SelfReverse"}, {"token", tk(x.token)}}; },
            [&](const DuplicateArcToken& x) {
                return Json{{"kind", "DuplicateArcToken"},
                            {"from", st(x.from)},
                            {"to", st(x.to)},
                            {"tokens", Json::array({tk(x.first), tk(x.second)})}};
            },
            [&](const Disconnected& x) {
                return Json{{"kind", "Disconnected"}, {"from", st(x.from)}, {"to", st(x.to)}};
            },
            [&](const NotPartialCube&) { return Json{{"kind", "NotPartialCube"}}; },
            [&](const Misaligned& x) {
                return Json{{"kind", "Misaligned"}, {"token", tk(x.token)}, {"reason", x.reason}};
            },
        },
        v);
    out["message"] = describe(sys, v);
    return out;
}

void emit(const Json& report, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
}

Json embedding_json(const Medium& m) {
    const auto& sys = m.system();
    const auto& cert = m.certificate();
    Json classes = Json::array();
    for (std::size_t c = 0; c < cert.token_of_class.size(); ++c) {
        const TokenIndex t = cert.token_of_class[c];
        classes.push_back({{"token", sys.token_label(t)},
                           {"reverse", sys.token_label(m.reverse(t))},
                           {"edges", cert.embedding.classes.classes[c].size()}});
    }
    Json coords = Json::object();
    for (StateIndex s = 0; s < sys.state_count(); ++s) {
        Json tokens = Json::array();
        for (std::size_t c : cert.embedding.coordinates[s]) tokens.push_back(sys.token_label(cert.token_of_class[c]));
        coords[sys.state_label(s)] = tokens;
    }
    return {{"base", sys.state_label(cert.embedding.base)},
            {"dimension", cert.embedding.dimension()},
            {"classes", classes},
            {"coordinates", coords}};
}

Medium load_medium(const std::string& path) { return require_medium(parse_token_system(read_file(path))); }

int medium_verify(const std::string& path, bool oracle, std::optional<std::size_t> maxlen) {
    const TokenSystem sys = parse_token_system(read_file(path));
    const MediumVerdict verdict = is_medium(sys);
    Json report{{"verdict", verdict ? "Medium" : "NotMedium"}};
    if (verdict) {
        report["class_count"] = verdict.medium().certificate().embedding.dimension();
        report["embedding"] = embedding_json(verdict.medium());
    } else {
        report["witness"] = violation_json(sys, verdict.witness());
    }
    if (oracle) {
        const auto pairing = pairing_of(sys);
        Json o;
        if (sys.token_count() <= 64) {
            const auto m1 = oracle_m1(sys, pairing);
            o["m1"] = m1.holds;
            if (m1.unreachable) {
                o["m1_unreachable"] = {sys.state_label(m1.unreachable->first), sys.state_label(m1.unreachable->second)};
            }
        } else {
            o["m1"] = nullptr;
        }
        const std::size_t bound = maxlen.value_or(default_m2_bound(sys));
        if (bound < 2) throw InputError("--maxlen must be at least 2");
        o["maxlen"] = bound;
        if (const auto v = oracle_m2(sys, pairing, bound)) {
            o["m2"] = {{"message", sys.format(v->message)}, {"state", sys.state_label(v->state)}};
        } else {
            o["m2"] = "no-violation-up-to-bound";
        }
        report["oracle"] = o;
    }
    emit(report, verdict ? "Medium" : "NotMedium: " + describe(sys, verdict.witness()));
    return verdict ? holds : fails;
}

int medium_graph(const std::string& path, const std::string& out) {
    const TokenSystem sys = parse_token_system(read_file(path));
    auto pairing = find_reverse_pairing(sys);
    if (auto* v = std::get_if<Violation>(&pairing)) {
        emit({{"graph", false}, {"witness", violation_json(sys, *v)}}, "no graph: " + describe(sys, *v));
        return fails;
    }
    auto graph = build_graph(sys, std::get<ReversePairing>(pairing));
    if (auto* v = std::get_if<Violation>(&graph)) {
        emit({{"graph", false}, {"witness", violation_json(sys, *v)}}, "no graph: " + describe(sys, *v));
        return fails;
    }
    const auto& g = std::get<Graph>(graph);
    const std::string dot = export_dot(g);
    if (out == "-") {
        std::cout << dot;
    } else {
        write_file(out, dot);
        emit({{"graph", true}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"dot", out}},
             "wrote " + out);
    }
    return holds;
}

int medium_embed(const std::string& path) {
    const Medium m = load_medium(path);
    emit(embedding_json(m), "embedded in a " + std::to_string(m.certificate().embedding.dimension()) + "-cube");
    return holds;
}

int medium_content(const std::string& path, const std::string& state) {
    const Medium m = load_medium(path);
    const StateIndex s = m.system().state(state);
    Json tokens = Json::array();
    for (TokenIndex t : content_of(m, s)) tokens.push_back(m.system().token_label(t));
    emit({{"state", state}, {"content", tokens}}, state + ": " + std::to_string(tokens.size()) + " tokens");
    return holds;
}

int family_check(const std::string& path) {
    const SetFamily f = parse_family(read_file(path));
    const auto wg = is_well_graded(f);
    Json report{{"well_graded", wg.well_graded}, {"connected", is_connected_family(f)}};
    std::string summary = wg.well_graded ? "well-graded" : "not well-graded";
    if (wg.witness) {
        const auto [i, j] = *wg.witness;
        const auto chain = family_chain(f, i, j);
        report["witness"] = {{"sets", {f.member_label(i), f.member_label(j)}},
                             {"symmetric_difference", hamming(f.member(i), f.member(j))},
                             {"distance", chain ? Json(chain->size() - 1) : Json(nullptr)}};
        summary += ": " + f.member_label(i) + " and " + f.member_label(j);
    }
    emit(report, summary);
    return wg.well_graded ? holds : fails;
}

int family_medium(const std::string& path, const std::string& out) {
    const SetFamily f = parse_family(read_file(path));
    std::optional<TokenSystem> sys;
    try {
        sys = representing_token_system(f);
    } catch (const InputError& e) {
        emit({{"verdict", "NotMedium"}, {"reason", e.what()}}, std::string("no token system: ") + e.what());
        return fails;
    }
    write_file(out, serialize_token_system(*sys));
    const auto verdict = is_medium(*sys);
    Json report{{"verdict", verdict ? "Medium" : "NotMedium"}, {"output", out}};
    if (!verdict) report["witness"] = violation_json(*sys, verdict.witness());
    emit(report, std::string(verdict ? "Medium" : "NotMedium") + ", wrote " + out);
    return verdict ? holds : fails;
}

int graphx_pcube(const std::string& path) {
    const Graph g = parse_edge_list(read_file(path));
    const auto check = is_partial_cube(g);
    Json report{{"partial_cube", check.partial_cube}, {"by_theta", check.by_theta}, {"by_convexity", check.by_convexity}};
    if (check.partial_cube) {
        report["class_count"] = embed_hypercube(g).dimension();
    } else if (check.witness) {
        report["witness"] = graph_witness_json(g, *check.witness);
    }
    emit(report, check.partial_cube ? "partial cube" : "not a partial cube");
    return check.partial_cube ? holds : fails;
}

int graphx_mediatic(const std::string& path) {
    const Graph g = parse_edge_list(read_file(path));
    const auto check = is_mediatic(g);
    Json report{{"mediatic", check.mediatic}};
    // Theta witnesses read better than arc triples, so report both when available.
    if (!check.mediatic) {
        if (check.witness) report["witness"] = graph_witness_json(g, *check.witness);
        const auto pc = partial_cube_by_theta(g);
        if (pc.witness) report["theta_witness"] = graph_witness_json(g, *pc.witness);
    }
    emit(report, check.mediatic ? "mediatic" : "not mediatic");
    return check.mediatic ? holds : fails;
}

// Commas inside braces belong to set-style labels such as {a,b}.
std::vector<std::string> split_states(const std::string& list) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : list) {
        if (c == ',' && depth == 0) {
            out.emplace_back();
            continue;
        }
        depth += c == '{' ? 1 : c == '}' ? -1 : 0;
        out.back() += c;
    }
    return out;
}

int reduce(const std::string& path, const std::string& states, const std::string& out) {
    const TokenSystem sys = parse_token_system(read_file(path));
    std::vector<StateIndex> q;
    for (const auto& s : split_states(states)) q.push_back(sys.state(s));
    try {
        const Reduction r = reduction(sys, q);
        write_file(out, serialize_token_system(r.system));
        const bool medium = is_medium(r.system).is_medium();
        emit({{"reduction", true}, {"tokens", r.system.token_count()}, {"medium", medium}, {"output", out}},
             "wrote " + out + (medium ? " (medium)" : " (not a medium)"));
        return holds;
    } catch (const EmptyReduction& e) {
        emit({{"reduction", false}, {"reason", "EmptyTokenSet"}, {"message", e.what()}}, e.what());
        return fails;
    }
}

int iso(const std::string& a_path, const std::string& b_path) {
    const Medium a = load_medium(a_path);
    const Medium b = load_medium(b_path);
    const auto map = is_isomorphic(a, b);
    Json report{{"isomorphic", map.has_value()}};
    if (map) {
        Json states = Json::object(), tokens = Json::object();
        for (StateIndex s = 0; s < a.state_count(); ++s) {
            states[a.system().state_label(s)] = b.system().state_label(map->states[s]);
        }
        for (TokenIndex t = 0; t < a.token_count(); ++t) {
            tokens[a.system().token_label(t)] = b.system().token_label(map->tokens[t]);
        }
        report["states"] = states;
        report["tokens"] = tokens;
    }
    emit(report, map ? "isomorphic" : "not isomorphic");
    return map ? holds : fails;
}

int generate(const SetFamily& f, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << serialize_family(f);
    } else {
        write_file(out, serialize_family(f));
    }
    return holds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Token systems, media, well-graded families and partial cubes"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file, file2, out, state;
    bool oracle = false;
    std::optional<std::size_t> maxlen;
    std::string states;
    std::size_t n = 0, ground = 0, size = 0;
    std::uint64_t seed = 0;

    auto* medium = app.add_subcommand("medium", "token-system commands")->require_subcommand(1);
    auto* verify = medium->add_subcommand("verify", "decide whether a token system is a medium");
    verify->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    verify->add_flag("--oracle", oracle, "also run the brute-force axiom oracles");
    verify->add_option("--maxlen", maxlen, "message length bound for the closed-message oracle");
    verify->callback([&] { action = [&] { return medium_verify(file, oracle, maxlen); }; });

    auto* graph = medium->add_subcommand("graph", "export the graph of a token system");
    graph->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    graph->add_option("--dot", out, "DOT output path ('-' for stdout)")->required();
    graph->callback([&] { action = [&] { return medium_graph(file, out); }; });

    auto* embed = medium->add_subcommand("embed", "hypercube coordinates of a medium");
    embed->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    embed->callback([&] { action = [&] { return medium_embed(file); }; });

    auto* content = medium->add_subcommand("content", "content of a state");
    content->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    content->add_option("--state", state)->required();
    content->callback([&] { action = [&] { return medium_content(file, state); }; });

    auto* family = app.add_subcommand("family", "set-family commands")->require_subcommand(1);
    auto* fcheck = family->add_subcommand("check", "decide well-gradedness");
    fcheck->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    fcheck->callback([&] { action = [&] { return family_check(file); }; });

    auto* fmedium = family->add_subcommand("medium", "write the representing token system");
    fmedium->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    fmedium->add_option("-o,--output", out)->required();
    fmedium->callback([&] { action = [&] { return family_medium(file, out); }; });

    auto* graphx = app.add_subcommand("graphx", "plain-graph commands")->require_subcommand(1);
    auto* pcube = graphx->add_subcommand("pcube", "partial-cube recognition");
    pcube->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    pcube->callback([&] { action = [&] { return graphx_pcube(file); }; });

    auto* mediatic = graphx->add_subcommand("mediatic", "transitivity of the arc relation");
    mediatic->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    mediatic->callback([&] { action = [&] { return graphx_mediatic(file); }; });

    auto* red = app.add_subcommand("reduce", "restrict a token system to some states");
    red->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    red->add_option("--states", states, "comma-separated state labels")->required();
    red->add_option("-o,--output", out)->required();
    red->callback([&] { action = [&] { return reduce(file, states, out); }; });

    auto* isocmd = app.add_subcommand("iso", "decide whether two media are isomorphic");
    isocmd->add_option("FILE1", file)->required()->check(CLI::ExistingFile);
    isocmd->add_option("FILE2", file2)->required()->check(CLI::ExistingFile);
    isocmd->callback([&] { action = [&] { return iso(file, file2); }; });

    auto* gen = app.add_subcommand("gen", "generate set families")->require_subcommand(1)->fallthrough();
    gen->add_option("-o,--output", out, "output path (default stdout)");
    auto* hyper = gen->add_subcommand("hypercube", "all subsets of an N-set");
    hyper->add_option("N", n)->required();
    hyper->callback([&] { action = [&] { return generate(hypercube_family(n), out); }; });
    auto* cycle = gen->add_subcommand("cycle", "even cycle on 2K states");
    cycle->add_option("2K", n)->required();
    cycle->callback([&] { action = [&] { return generate(cycle_family(n), out); }; });
    auto* path = gen->add_subcommand("path", "path on N states");
    path->add_option("N", n)->required();
    path->callback([&] { action = [&] { return generate(path_family(n), out); }; });
    auto* rwg = gen->add_subcommand("random-wg", "seeded random well-graded family");
    rwg->add_option("--ground", ground)->required();
    rwg->add_option("--size", size)->required();
    rwg->add_option("--seed", seed)->required();
    rwg->callback([&] { action = [&] { return generate(random_wg_family(ground, size, seed), out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : input_error;
    }
    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
