#include "media/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace media {

using Json = nlohmann::ordered_json;

namespace {

// nlohmann keeps the last of several equal keys; reject them instead.
Json parse_json(std::string_view text) {
    std::vector<std::set<std::string>> keys;
    std::string duplicate;
    auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
        switch (event) {
            case Json::parse_event_t::object_start: keys.emplace_back(); break;
            case Json::parse_event_t::object_end: keys.pop_back(); break;
            case Json::parse_event_t::key:
                if (!keys.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
                    duplicate = parsed.get<std::string>();
                }
                break;
            default: break;
        }
        return true;
    };
    Json j;
    try {
        j = Json::parse(text.begin(), text.end(), callback);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!duplicate.empty()) throw InputError("duplicate key '" + duplicate + "'");
    return j;
}

const Json& field(const Json& obj, const char* name, const char* where) {
    if (!obj.is_object()) throw InputError(std::string(where) + ": expected a JSON object");
    auto it = obj.find(name);
    if (it == obj.end()) throw InputError(std::string(where) + ": missing field '" + name + "'");
    return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected a list of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw InputError(where + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

}  // namespace

TokenSystem parse_token_system(std::string_view text) {
    const Json j = parse_json(text);
    auto states = string_list(field(j, "states", "token system"), "states");
    const Json& tokens = field(j, "tokens", "token system");
    if (!tokens.is_object()) throw InputError("tokens: expected an object of sparse maps");
    std::vector<SparseToken> sparse;
    for (const auto& [name, moves] : tokens.items()) {
        if (!moves.is_object()) throw InputError("tokens." + name + ": expected an object mapping states");
        SparseToken t{name, {}};
        for (const auto& [from, to] : moves.items()) {
            if (!to.is_string()) throw InputError("tokens." + name + "." + from + ": expected a state name");
            t.moves.emplace_back(from, to.get<std::string>());
        }
        sparse.push_back(std::move(t));
    }
    return TokenSystem::from_sparse(std::move(states), sparse);
}

std::string serialize_token_system(const TokenSystem& sys) {
    Json j;
    j["states"] = sys.state_labels();
    Json tokens = Json::object();
    for (TokenIndex t = 0; t < sys.token_count(); ++t) {
        Json moves = Json::object();
        for (StateIndex s = 0; s < sys.state_count(); ++s) {
            if (sys.moves(s, t)) moves[sys.state_label(s)] = sys.state_label(sys.next(s, t));
        }
        tokens[sys.token_label(t)] = std::move(moves);
    }
    j["tokens"] = std::move(tokens);
    return j.dump(2) + "\n";
}

SetFamily parse_family(std::string_view text) {
    const Json j = parse_json(text);
    auto ground = string_list(field(j, "ground", "family"), "ground");
    const Json& sets = field(j, "sets", "family");
    if (!sets.is_array()) throw InputError("sets: expected a list of lists");
    std::vector<std::vector<std::string>> members;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        members.push_back(string_list(sets[i], "sets[" + std::to_string(i) + "]"));
    }
    return SetFamily::from_labels(std::move(ground), members);
}

std::string serialize_family(const SetFamily& f) {
    Json j;
    j["ground"] = f.ground();
    Json sets = Json::array();
    for (const auto& m : f.members()) {
        Json s = Json::array();
        for (std::size_t x : m) s.push_back(f.ground()[x]);
        sets.push_back(std::move(s));
    }
    j["sets"] = std::move(sets);
    return j.dump(2) + "\n";
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    auto vertex = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, labels.size());
        if (fresh) labels.push_back(name);
        return it->second;
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::optional<EdgeLabel>> edge_labels;
    bool any_label = false;

    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string x; words >> x;) w.push_back(x);
        const std::string where = "line " + std::to_string(number);
        switch (w.size()) {
            case 0: break;
            case 1: vertex(w[0]); break;
            case 2:
            case 4: {
                const Vertex a = vertex(w[0]);
                const Vertex b = vertex(w[1]);
                if (a == b) throw InputError(where + ": self-loop at '" + w[0] + "'");
                edges.emplace_back(a, b);
                if (w.size() == 4) {
                    edge_labels.push_back(EdgeLabel{w[2], w[3]});
                    any_label = true;
                } else {
                    edge_labels.emplace_back();
                }
                break;
            }
            default: throw InputError(where + ": expected 'U V' or 'U V forward backward'");
        }
    }
    if (labels.empty()) throw InputError("edge list declares no vertices");
    if (!any_label) edge_labels.clear();
    return Graph(std::move(labels), edges, std::move(edge_labels));
}

std::string serialize_edge_list(const Graph& g) {
    auto check = [](const std::string& s) {
        if (s.empty() || s.find_first_of(" \t\r\n#") != std::string::npos) {
            throw InputError("label '" + s + "' cannot be written to an edge list");
        }
        return s;
    };
    std::string out;
    for (const auto& l : g.labels()) out += check(l) + "\n";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out += g.label(edge.first) + " " + g.label(edge.second);
        if (const auto& l = g.edge_label(e)) out += " " + check(l->forward) + " " + check(l->backward);
        out += "\n";
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g) {
    std::string out = "graph {\n";
    for (Vertex v : g.canonical_order()) out += "  " + quoted(g.label(v)) + ";\n";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out += "  " + quoted(g.label(edge.first)) + " -- " + quoted(g.label(edge.second));
        if (const auto& l = g.edge_label(e)) out += " [label=" + quoted(l->forward + "/" + l->backward) + "]";
        out += ";\n";
    }
    return out + "}\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace media
