#pragma once

// Shared small systems. Families use ground {x, y, z} unless noted; their
// representing media label states "{x,y}" and tokens "+x" / "-x".

#include <string>
#include <vector>

#include "media/axioms.hpp"
#include "media/family.hpp"
#include "media/io.hpp"

namespace fx {

using namespace media;

inline SetFamily family(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& sets) {
    return SetFamily::from_labels(std::move(ground), sets);
}

inline SetFamily edge() { return family({"x"}, {{}, {"x"}}); }
inline SetFamily p3() { return family({"x", "y"}, {{}, {"x"}, {"x", "y"}}); }
inline SetFamily c4() { return family({"x", "y"}, {{}, {"x"}, {"y"}, {"x", "y"}}); }
inline SetFamily q3() {
    return family({"x", "y", "z"},
                  {{}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "y", "z"}});
}
inline SetFamily c6() {
    return family({"x", "y", "z"}, {{}, {"x"}, {"x", "y"}, {"x", "y", "z"}, {"y", "z"}, {"z"}});
}
/// Connected but not well-graded: {z} and {x,y,z} are 4 steps apart inside.
inline SetFamily nwg() { return family({"x", "y", "z"}, {{}, {"x"}, {"x", "y"}, {"x", "y", "z"}, {"z"}}); }
/// Two components; still yields a token system.
inline SetFamily disc() {
    return family({"a", "b", "c", "d"}, {{"a"}, {"b"}, {"a", "b"}, {"c"}, {"d"}, {"c", "d"}});
}

inline TokenSystem system_of(const SetFamily& f) { return representing_token_system(f); }
inline Medium medium_of(const SetFamily& f) { return require_medium(representing_token_system(f)); }

inline TokenSystem sparse(std::vector<std::string> states, std::vector<SparseToken> tokens) {
    return TokenSystem::from_sparse(std::move(states), tokens);
}

/// One token exchanging two states; it is its own reverse.
inline TokenSystem swap() { return sparse({"A", "B"}, {{"t", {{"A", "B"}, {"B", "A"}}}}); }
/// One token A -> B with no reverse.
inline TokenSystem norev() { return sparse({"A", "B"}, {{"t", {{"A", "B"}}}}); }
/// A directed triangle S -> V -> W -> S.
inline TokenSystem tri() {
    return sparse({"S", "V", "W"}, {{"t1", {{"S", "V"}}}, {"t2", {{"V", "W"}}}, {"t3", {{"W", "S"}}}});
}
/// t1 and t2 both move A to B.
inline TokenSystem dup_arc() {
    return sparse({"A", "B", "C"}, {{"t1", {{"A", "B"}, {"B", "C"}}},
                                    {"r1", {{"B", "A"}, {"C", "B"}}},
                                    {"t2", {{"A", "B"}}},
                                    {"r2", {{"B", "A"}}}});
}
/// The square medium with +x and -x removed on the {y} - {x,y} edge. Its
/// graph is a path, hence a partial cube, yet the system is not a medium.
inline TokenSystem misaligned() {
    return sparse({"{}", "{x}", "{y}", "{x,y}"}, {{"+x", {{"{}", "{x}"}}},
                                                  {"-x", {{"{x}", "{}"}}},
                                                  {"+y", {{"{}", "{y}"}, {"{x}", "{x,y}"}}},
                                                  {"-y", {{"{y}", "{}"}, {"{x,y}", "{x}"}}}});
}

inline Graph graph(std::string_view edge_list) { return parse_edge_list(edge_list); }
inline Graph k23() { return graph("a x\na y\na z\nb x\nb y\nb z\n"); }
inline Graph triangle() { return graph("a b\nb c\nc a\n"); }

}  // namespace fx
