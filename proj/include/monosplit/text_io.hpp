#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monosplit/betti.hpp"
#include "monosplit/graph.hpp"
#include "monosplit/ideal.hpp"
#include "monosplit/splitting.hpp"

#include <json.hpp>

namespace monosplit {

// Ideal files:
//   vars 6
//   x1*x2*x4
//   x3^2*x6
// Blank lines and lines starting with '#' are ignored. The token 1 is the
// unit ideal; no generator lines means the zero ideal.
MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);

/// Parses one monomial such as `x1*x3^2` or `1` in n variables.
Monomial parse_monomial(std::string_view token, std::size_t n, std::size_t line = 1);

// Graph files: `graph n` then one `u v` edge per line, 1-based.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

// Labelled bipartite files: `bigraph n` then `i j` lines meaning (x_i, y_j).
BipartiteLabeledGraph parse_bigraph(std::string_view text);
std::string format_bigraph(const BipartiteLabeledGraph& g);

/// Cover ideal of a labelled bipartite graph in ideal format; x_1..x_n keep
/// their names and y_j is written as x_{n+j}.
std::string format_bipartite_cover_ideal(const BipartiteLabeledGraph& g);

/// Key-value form: header `betti field=<0|p> convention=ideal`, then one
/// `i <multidegree> rank` line per entry in (i, multidegree) order.
std::string serialize_betti(const BettiTable& table);
BettiTable parse_betti(std::string_view text, std::size_t num_vars);

/// Graded Betti diagram: rows are j - i, columns are i, zeros shown as '.'.
std::string render_betti_diagram(const BettiTable& table);

std::string to_string(EkVerdict verdict);
nlohmann::json to_json(const SplitReport& report);
nlohmann::json to_json(const std::vector<SplitReport>& reports);
nlohmann::json to_json(const EkResult& result);

}  // namespace monosplit
