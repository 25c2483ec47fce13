#include "monosplit/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <sstream>

#include "monosplit/errors.hpp"

namespace monosplit {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Nonblank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto end = text.find('\n');
        const std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        const std::string_view line = trim(raw);
        if (!line.empty() && line.front() != '#') out.push_back({number, line});
        if (end == std::string_view::npos) break;
    }
    return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        s = trim(s);
        if (s.empty()) return out;
        const auto end = s.find_first_of(" \t");
        out.push_back(s.substr(0, end));
        if (end == std::string_view::npos) return out;
        s = s.substr(end);
    }
}

std::uint64_t parse_number(std::string_view token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw ParseError(line, std::string(token), std::string("expected ") + what);
    }
    return value;
}

// Reads the `<keyword> <count>` header line.
std::size_t parse_header(const std::vector<Line>& lines, std::string_view keyword) {
    if (lines.empty()) throw ParseError(1, "", "missing '" + std::string(keyword) + " n' header");
    const auto words = split_words(lines.front().text);
    if (words.size() != 2 || words[0] != keyword) {
        throw ParseError(lines.front().number, std::string(words.empty() ? "" : words[0]),
                         "expected header '" + std::string(keyword) + " n'");
    }
    return parse_number(words[1], lines.front().number, "a count");
}

template <class Graph>
Graph parse_edge_list(std::string_view text, std::string_view keyword) {
    const auto lines = content_lines(text);
    const std::size_t n = parse_header(lines, keyword);
    Graph g(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto words = split_words(lines[k].text);
        if (words.size() != 2) {
            throw ParseError(lines[k].number, std::string(lines[k].text), "expected two vertex indices");
        }
        std::size_t ends[2];
        for (int e = 0; e < 2; ++e) {
            const auto v = parse_number(words[e], lines[k].number, "a vertex index");
            if (v < 1 || v > n) throw ParseError(lines[k].number, std::string(words[e]), "vertex index out of range");
            ends[e] = static_cast<std::size_t>(v - 1);
        }
        try {
            g.add_edge(ends[0], ends[1]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines[k].number, std::string(lines[k].text), e.what());
        }
    }
    return g;
}

}  // namespace

Monomial parse_monomial(std::string_view token, std::size_t n, std::size_t line) {
    token = trim(token);
    if (token == "1") return Monomial(n);
    std::vector<Exponent> e(n, 0);
    while (true) {
        const auto star = token.find('*');
        const std::string_view factor = trim(token.substr(0, star));
        if (factor.size() < 2 || factor.front() != 'x') {
            throw ParseError(line, std::string(factor), "expected a factor like x3 or x3^2");
        }
        const auto caret = factor.find('^');
        const auto number = [&](std::string_view digits, const char* what) {
            try {
                return parse_number(digits, line, what);
            } catch (const ParseError& err) {
                throw ParseError(line, std::string(factor), err.what());
            }
        };
        const auto index = number(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1),
                                  "a variable index");
        if (index < 1 || index > n) throw ParseError(line, std::string(factor), "unknown variable index");
        std::uint64_t power = 1;
        if (caret != std::string_view::npos) power = number(factor.substr(caret + 1), "an exponent");
        if (power + e[index - 1] > std::numeric_limits<Exponent>::max()) {
            throw ParseError(line, std::string(factor), "exponent too large");
        }
        e[index - 1] += static_cast<Exponent>(power);
        if (star == std::string_view::npos) break;
        token = token.substr(star + 1);
    }
    return Monomial(std::move(e));
}

MonomialIdeal parse_ideal(std::string_view text) {
    const auto lines = content_lines(text);
    const std::size_t n = parse_header(lines, "vars");
    std::vector<Monomial> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) gens.push_back(parse_monomial(lines[k].text, n, lines[k].number));
    return minimalize(n, gens);
}

std::string format_ideal(const MonomialIdeal& ideal) {
    std::string out = "vars " + std::to_string(ideal.num_vars()) + "\n";
    for (const auto& g : ideal.generators()) out += to_string(g) + "\n";
    return out;
}

SimpleGraph parse_graph(std::string_view text) { return parse_edge_list<SimpleGraph>(text, "graph"); }

std::string format_graph(const SimpleGraph& g) {
    std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

BipartiteLabeledGraph parse_bigraph(std::string_view text) {
    return parse_edge_list<BipartiteLabeledGraph>(text, "bigraph");
}

std::string format_bigraph(const BipartiteLabeledGraph& g) {
    std::string out = "bigraph " + std::to_string(g.part_size()) + "\n";
    for (const auto& [x, y] : g.edges()) out += std::to_string(x + 1) + " " + std::to_string(y + 1) + "\n";
    return out;
}

std::string format_bipartite_cover_ideal(const BipartiteLabeledGraph& g) {
    const std::size_t n = g.part_size();
    std::string out = "# x1..x" + std::to_string(n) + " are x1..x" + std::to_string(n);
    if (n > 0) out += "; y1..y" + std::to_string(n) + " are x" + std::to_string(n + 1) + "..x" + std::to_string(2 * n);
    out += "\n";
    return out + format_ideal(cover_ideal(g.to_simple_graph()));
}

std::string serialize_betti(const BettiTable& table) {
    std::string out = "betti field=" + std::to_string(table.field().characteristic()) + " convention=ideal\n";
    for (const auto& [key, rank] : table.entries()) {
        out += std::to_string(key.index) + " " + to_string(key.degree) + " " + std::to_string(rank) + "\n";
    }
    return out;
}

BettiTable parse_betti(std::string_view text, std::size_t num_vars) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "", "missing betti header");
    const auto header = split_words(lines.front().text);
    if (header.size() != 3 || header[0] != "betti" || header[2] != "convention=ideal" ||
        !header[1].starts_with("field=")) {
        throw ParseError(lines.front().number, std::string(lines.front().text),
                         "expected 'betti field=<0|p> convention=ideal'");
    }
    const auto c = parse_number(header[1].substr(6), lines.front().number, "a characteristic");
    BettiTable table(num_vars, FieldSpec::from_characteristic(static_cast<std::uint32_t>(c)));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto words = split_words(lines[k].text);
        if (words.size() != 3) throw ParseError(lines[k].number, std::string(lines[k].text), "expected 'i degree rank'");
        table.add(parse_number(words[0], lines[k].number, "an index"),
                  parse_monomial(words[1], num_vars, lines[k].number),
                  parse_number(words[2], lines[k].number, "a rank"));
    }
    return table;
}

std::string render_betti_diagram(const BettiTable& table) {
    const auto totals = total_betti(table);
    const auto graded = graded_betti(table);
    std::int64_t low = 0, high = -1;
    if (!graded.empty()) {
        low = INT64_MAX;
        high = INT64_MIN;
        for (const auto& [key, rank] : graded) {
            const auto row = static_cast<std::int64_t>(key.second) - static_cast<std::int64_t>(key.first);
            low = std::min(low, row);
            high = std::max(high, row);
        }
    }
    std::size_t width = 1;
    for (auto t : totals) width = std::max(width, std::to_string(t).size());
    width = std::max(width, std::to_string(totals.size()).size());
    std::size_t label = std::string("total:").size();
    for (std::int64_t r = low; r <= high; ++r) label = std::max(label, std::to_string(r).size() + 1);

    std::ostringstream out;
    out << std::string(label, ' ');
    for (std::size_t i = 0; i < totals.size(); ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
    out << '\n' << std::setw(static_cast<int>(label)) << "total:";
    for (auto t : totals) out << ' ' << std::setw(static_cast<int>(width)) << t;
    out << '\n';
    for (std::int64_t r = low; r <= high; ++r) {
        out << std::setw(static_cast<int>(label)) << (std::to_string(r) + ":");
        for (std::size_t i = 0; i < totals.size(); ++i) {
            const auto d = static_cast<std::int64_t>(i) + r;
            std::uint64_t v = 0;
            if (d >= 0) {
                const auto it = graded.find({i, static_cast<std::uint64_t>(d)});
                if (it != graded.end()) v = it->second;
            }
            out << ' ' << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : ".");
        }
        out << '\n';
    }
    return out.str();
}

std::string to_string(EkVerdict verdict) {
    switch (verdict) {
        case EkVerdict::found: return "found";
        case EkVerdict::absent: return "absent";
        case EkVerdict::capped: return "capped";
    }
    return "capped";
}

nlohmann::json to_json(const SplitReport& report) {
    nlohmann::json j;
    if (report.variable) {
        j["variable"] = *report.variable + 1;
    } else {
        j["variable"] = "user";
    }
    j["field"] = report.field.characteristic();
    j["betti_splitting"] = report.betti_splitting;
    j["disjoint_support"] = report.disjoint_support;
    j["ek"] = to_string(report.ek);
    return j;
}

nlohmann::json to_json(const std::vector<SplitReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

nlohmann::json to_json(const EkResult& result) {
    auto assignment_json = [](const std::vector<EkAssignment>& fn) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : fn) arr.push_back({{"w", to_string(a.w)}, {"phi", to_string(a.phi)}, {"psi", to_string(a.psi)}});
        return arr;
    };
    nlohmann::json j;
    j["ek"] = to_string(result.verdict);
    if (result.verdict == EkVerdict::found) j["function"] = assignment_json(result.function);
    if (result.witness) {
        nlohmann::json subset = nlohmann::json::array();
        for (const auto& m : result.witness->subset) subset.push_back(to_string(m));
        j["witness"] = {{"assignment", assignment_json(result.witness->assignment)},
                        {"subset", subset},
                        {"side", result.witness->phi_side ? "phi" : "psi"}};
    }
    return j;
}

}  // namespace monosplit
