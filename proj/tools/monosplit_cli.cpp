// monosplit: command-line front end for Betti tables and splittings of
// monomial ideals.
//
// Exit status: 0 on success, 1 when a verification verdict is negative,
// 2 on malformed input or refused work.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monosplit/betti.hpp"
#include "monosplit/errors.hpp"
#include "monosplit/graph.hpp"
#include "monosplit/splitting.hpp"
#include "monosplit/text_io.hpp"

namespace ms = monosplit;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kInputError = 2;
constexpr std::size_t kLatticeGuard = 50000;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ms::MonomialIdeal load_ideal(const std::string& path) {
    try {
        return ms::parse_ideal(read_file(path));
    } catch (const ms::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void guard_lattice(const ms::MonomialIdeal& ideal, bool force) {
    if (force) return;
    const auto size = ms::lcm_lattice(ideal).size();
    if (size > kLatticeGuard) {
        throw InputError("lcm lattice has " + std::to_string(size) + " degrees (limit " +
                         std::to_string(kLatticeGuard) + "); pass --force to compute anyway");
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string variable_name(const ms::SplitReport& r) {
    return r.variable ? "x" + std::to_string(*r.variable + 1) : "user";
}

void print_reports(const std::vector<ms::SplitReport>& reports) {
    std::cout << "var    field  betti_splitting  disjoint_support  ek\n";
    for (const auto& r : reports) {
        std::cout << std::left << std::setw(7) << variable_name(r) << std::setw(7) << r.field.characteristic()
                  << std::setw(17) << yes_no(r.betti_splitting) << std::setw(18) << yes_no(r.disjoint_support)
                  << ms::to_string(r.ek) << "\n";
    }
}

// Partition from --var (1-based) or from a file listing the generators of J.
struct PartitionChoice {
    std::size_t var = 0;
    std::string part_path;

    void add_options(CLI::App* cmd) {
        auto* v = cmd->add_option("--var", var, "split by divisibility by this variable (1-based)");
        auto* p = cmd->add_option("--part", part_path, "ideal file listing the generators that form J");
        v->excludes(p);
        p->excludes(v);
    }

    std::pair<ms::Partition, std::optional<std::size_t>> build(const ms::MonomialIdeal& ideal) const {
        try {
            if (!part_path.empty()) {
                const auto j = load_ideal(part_path);
                if (j.num_vars() != ideal.num_vars()) throw InputError("--part ideal uses a different ring");
                return {ms::Partition::from_subset(ideal, j.generators()), std::nullopt};
            }
            if (var < 1 || var > ideal.num_vars()) throw InputError("unknown variable index " + std::to_string(var));
            return {ms::xi_partition(ideal, var - 1), var - 1};
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
};

ms::FieldSpec field_from(std::uint32_t c) {
    try {
        return ms::FieldSpec::from_characteristic(c);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multigraded Betti numbers and splittings of monomial ideals"};
    app.require_subcommand(1);

    std::uint32_t characteristic = 0;
    bool json = false;
    bool force = false;
    int status = kOk;

    // betti
    auto* betti = app.add_subcommand("betti", "multigraded Betti table of an ideal");
    std::string betti_path;
    bool serialized = false, taylor = false;
    betti->add_option("ideal", betti_path)->required();
    betti->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    betti->add_flag("--json", json, "emit JSON");
    betti->add_flag("--serialized", serialized, "emit the key-value table");
    betti->add_flag("--taylor", taylor, "compute through the Taylor complex instead");
    betti->add_flag("--force", force, "ignore the lattice size guard");
    betti->callback([&] {
        const auto ideal = load_ideal(betti_path);
        guard_lattice(ideal, force);
        const auto field = field_from(characteristic);
        const auto table = taylor ? ms::betti_table_taylor(ideal, field) : ms::betti_table(ideal, field);
        if (serialized) {
            std::cout << ms::serialize_betti(table);
        } else if (json) {
            nlohmann::json j;
            j["field"] = field.characteristic();
            j["convention"] = "ideal";
            j["totals"] = ms::total_betti(table);
            j["entries"] = nlohmann::json::array();
            for (const auto& [key, rank] : table.entries()) {
                j["entries"].push_back({{"i", key.index}, {"degree", ms::to_string(key.degree)}, {"rank", rank}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "field " << ms::to_string(field) << "\n" << ms::render_betti_diagram(table);
        }
    });

    // intersect
    auto* inter = app.add_subcommand("intersect", "intersection of two ideals");
    std::string inter_a, inter_b;
    inter->add_option("first", inter_a)->required();
    inter->add_option("second", inter_b)->required();
    inter->callback([&] {
        const auto a = load_ideal(inter_a);
        const auto b = load_ideal(inter_b);
        if (a.num_vars() != b.num_vars()) throw InputError("ideals live in different rings");
        std::cout << ms::format_ideal(ms::intersect(a, b));
    });

    // split-scan
    auto* scan = app.add_subcommand("split-scan", "test every x_i-partition for a Betti splitting");
    std::string scan_path;
    scan->add_option("ideal", scan_path)->required();
    scan->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    scan->add_flag("--json", json, "emit JSON");
    scan->add_flag("--force", force, "ignore the lattice size guard");
    scan->callback([&] {
        const auto ideal = load_ideal(scan_path);
        guard_lattice(ideal, force);
        const auto reports = ms::xi_splitting_scan(ideal, field_from(characteristic));
        if (json) {
            std::cout << ms::to_json(reports).dump(2) << "\n";
            return;
        }
        print_reports(reports);
        std::string found;
        for (const auto& r : reports) {
            if (r.betti_splitting) found += (found.empty() ? "" : " ") + variable_name(r);
        }
        std::cout << "splitting variables: " << (found.empty() ? "none" : found) << "\n";
    });

    // split-check
    auto* check = app.add_subcommand("split-check", "test one partition for a Betti splitting");
    std::string check_path;
    PartitionChoice check_part;
    check->add_option("ideal", check_path)->required();
    check_part.add_options(check);
    check->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    check->add_flag("--json", json, "emit JSON");
    check->add_flag("--force", force, "ignore the lattice size guard");
    check->callback([&] {
        const auto ideal = load_ideal(check_path);
        guard_lattice(ideal, force);
        const auto [partition, var] = check_part.build(ideal);
        const auto field = field_from(characteristic);
        const auto tables = ms::partition_tables(partition, field);
        const auto report = ms::split_report(partition, var, field);
        if (json) {
            std::cout << ms::to_json(report).dump(2) << "\n";
        } else {
            print_reports({report});
            const auto totals = [](const ms::BettiTable& t) {
                std::string s;
                for (auto v : ms::total_betti(t)) s += (s.empty() ? "" : ",") + std::to_string(v);
                return "(" + s + ")";
            };
            std::cout << "totals I=" << totals(tables.whole) << " J=" << totals(tables.j) << " K="
                      << totals(tables.k) << " J∩K=" << totals(tables.intersection) << "\n";
        }
        if (!report.betti_splitting) status = kVerdictFailed;
    });

    // ek-check
    auto* ek = app.add_subcommand("ek-check", "search for an Eliahou-Kervaire splitting function");
    std::string ek_path;
    PartitionChoice ek_part;
    std::size_t ek_cap = ms::kDefaultEkCap;
    ek->add_option("ideal", ek_path)->required();
    ek_part.add_options(ek);
    ek->add_option("--cap", ek_cap, "largest |G(J∩K)| to search exhaustively");
    ek->add_flag("--json", json, "emit JSON");
    ek->callback([&] {
        const auto ideal = load_ideal(ek_path);
        const auto [partition, var] = ek_part.build(ideal);
        const auto result = ms::ek_search(partition, ek_cap);
        if (json) {
            std::cout << ms::to_json(result).dump(2) << "\n";
        } else {
            std::cout << ms::to_string(result.verdict) << "\n";
            for (const auto& a : result.function) {
                std::cout << "  " << ms::to_string(a.w) << " -> (" << ms::to_string(a.phi) << ", "
                          << ms::to_string(a.psi) << ")\n";
            }
            if (result.witness) {
                std::cout << "forced assignment:\n";
                for (const auto& a : result.witness->assignment) {
                    std::cout << "  " << ms::to_string(a.w) << " -> (" << ms::to_string(a.phi) << ", "
                              << ms::to_string(a.psi) << ")\n";
                }
                std::cout << "violating subset {";
                for (std::size_t k = 0; k < result.witness->subset.size(); ++k) {
                    std::cout << (k ? ", " : "") << ms::to_string(result.witness->subset[k]);
                }
                std::cout << "}: lcm of " << (result.witness->phi_side ? "first" : "second")
                          << " components does not strictly divide its lcm\n";
            }
        }
        if (result.verdict != ms::EkVerdict::found) status = kVerdictFailed;
    });

    // edge-ideal
    auto* edge = app.add_subcommand("edge-ideal", "edge ideal of a graph");
    std::string edge_path;
    edge->add_option("graph", edge_path)->required();
    edge->callback([&] { std::cout << ms::format_ideal(ms::edge_ideal(ms::parse_graph(read_file(edge_path)))); });

    // cover-ideal
    auto* cover = app.add_subcommand("cover-ideal", "cover ideal of a graph or labelled bipartite graph");
    std::string cover_path;
    cover->add_option("graph", cover_path)->required();
    cover->callback([&] {
        const auto text = read_file(cover_path);
        if (text.find("bigraph") != std::string::npos) {
            std::cout << ms::format_bipartite_cover_ideal(ms::parse_bigraph(text));
        } else {
            std::cout << ms::format_ideal(ms::cover_ideal(ms::parse_graph(text)));
        }
    });

    // cover-betti
    auto* cbetti = app.add_subcommand("cover-betti", "total Betti numbers of a CM bipartite cover ideal by recursion");
    std::string cbetti_path;
    cbetti->add_option("bigraph", cbetti_path)->required();
    cbetti->add_flag("--json", json, "emit JSON");
    cbetti->callback([&] {
        const auto g = ms::parse_bigraph(read_file(cbetti_path));
        std::optional<ms::Relabeling> relabel;
        if (!ms::herzog_hibi_validate(g)) {
            relabel = ms::canonical_labeling(g);
            if (!relabel) throw InputError("graph admits no Cohen-Macaulay bipartite labelling");
        }
        const auto totals = ms::cover_betti_recursive(g);
        if (json) {
            nlohmann::json j;
            j["totals"] = totals;
            if (relabel) {
                std::vector<std::size_t> xs, ys;
                for (auto p : relabel->x_position) xs.push_back(p + 1);
                for (auto p : relabel->y_position) ys.push_back(p + 1);
                j["relabel"] = {{"x", xs}, {"y", ys}};
            }
            std::cout << j.dump(2) << "\n";
            return;
        }
        if (relabel) {
            std::cout << "relabelled:";
            for (std::size_t i = 0; i < relabel->x_position.size(); ++i) {
                std::cout << " x" << i + 1 << "->x" << relabel->x_position[i] + 1;
            }
            for (std::size_t i = 0; i < relabel->y_position.size(); ++i) {
                std::cout << " y" << i + 1 << "->y" << relabel->y_position[i] + 1;
            }
            std::cout << "\n";
        }
        std::cout << "totals:";
        for (auto v : totals) std::cout << " " << v;
        std::cout << "\n";
    });

    // cm-gen
    auto* gen = app.add_subcommand("cm-gen", "random Cohen-Macaulay bipartite graph");
    std::size_t gen_n = 0;
    double density = 0.0;
    std::uint64_t seed = 0;
    gen->add_option("--n", gen_n, "pairs (x_i, y_i)")->required()->check(CLI::PositiveNumber);
    gen->add_option("--density", density, "probability of each edge (x_i, y_j), i < j")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "random seed")->required();
    gen->callback([&] { std::cout << ms::format_bigraph(ms::cm_bipartite_random(gen_n, density, seed)); });

    // cm-check
    auto* cm = app.add_subcommand("cm-check", "check linearity and pd = a(G) = reg - 1 for a CM bipartite graph");
    std::string cm_path;
    cm->add_option("bigraph", cm_path)->required();
    cm->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    cm->callback([&] {
        const auto g = ms::parse_bigraph(read_file(cm_path));
        if (!ms::herzog_hibi_validate(g) && !ms::canonical_labeling(g)) {
            throw InputError("graph admits no Cohen-Macaulay bipartite labelling");
        }
        const auto field = field_from(characteristic);
        const auto simple = g.to_simple_graph();
        const auto cover_ideal = ms::cover_ideal(simple);
        const auto cover_table = ms::betti_table(cover_ideal, field);
        const bool linear = ms::has_linear_resolution(cover_table);
        const bool recursion = ms::cover_betti_recursive(g) == ms::total_betti(cover_table);
        const bool pd_reg = ms::cm_pd_reg_check(g, field);
        std::cout << "linear resolution: " << yes_no(linear) << "\n"
                  << "recursion matches homology: " << yes_no(recursion) << "\n"
                  << "pd(cover) = " << ms::proj_dim(cover_table) << ", a(G) = " << ms::three_disjoint_number(simple)
                  << "\n"
                  << "pd = a(G) = reg(edge ideal) - 1: " << yes_no(pd_reg) << "\n";
        if (!(linear && recursion && pd_reg)) status = kVerdictFailed;
    });

    // char-scan
    auto* cscan = app.add_subcommand("char-scan", "compare Betti tables over QQ and ZZ/p");
    std::string cscan_path;
    std::vector<std::uint32_t> primes;
    cscan->add_option("ideal", cscan_path)->required();
    cscan->add_option("--char", primes, "prime characteristic (repeatable)")->required();
    cscan->add_flag("--json", json, "emit JSON");
    cscan->add_flag("--force", force, "ignore the lattice size guard");
    cscan->callback([&] {
        const auto ideal = load_ideal(cscan_path);
        guard_lattice(ideal, force);
        for (auto p : primes) {
            if (p == 0) throw InputError("char-scan compares against QQ; pass primes only");
            field_from(p);
        }
        const auto report = ms::char_scan(ideal, primes);
        if (json) {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [p, diffs] : report) {
                auto& arr = j[std::to_string(p)] = nlohmann::json::array();
                for (const auto& d : diffs) {
                    arr.push_back({{"i", d.index},
                                   {"degree", ms::to_string(d.degree)},
                                   {"rational", d.rational_rank},
                                   {"modular", d.modular_rank}});
                }
            }
            std::cout << j.dump(2) << "\n";
            return;
        }
        for (const auto& [p, diffs] : report) {
            std::cout << "p=" << p << ":" << (diffs.empty() ? " no differences" : "") << "\n";
            for (const auto& d : diffs) {
                std::cout << "  i=" << d.index << " degree " << ms::to_string(d.degree) << ": QQ " << d.rational_rank
                          << ", ZZ/" << p << " " << d.modular_rank << "\n";
            }
        }
    });

    // borel
    auto* borel = app.add_subcommand("borel", "smallest strongly stable ideal containing the given monomials");
    std::string borel_path;
    borel->add_option("seeds", borel_path, "ideal file with the seed monomials")->required();
    borel->callback([&] {
        const auto seeds = load_ideal(borel_path);
        std::cout << ms::format_ideal(ms::borel_closure(seeds.num_vars(), seeds.generators()));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ms::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ms::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return status;
}
