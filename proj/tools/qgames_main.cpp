// qgames: quantum game analysis CLI.
//
// Subcommands:
//   table   classical or extended quantum payoff tables
//   scan    mixed-strategy payoff surface as CSV
//   region  lattice points whose payoff exceeds a threshold
//   solve   pure/mixed Nash, Pareto set, optional ESS flags as JSON
//   verify  claim-by-claim recomputation report as JSON
//
// Exit codes: 0 success, 1 computation or I/O error, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgames/gamedef.hpp"
#include "qgames/mixedscan.hpp"
#include "qgames/numfmt.hpp"
#include "qgames/qscheme.hpp"
#include "qgames/report_json.hpp"
#include "qgames/solvers.hpp"
#include "qgames/verify.hpp"

namespace {

using namespace qgames;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string game = "hd";
    double v = 50.0, i = 100.0, d = 10.0;
    std::string scheme;        // "", "mw", "eisert"
    std::string state = "mwi"; // "mwi", "bell"
    std::string strategies;    // comma list; empty means per-game default
    std::size_t resolution = 101;
    double threshold = 15.0;
    std::string format = "ascii";
    std::string input;
    std::string output;
    bool ess = false;
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + output_path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed: " + output_path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Splits a strategy list at commas outside parentheses, so u(theta,phi)
// literals survive.
std::vector<std::string> split_strategies(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            tokens.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    tokens.push_back(current);
    return tokens;
}

// Label registry: H/C -> identity, D -> X, Q -> iZ, R -> 50/50 mixture of
// identity and X, u(theta,phi) -> parametrized unitary (radians).
StrategyOperator operator_for_label(const std::string& label) {
    if (label == "H" || label == "C") {
        return StrategyOperator::raw_unitary(ComplexMatrix::identity(2));
    }
    if (label == "D") {
        return StrategyOperator::raw_unitary(ComplexMatrix::pauli_x());
    }
    if (label == "Q") {
        return StrategyOperator::raw_unitary(Complex{0.0, 1.0} * ComplexMatrix::pauli_z());
    }
    if (label == "R") {
        return StrategyOperator::mixture(
            {{0.5, StrategyOperator::raw_unitary(ComplexMatrix::identity(2))},
             {0.5, StrategyOperator::raw_unitary(ComplexMatrix::pauli_x())}});
    }
    if (label.size() > 3 && label.substr(0, 2) == "u(" && label.back() == ')') {
        const std::string body = label.substr(2, label.size() - 3);
        const auto comma = body.find(',');
        if (comma != std::string::npos) {
            try {
                const double theta = std::stod(body.substr(0, comma));
                const double phi = std::stod(body.substr(comma + 1));
                return StrategyOperator::parametrized(theta, phi);
            } catch (const std::exception& e) {
                throw UsageError("invalid strategy literal '" + label + "': " + e.what());
            }
        }
    }
    throw UsageError("unknown strategy '" + label +
                     "' (expected H, C, D, Q, R or u(theta,phi))");
}

std::vector<std::pair<std::string, StrategyOperator>> parse_strategy_list(
    const std::string& text) {
    std::vector<std::pair<std::string, StrategyOperator>> out;
    for (const std::string& token : split_strategies(text)) {
        if (token.empty()) {
            throw UsageError("empty strategy label in '" + text + "'");
        }
        out.emplace_back(token, operator_for_label(token));
    }
    return out;
}

StrategicGame classical_game(const Options& opt) {
    if (!opt.input.empty()) {
        return parse_game_file(read_file(opt.input));
    }
    if (opt.game == "pd") {
        return prisoners_dilemma_game();
    }
    return hawk_dove_game(HawkDoveParams{opt.v, opt.i, opt.d});
}

std::string render_ascii(const StrategicGame& game) {
    std::vector<std::vector<std::string>> cells(game.rows());
    std::size_t label_width = 0;
    for (const auto& label : game.labels_a()) label_width = std::max(label_width, label.size());
    std::vector<std::size_t> widths(game.cols());
    for (std::size_t j = 0; j < game.cols(); ++j) widths[j] = game.labels_b()[j].size();
    for (std::size_t i = 0; i < game.rows(); ++i) {
        for (std::size_t j = 0; j < game.cols(); ++j) {
            std::string cell = "(" + fmt_sig9(game.payoff_a(i, j)) + ", " +
                               fmt_sig9(game.payoff_b(i, j)) + ")";
            widths[j] = std::max(widths[j], cell.size());
            cells[i].push_back(std::move(cell));
        }
    }
    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (std::size_t j = 0; j < game.cols(); ++j) {
        out << "  " << std::string(widths[j] - game.labels_b()[j].size(), ' ')
            << game.labels_b()[j];
    }
    out << '\n';
    for (std::size_t i = 0; i < game.rows(); ++i) {
        out << game.labels_a()[i]
            << std::string(label_width - game.labels_a()[i].size(), ' ');
        for (std::size_t j = 0; j < game.cols(); ++j) {
            out << "  " << std::string(widths[j] - cells[i][j].size(), ' ') << cells[i][j];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_csv(const StrategicGame& game) {
    std::ostringstream out;
    out << "row,col,payoff_a,payoff_b\n";
    for (std::size_t i = 0; i < game.rows(); ++i) {
        for (std::size_t j = 0; j < game.cols(); ++j) {
            out << game.labels_a()[i] << ',' << game.labels_b()[j] << ','
                << fmt_shortest(game.payoff_a(i, j)) << ','
                << fmt_shortest(game.payoff_b(i, j)) << '\n';
        }
    }
    return out.str();
}

int cmd_table(const Options& opt) {
    StrategicGame table = [&] {
        if (opt.scheme.empty()) {
            return classical_game(opt);
        }
        const StrategicGame base = opt.game == "pd"
                                       ? prisoners_dilemma_game()
                                       : hawk_dove_game(HawkDoveParams{opt.v, opt.i, opt.d});
        std::string list = opt.strategies;
        if (list.empty()) list = opt.game == "pd" ? "C,D,Q" : "H,D,Q";
        const QuantumGameSpec spec{
            opt.scheme == "mw" ? Scheme::MarinattoWeber : Scheme::Eisert,
            opt.state == "bell" ? InitialState::bell_plus() : InitialState::mw_i_phase(),
            payoff_operators(base)};
        return extended_payoff_table(spec, parse_strategy_list(list));
    }();

    if (opt.format == "json") {
        emit(serialize_game(table) + "\n", opt.output);
    } else if (opt.format == "csv") {
        emit(render_csv(table), opt.output);
    } else {
        emit(render_ascii(table), opt.output);
    }
    return 0;
}

Surface surface_for(const Options& opt) {
    return opt.game == "pd" ? Surface::prisoners_dilemma()
                            : Surface::hawk_dove(HawkDoveParams{opt.v, opt.i, opt.d});
}

int cmd_scan(const Options& opt) {
    const PayoffGrid grid = grid_scan(surface_for(opt), opt.resolution);
    std::ostringstream out;
    out << "p,q,payoff_a,payoff_b\n";
    for (const auto& cell : grid.cells) {
        out << fmt_shortest(cell.p) << ',' << fmt_shortest(cell.q) << ','
            << fmt_shortest(cell.payoff_a) << ',' << fmt_shortest(cell.payoff_b) << '\n';
    }
    emit(out.str(), opt.output);
    return 0;
}

int cmd_region(const Options& opt) {
    const Region region = region_above(surface_for(opt), opt.threshold, opt.resolution);
    std::ostringstream out;
    out << "p,q,payoff_a,payoff_b\n";
    for (const auto& member : region.members) {
        out << fmt_shortest(member.p) << ',' << fmt_shortest(member.q) << ','
            << fmt_shortest(member.payoff) << ',' << fmt_shortest(member.payoff) << '\n';
    }
    emit(out.str(), opt.output);
    return 0;
}

int cmd_solve(const Options& opt) {
    const StrategicGame game = classical_game(opt);
    const EquilibriumReport report = analyze_game(game, opt.ess);
    emit(equilibrium_report_to_json(game, report), opt.output);
    return 0;
}

int cmd_verify(const Options& opt) {
    emit(verify::report_to_json(verify::run_all_claims()), opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum game analysis engine"};
    app.require_subcommand(1);
    Options opt;

    auto add_game_flags = [&opt](CLI::App* cmd) {
        cmd->add_option("--game", opt.game, "game family")
            ->check(CLI::IsMember({"hd", "pd"}));
        cmd->add_option("--v", opt.v, "Hawk-Dove resource value");
        cmd->add_option("--i", opt.i, "Hawk-Dove injury cost");
        cmd->add_option("--d", opt.d, "Hawk-Dove display cost");
    };

    CLI::App* table = app.add_subcommand("table", "print a payoff table");
    add_game_flags(table);
    table->add_option("--scheme", opt.scheme, "quantization scheme")
        ->check(CLI::IsMember({"mw", "eisert"}));
    table->add_option("--state", opt.state,
                      "initial state: mwi = (|00>+i|11>)/sqrt2, bell = (|00>+|11>)/sqrt2")
        ->check(CLI::IsMember({"mwi", "bell"}));
    table->add_option("--strategies", opt.strategies,
                      "comma list of H,C,D,Q,R or u(theta,phi) literals");
    table->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"ascii", "json", "csv"}));
    table->add_option("--input", opt.input, "game JSON file to display");
    table->add_option("--output", opt.output, "write to file instead of stdout");

    CLI::App* scan = app.add_subcommand("scan", "mixed-strategy payoff grid as CSV");
    add_game_flags(scan);
    scan->add_option("--resolution", opt.resolution, "lattice points per axis")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    scan->add_option("--output", opt.output, "write to file instead of stdout");

    CLI::App* region = app.add_subcommand("region", "lattice points with payoff above a "
                                                    "threshold as CSV");
    add_game_flags(region);
    region->add_option("--threshold", opt.threshold, "payoff threshold (strict)");
    region->add_option("--resolution", opt.resolution, "lattice points per axis")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    region->add_option("--output", opt.output, "write to file instead of stdout");

    CLI::App* solve = app.add_subcommand("solve", "equilibrium report as JSON");
    add_game_flags(solve);
    solve->add_option("--input", opt.input, "game JSON file");
    solve->add_flag("--ess", opt.ess, "include per-strategy ESS flags (symmetric games)");
    solve->add_option("--output", opt.output, "write to file instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand("verify", "recompute reference claims as JSON");
    verify_cmd->add_option("--output", opt.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(table)) return cmd_table(opt);
        if (app.got_subcommand(scan)) return cmd_scan(opt);
        if (app.got_subcommand(region)) return cmd_region(opt);
        if (app.got_subcommand(solve)) return cmd_solve(opt);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
