#include "qgames/gamedef.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qgames/numfmt.hpp"

namespace qgames {

StrategicGame::StrategicGame(std::vector<std::string> labels_a,
                             std::vector<std::string> labels_b,
                             std::vector<std::vector<PayoffPair>> payoffs)
    : labels_a_(std::move(labels_a)),
      labels_b_(std::move(labels_b)),
      payoffs_(std::move(payoffs)) {
    if (labels_a_.empty() || labels_b_.empty()) {
        throw std::invalid_argument("StrategicGame: strategy labels must be nonempty");
    }
    if (payoffs_.size() != labels_a_.size()) {
        throw std::invalid_argument("StrategicGame: payoffs has " +
                                    std::to_string(payoffs_.size()) + " rows, expected " +
                                    std::to_string(labels_a_.size()));
    }
    for (std::size_t i = 0; i < payoffs_.size(); ++i) {
        if (payoffs_[i].size() != labels_b_.size()) {
            throw std::invalid_argument("StrategicGame: payoffs[" + std::to_string(i) +
                                        "] has " + std::to_string(payoffs_[i].size()) +
                                        " cells, expected " + std::to_string(labels_b_.size()));
        }
        for (std::size_t j = 0; j < payoffs_[i].size(); ++j) {
            const auto& [a, b] = payoffs_[i][j];
            if (!std::isfinite(a) || !std::isfinite(b)) {
                throw std::invalid_argument("StrategicGame: payoffs[" + std::to_string(i) +
                                            "][" + std::to_string(j) + "] is not finite");
            }
        }
    }
}

const PayoffPair& StrategicGame::at(std::size_t row, std::size_t col) const {
    if (row >= rows() || col >= cols()) {
        throw std::invalid_argument("StrategicGame: cell (" + std::to_string(row) + "," +
                                    std::to_string(col) + ") out of range");
    }
    return payoffs_[row][col];
}

bool StrategicGame::is_symmetric(double tol) const {
    if (rows() != cols()) return false;
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            if (std::abs(payoff_b(i, j) - payoff_a(j, i)) > tol) return false;
        }
    }
    return true;
}

MixedProfile::MixedProfile(double p_, double q_) : p(p_), q(q_) {
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("MixedProfile: probabilities must lie in [0,1], got p=" +
                                    fmt_sig9(p_) + " q=" + fmt_sig9(q_));
    }
}

StrategicGame hawk_dove_game(const HawkDoveParams& params) {
    const double v = params.v, i = params.i, d = params.d;
    if (!std::isfinite(v) || !std::isfinite(i) || !std::isfinite(d)) {
        throw std::invalid_argument("hawk_dove_game: parameters must be finite");
    }
    const double hh = v / 2.0 - i / 2.0;
    const double dd = v / 2.0 - d;
    return StrategicGame{{"H", "D"},
                         {"H", "D"},
                         {{{hh, hh}, {v, 0.0}},
                          {{0.0, v}, {dd, dd}}}};
}

StrategicGame prisoners_dilemma_game() {
    return StrategicGame{{"C", "D"},
                         {"C", "D"},
                         {{{3.0, 3.0}, {0.0, 5.0}},
                          {{5.0, 0.0}, {1.0, 1.0}}}};
}

PayoffPair classical_mixed_payoff(const StrategicGame& game, const MixedProfile& profile) {
    if (game.rows() != 2 || game.cols() != 2) {
        throw std::invalid_argument("classical_mixed_payoff: expected a 2x2 game, got " +
                                    std::to_string(game.rows()) + "x" +
                                    std::to_string(game.cols()));
    }
    const double pw[2] = {profile.p, 1.0 - profile.p};
    const double qw[2] = {profile.q, 1.0 - profile.q};
    double pi_a = 0.0, pi_b = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            pi_a += pw[i] * qw[j] * game.payoff_a(i, j);
            pi_b += pw[i] * qw[j] * game.payoff_b(i, j);
        }
    }
    return {pi_a, pi_b};
}

namespace {

using nlohmann::json;

std::vector<std::string> parse_labels(const json& root, const std::string& key) {
    if (!root.contains(key)) {
        throw std::invalid_argument(key + ": missing");
    }
    const json& node = root.at(key);
    if (!node.is_array() || node.empty()) {
        throw std::invalid_argument(key + ": must be a nonempty array of strings");
    }
    std::vector<std::string> labels;
    labels.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_string()) {
            throw std::invalid_argument(key + "[" + std::to_string(i) + "]: expected string");
        }
        labels.push_back(node[i].get<std::string>());
    }
    return labels;
}

}  // namespace

StrategicGame parse_game_file(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("game file: malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw std::invalid_argument("game file: root must be a JSON object");
    }
    auto labels_a = parse_labels(root, "labels_a");
    auto labels_b = parse_labels(root, "labels_b");

    if (!root.contains("payoffs")) {
        throw std::invalid_argument("payoffs: missing");
    }
    const json& rows = root.at("payoffs");
    if (!rows.is_array() || rows.size() != labels_a.size()) {
        throw std::invalid_argument("payoffs: expected " + std::to_string(labels_a.size()) +
                                    " rows, got " +
                                    std::to_string(rows.is_array() ? rows.size() : 0));
    }
    std::vector<std::vector<PayoffPair>> payoffs;
    payoffs.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string row_path = "payoffs[" + std::to_string(i) + "]";
        const json& row = rows[i];
        if (!row.is_array() || row.size() != labels_b.size()) {
            throw std::invalid_argument(row_path + ": expected " +
                                        std::to_string(labels_b.size()) + " cells, got " +
                                        std::to_string(row.is_array() ? row.size() : 0));
        }
        std::vector<PayoffPair> out_row;
        out_row.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string cell_path = row_path + "[" + std::to_string(j) + "]";
            const json& cell = row[j];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                throw std::invalid_argument(cell_path + ": expected pair [a,b] of numbers");
            }
            const double a = cell[0].get<double>();
            const double b = cell[1].get<double>();
            if (!std::isfinite(a) || !std::isfinite(b)) {
                throw std::invalid_argument(cell_path + ": payoffs must be finite");
            }
            out_row.emplace_back(a, b);
        }
        payoffs.push_back(std::move(out_row));
    }
    return StrategicGame(std::move(labels_a), std::move(labels_b), std::move(payoffs));
}

std::string serialize_game(const StrategicGame& game) {
    std::ostringstream out;
    auto emit_labels = [&out](const std::vector<std::string>& labels) {
        out << '[';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ',';
            out << json(labels[i]).dump();
        }
        out << ']';
    };
    out << "{\"labels_a\": ";
    emit_labels(game.labels_a());
    out << ", \"labels_b\": ";
    emit_labels(game.labels_b());
    out << ", \"payoffs\": [";
    for (std::size_t i = 0; i < game.rows(); ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < game.cols(); ++j) {
            if (j) out << ',';
            out << '[' << fmt_shortest(game.payoff_a(i, j)) << ','
                << fmt_shortest(game.payoff_b(i, j)) << ']';
        }
        out << ']';
    }
    out << "]}";
    return out.str();
}

}  // namespace qgames
