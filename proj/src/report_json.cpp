#include "qgames/report_json.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qgames/numfmt.hpp"

namespace qgames {

std::string equilibrium_report_to_json(const StrategicGame& game,
                                       const EquilibriumReport& report) {
    std::ostringstream out;
    auto emit_labels = [&out](const std::vector<std::string>& labels) {
        out << '[';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ',';
            out << nlohmann::json(labels[i]).dump();
        }
        out << ']';
    };
    auto emit_cells = [&out](const std::vector<Cell>& cells) {
        out << '[';
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << '[' << cells[i].row << ',' << cells[i].col << ']';
        }
        out << ']';
    };
    out << "{\n  \"labels_a\": ";
    emit_labels(game.labels_a());
    out << ",\n  \"labels_b\": ";
    emit_labels(game.labels_b());
    out << ",\n  \"pure_nash\": ";
    emit_cells(report.pure_nash);
    out << ",\n  \"pareto_optimal\": ";
    emit_cells(report.pareto_optimal);
    if (report.mixed_nash_2x2) {
        out << ",\n  \"mixed_nash_2x2\": [";
        const auto& profiles = *report.mixed_nash_2x2;
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            if (i) out << ',';
            out << '[' << fmt_sig9(profiles[i].first) << ',' << fmt_sig9(profiles[i].second)
                << ']';
        }
        out << ']';
    }
    if (report.ess) {
        out << ",\n  \"ess\": [";
        for (std::size_t i = 0; i < report.ess->size(); ++i) {
            if (i) out << ',';
            out << ((*report.ess)[i] ? "true" : "false");
        }
        out << ']';
    }
    out << "\n}\n";
    return out.str();
}

EquilibriumReport parse_equilibrium_report_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("solve report: malformed JSON: ") + e.what());
    }
    auto parse_cells = [&root](const std::string& key) {
        if (!root.contains(key) || !root.at(key).is_array()) {
            throw std::invalid_argument(key + ": missing or not an array");
        }
        std::vector<Cell> cells;
        for (std::size_t i = 0; i < root.at(key).size(); ++i) {
            const auto& node = root.at(key)[i];
            if (!node.is_array() || node.size() != 2) {
                throw std::invalid_argument(key + "[" + std::to_string(i) +
                                            "]: expected [row,col]");
            }
            cells.push_back({node[0].get<std::size_t>(), node[1].get<std::size_t>()});
        }
        return cells;
    };
    EquilibriumReport report;
    report.pure_nash = parse_cells("pure_nash");
    report.pareto_optimal = parse_cells("pareto_optimal");
    if (root.contains("mixed_nash_2x2")) {
        std::vector<std::pair<double, double>> profiles;
        for (const auto& node : root.at("mixed_nash_2x2")) {
            if (!node.is_array() || node.size() != 2) {
                throw std::invalid_argument("mixed_nash_2x2: expected [p,q] pairs");
            }
            profiles.emplace_back(node[0].get<double>(), node[1].get<double>());
        }
        report.mixed_nash_2x2 = std::move(profiles);
    }
    if (root.contains("ess")) {
        std::vector<bool> flags;
        for (const auto& node : root.at("ess")) {
            if (!node.is_boolean()) {
                throw std::invalid_argument("ess: expected booleans");
            }
            flags.push_back(node.get<bool>());
        }
        report.ess = std::move(flags);
    }
    return report;
}

}  // namespace qgames
