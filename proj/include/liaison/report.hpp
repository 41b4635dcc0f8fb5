#pragma once

#include <json.hpp>

#include "liaison/families.hpp"
#include "liaison/inverse.hpp"

namespace liaison {

using json = nlohmann::ordered_json;

inline json betti_to_json(const BettiTable& t, const Ring& ring) {
    json entries = json::array();
    for (const auto& [k, v] : t.entries) {
        if (k.first == 0 || v == 0) continue;
        entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
    }
    json out;
    out["nvars"] = ring.nvars();
    out["modulus"] = ring.modulus();
    out["betti"] = entries;
    out["total"] = t.totals();
    out["cm_type"] = t.cm_type();
    out["deviation"] = t.deviation();
    out["max_socle_shift"] = t.max_socle_shift();
    return out;
}

inline BettiTable betti_from_json(const json& j) {
    BettiTable t;
    t.entries[{0, 0}] = 1;
    for (const auto& e : j.at("betti"))
        t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<long>();
    std::vector<long> totals = j.at("total").get<std::vector<long>>();
    t.grade = static_cast<int>(totals.size() > 1 ? totals[1] - j.at("deviation").get<long>() : 0);
    return t;
}

/// Standard Betti diagram: rows j - i, columns i.
inline std::string betti_diagram(const BettiTable& t) {
    int pd = t.proj_dim();
    int max_row = 0;
    for (const auto& [k, v] : t.entries)
        if (v > 0) max_row = std::max(max_row, k.second - k.first);
    auto cell = [&](long v) { return v == 0 ? std::string(".") : std::to_string(v); };
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{""};
    for (int i = 0; i <= pd; ++i) header.push_back(std::to_string(i));
    grid.push_back(header);
    std::vector<std::string> totals{"total:"};
    for (int i = 0; i <= pd; ++i) totals.push_back(cell(t.total(i)));
    grid.push_back(totals);
    for (int r = 0; r <= max_row; ++r) {
        std::vector<std::string> row{std::to_string(r) + ":"};
        for (int i = 0; i <= pd; ++i) row.push_back(cell(t.beta(i, i + r)));
        grid.push_back(row);
    }
    std::vector<std::size_t> width(pd + 2, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += std::string(width[c] - row[c].size() + (c ? 2 : 0), ' ');
            line += row[c];
        }
        out += line + "\n";
    }
    return out;
}

inline json hf_to_json(const HilbertFunction& hf) {
    json out;
    out["values"] = hf.values;
    out["krull_dim"] = hf.krull_dim;
    return out;
}

inline json ideal_to_json(const Ideal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    return gens;
}

inline json chain_to_json(const ChainReport& report, const Ring& ring) {
    json steps = json::array();
    for (const auto& s : report.steps) {
        json step;
        step["type"] = s.type.degrees;
        json ci = json::array();
        for (const auto& g : s.ci_gens) ci.push_back(g.str());
        step["ci"] = ci;
        step["link"] = ideal_to_json(s.link);
        step["betti"] = betti_to_json(s.betti, ring);
        step["lambda"] = s.lambda;
        step["grade_jumps"] = s.jumps.degrees;
        steps.push_back(std::move(step));
    }
    json out;
    out["steps"] = steps;
    out["sequentially_bounded"] = report.sequentially_bounded;
    out["terminal_is_ci"] = report.terminal_is_ci;
    return out;
}

inline json inverse_to_json(const InverseSystem& m) {
    json gens = json::array();
    for (const auto& g : m.minimal_generators()) gens.push_back(g.str());
    std::vector<long> dims;
    for (int j = 0; j <= m.top_degree(); ++j) dims.push_back(m.dimension(j));
    json out;
    out["generators"] = gens;
    out["dimensions"] = dims;
    return out;
}

inline std::string chain_to_text(const ChainReport& report) {
    std::string out;
    for (std::size_t k = 0; k < report.steps.size(); ++k) {
        const auto& s = report.steps[k];
        out += "step " + std::to_string(k) + ": link by " + s.type.str() + "\n";
        out += "  ci:";
        for (const auto& g : s.ci_gens) out += " " + g.str() + ";";
        out += "\n  lambda = " + std::to_string(s.lambda) +
               ", grade jumps = " + s.jumps.str() + "\n";
        out += betti_diagram(s.betti);
    }
    out += std::string("sequentially bounded: ") +
           (report.sequentially_bounded ? "yes" : "no") + "\n";
    out += std::string("terminal is complete intersection: ") +
           (report.terminal_is_ci ? "yes" : "no") + "\n";
    return out;
}

} // namespace liaison
