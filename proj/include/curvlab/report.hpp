#pragma once

/**
 * @file report.hpp
 * @brief Command reports with a text and a structured (JSON) rendering built
 * from the same item list.
 */

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvlab {

struct ReportItem {
    std::string key;
    std::string value;
    std::optional<bool> verdict;  // unset for plain values
    bool expected_failure = false;  // a false verdict that is the documented outcome
    std::string witness;
};

struct Report {
    std::string command;
    std::vector<ReportItem> items;

    Report& value(std::string key, std::string v) {
        items.push_back({std::move(key), std::move(v), std::nullopt, false, {}});
        return *this;
    }

    Report& check(std::string key, bool ok, std::string detail = {}, std::string witness = {}) {
        items.push_back({std::move(key), std::move(detail), ok, false, std::move(witness)});
        return *this;
    }

    Report& expected(std::string key, bool ok, std::string detail = {}) {
        items.push_back({std::move(key), std::move(detail), ok, true, {}});
        return *this;
    }

    bool defect() const {
        for (const auto& i : items)
            if (i.verdict && !*i.verdict && !i.expected_failure) return true;
        return false;
    }

    int exit_code() const { return defect() ? 1 : 0; }

    nlohmann::json structured() const {
        nlohmann::json items_json = nlohmann::json::array();
        for (const auto& i : items) {
            nlohmann::json j = {{"key", i.key}, {"value", i.value}};
            if (i.verdict) j["verdict"] = *i.verdict ? "pass" : (i.expected_failure ? "expected-failure" : "fail");
            if (!i.witness.empty()) j["witness"] = i.witness;
            items_json.push_back(std::move(j));
        }
        return {{"command", command}, {"items", items_json}, {"status", defect() ? "defect" : "pass"}};
    }

    std::string text() const {
        std::string out = "command: " + command + "\n";
        for (const auto& i : items) {
            out += "  " + i.key;
            if (!i.value.empty()) out += ": " + i.value;
            if (i.verdict) out += *i.verdict ? "  [pass]" : (i.expected_failure ? "  [expected failure]" : "  [FAIL]");
            out += "\n";
            if (!i.witness.empty()) out += "    witness: " + i.witness + "\n";
        }
        out += std::string("status: ") + (defect() ? "defect" : "pass") + "\n";
        return out;
    }
};

}  // namespace curvlab
