#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace girylab {

/// One pass/fail record of a lemma or law check. `witness` is nonempty
/// exactly when the check failed.
struct CheckRecord {
    std::string id;
    bool pass = true;
    std::string witness;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> records;

    bool ok() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }

    void add(std::string id, bool pass, std::string witness = "") {
        records.push_back({std::move(id), pass, pass ? "" : std::move(witness)});
    }

    void merge(const SuiteReport& other) {
        for (const auto& r : other.records) records.push_back(r);
    }

    const CheckRecord* first_failure() const {
        for (const auto& r : records)
            if (!r.pass) return &r;
        return nullptr;
    }

    nlohmann::json to_json() const {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : records) {
            nlohmann::json c{{"id", r.id}, {"status", r.pass ? "pass" : "fail"}};
            if (!r.pass) c["witness"] = r.witness;
            checks.push_back(c);
        }
        return nlohmann::json{{"suite", suite}, {"status", ok() ? "pass" : "fail"},
                              {"checks", checks}};
    }
};

} // namespace girylab
