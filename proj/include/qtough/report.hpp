#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtough/spectral.hpp"
#include "qtough/toughness.hpp"

namespace qtough {

/// One verification outcome. `passed` is always equivalent to margin >= 0;
/// identity checks store margin = tolerance - |residual|.
struct VerificationReport {
    std::string check_id;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json computed = nlohmann::json::object();
    double margin = 0.0;
    bool passed = false;
    std::string status;  // "", "exempt", "hypothesis-not-met", "sub-threshold", ...
    std::optional<std::string> witness;  // graph6 of the offending/minimizing graph
    std::optional<std::uint64_t> seed;

    nlohmann::json to_json() const;
    std::string csv_row() const;

    static std::string csv_header();
};

/// Canonical emission order: by check_id, then by serialized params.
void sort_reports(std::vector<VerificationReport>& reports);

nlohmann::json to_json(const ToughnessResult& result);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Vector& v);

}  // namespace qtough
