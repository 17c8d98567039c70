#include "qtough/report.hpp"

#include <algorithm>
#include <sstream>

namespace qtough {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["check_id"] = check_id;
    j["params"] = params;
    j["computed"] = computed;
    j["margin"] = margin;
    j["passed"] = passed;
    if (!status.empty()) j["status"] = status;
    if (witness) j["witness"] = *witness;
    if (seed) j["seed"] = *seed;
    return j;
}

std::string VerificationReport::csv_header() { return "check_id,params,margin,passed"; }

namespace {

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string VerificationReport::csv_row() const {
    std::ostringstream out;
    out << check_id << ',' << csv_quote(params.dump()) << ',' << margin << ','
        << (passed ? "true" : "false");
    return out.str();
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.check_id != b.check_id) return a.check_id < b.check_id;
                         return a.params.dump() < b.params.dump();
                     });
}

nlohmann::json to_json(const ToughnessResult& result) {
    nlohmann::json j;
    j["value"] = result.value.is_infinite() ? "inf" : result.value.str();
    if (result.witness) {
        j["witness"] = set_members(*result.witness);
        j["components"] = result.witness_components;
    }
    return j;
}

nlohmann::json to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json to_json(const Vector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

}  // namespace qtough
