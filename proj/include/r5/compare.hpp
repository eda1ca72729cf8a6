#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "r5/record.hpp"

namespace r5 {

struct FieldDifference {
    std::string field;
    std::string left;
    std::string right;
};

struct ComparisonReport {
    bool strict = false;
    std::vector<FieldDifference> differences;
    /// First index at which the data sequences disagree (or the shorter
    /// length when one is a prefix of the other).
    std::optional<std::size_t> first_divergence;

    bool match() const noexcept { return differences.empty(); }
};

namespace detail {

inline std::string int_list(const std::vector<std::int64_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

}  // namespace detail

/// Data and parameters are always compared; strict mode adds revision,
/// dirty and every system field. Timestamps are never compared.
inline ComparisonReport compare_records(const ResultRecord& a, const ResultRecord& b,
                                        bool strict = false) {
    ComparisonReport report;
    report.strict = strict;
    auto check = [&](std::string field, const std::string& l, const std::string& r) {
        if (l != r) report.differences.push_back({std::move(field), l, r});
    };

    if (a.data != b.data) {
        const auto [ia, ib] = std::mismatch(a.data.begin(), a.data.end(), b.data.begin(), b.data.end());
        const auto index = static_cast<std::size_t>(ia - a.data.begin());
        report.first_divergence = index;
        auto at = [index](const std::vector<std::int64_t>& v) {
            return index < v.size() ? std::to_string(v[index]) : std::string("<end>");
        };
        report.differences.push_back({"data", "data[" + std::to_string(index) + "] = " + at(a.data),
                                      "data[" + std::to_string(index) + "] = " + at(b.data)});
    }

    const auto& pa = a.parameters;
    const auto& pb = b.parameters;
    check("parameters.count", std::to_string(pa.count), std::to_string(pb.count));
    check("parameters.x0", std::to_string(pa.x0), std::to_string(pb.x0));
    check("parameters.step", std::to_string(pa.step), std::to_string(pb.step));
    check("parameters.seed_scheme", std::string(to_string(pa.seed.scheme)),
          std::string(to_string(pb.seed.scheme)));
    check("parameters.seed_value", pa.seed.value.to_decimal(), pb.seed.value.to_decimal());
    check("parameters.model", std::string(to_string(pa.model)), std::string(to_string(pb.model)));

    if (strict) {
        check("revision", a.revision.value_or("null"), b.revision.value_or("null"));
        check("dirty", a.dirty ? "true" : "false", b.dirty ? "true" : "false");
        check("system.os_name", a.system.os_name, b.system.os_name);
        check("system.os_version", a.system.os_version, b.system.os_version);
        check("system.architecture", a.system.architecture, b.system.architecture);
        check("system.artifact_name", a.system.artifact_name, b.system.artifact_name);
        check("system.artifact_version", a.system.artifact_version, b.system.artifact_version);
        check("system.toolchain", a.system.toolchain, b.system.toolchain);
    }
    return report;
}

inline std::string format_report_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << (report.match() ? "match" : "mismatch") << (report.strict ? " (strict)" : "") << '\n';
    if (report.first_divergence) {
        out << "first divergence at index " << *report.first_divergence << '\n';
    }
    for (const auto& d : report.differences) {
        out << "  " << d.field << ": " << d.left << " != " << d.right << '\n';
    }
    return out.str();
}

inline nlohmann::json report_to_json(const ComparisonReport& report) {
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : report.differences) {
        diffs.push_back({{"field", d.field}, {"left", d.left}, {"right", d.right}});
    }
    return {{"match", report.match()},
            {"strict", report.strict},
            {"first_divergence", report.first_divergence ? nlohmann::json(*report.first_divergence)
                                                         : nlohmann::json(nullptr)},
            {"differences", diffs}};
}

}  // namespace r5
