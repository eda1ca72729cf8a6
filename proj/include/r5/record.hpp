#pragma once

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "r5/env.hpp"
#include "r5/errors.hpp"
#include "r5/vcs.hpp"
#include "r5/walks.hpp"

namespace r5 {

inline constexpr std::int64_t kRecordSchemaVersion = 1;

/// A walk together with everything needed to re-obtain it and to tell
/// where it came from.
struct ResultRecord {
    std::int64_t schema_version = kRecordSchemaVersion;
    std::vector<std::int64_t> data;
    WalkParams parameters;
    std::string timestamp;
    std::optional<std::string> revision;
    bool dirty = false;
    EnvFingerprint system;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// UTC ISO-8601 with microseconds, e.g. 2017-08-28T14:02:11.000000Z.
inline std::string format_utc_timestamp(std::chrono::system_clock::time_point tp) {
    using namespace std::chrono;
    const auto us = duration_cast<microseconds>(tp.time_since_epoch());
    auto secs = duration_cast<seconds>(us);
    auto frac = us - secs;
    if (frac.count() < 0) {
        secs -= seconds(1);
        frac += seconds(1);
    }
    const std::time_t t = static_cast<std::time_t>(secs.count());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%06lldZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec,
                  static_cast<long long>(frac.count()));
    return buf;
}

inline ResultRecord build_record(const Walk& walk, const WalkParams& params,
                                 const EnvFingerprint& env, const VcsState& vcs,
                                 std::chrono::system_clock::time_point now) {
    ResultRecord rec;
    rec.schema_version = kRecordSchemaVersion;
    rec.data = walk.positions;
    rec.parameters = params;
    rec.timestamp = format_utc_timestamp(now);
    rec.revision = vcs.revision;
    rec.dirty = vcs.dirty;
    rec.system = env;
    return rec;
}

inline nlohmann::json env_to_json(const EnvFingerprint& env) {
    return {{"architecture", env.architecture}, {"artifact_name", env.artifact_name},
            {"artifact_version", env.artifact_version}, {"os_name", env.os_name},
            {"os_version", env.os_version}, {"toolchain", env.toolchain}};
}

inline nlohmann::json record_to_json(const ResultRecord& rec) {
    const auto& p = rec.parameters;
    nlohmann::json j;
    j["schema_version"] = rec.schema_version;
    j["data"] = rec.data;
    j["parameters"] = {{"count", p.count},
                       {"model", to_string(p.model)},
                       {"seed_scheme", to_string(p.seed.scheme)},
                       {"seed_value", p.seed.value.to_decimal()},
                       {"step", p.step},
                       {"x0", p.x0}};
    j["timestamp"] = rec.timestamp;
    j["revision"] = rec.revision ? nlohmann::json(*rec.revision) : nlohmann::json(nullptr);
    j["dirty"] = rec.dirty;
    j["system"] = env_to_json(rec.system);
    return j;
}

/// Compact form of any JSON value: sorted keys, no whitespace, UTF-8.
inline std::string canonical_dump(const nlohmann::json& j) {
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

/// Canonical text of a record, terminated by a single newline.
inline std::string serialize_record(const ResultRecord& rec) {
    return canonical_dump(record_to_json(rec)) + "\n";
}

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void bad_record(const std::string& what) {
    throw RecordFormatError("result record: " + what);
}

inline const nlohmann::json& member(const nlohmann::json& obj, const char* key,
                                    const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        bad_record("missing field '" + where + key + "'");
    }
    return *it;
}

inline std::int64_t as_int(const nlohmann::json& v, const std::string& field) {
    if (v.is_number_unsigned()) {
        if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            bad_record("field '" + field + "' out of int64 range");
        }
        return static_cast<std::int64_t>(v.get<std::uint64_t>());
    }
    if (!v.is_number_integer()) {
        bad_record("field '" + field + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

inline std::string as_string(const nlohmann::json& v, const std::string& field) {
    if (!v.is_string()) {
        bad_record("field '" + field + "' must be a string");
    }
    return v.get<std::string>();
}

inline void reject_unknown(const nlohmann::json& obj, std::initializer_list<std::string_view> keys,
                           const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
            bad_record("unknown field '" + where + it.key() + "'");
        }
    }
}

}  // namespace detail

inline EnvFingerprint env_from_json(const nlohmann::json& j, const std::string& where = "system.") {
    using detail::as_string;
    using detail::member;
    if (!j.is_object()) {
        detail::bad_record("'" + where.substr(0, where.size() - 1) + "' must be an object");
    }
    detail::reject_unknown(j, {"architecture", "artifact_name", "artifact_version", "os_name",
                               "os_version", "toolchain"},
                           where);
    EnvFingerprint env;
    env.architecture = as_string(member(j, "architecture", where), where + "architecture");
    env.artifact_name = as_string(member(j, "artifact_name", where), where + "artifact_name");
    env.artifact_version = as_string(member(j, "artifact_version", where), where + "artifact_version");
    env.os_name = as_string(member(j, "os_name", where), where + "os_name");
    env.os_version = as_string(member(j, "os_version", where), where + "os_version");
    env.toolchain = as_string(member(j, "toolchain", where), where + "toolchain");
    return env;
}

inline ResultRecord record_from_json(const nlohmann::json& j) {
    using detail::as_int;
    using detail::as_string;
    using detail::bad_record;
    using detail::member;

    if (!j.is_object()) {
        bad_record("top level must be an object");
    }
    const std::int64_t version = as_int(member(j, "schema_version", ""), "schema_version");
    if (version != kRecordSchemaVersion) {
        throw UnsupportedSchemaError("result record: unsupported schema_version " +
                                     std::to_string(version) + " (this build reads " +
                                     std::to_string(kRecordSchemaVersion) + ")");
    }
    detail::reject_unknown(j, {"data", "dirty", "parameters", "revision", "schema_version", "system",
                               "timestamp"},
                           "");

    ResultRecord rec;
    rec.schema_version = version;

    const auto& data = member(j, "data", "");
    if (!data.is_array()) {
        bad_record("field 'data' must be an array");
    }
    rec.data.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        rec.data.push_back(as_int(data[i], "data[" + std::to_string(i) + "]"));
    }

    const auto& p = member(j, "parameters", "");
    if (!p.is_object()) {
        bad_record("field 'parameters' must be an object");
    }
    detail::reject_unknown(p, {"count", "model", "seed_scheme", "seed_value", "step", "x0"},
                           "parameters.");
    try {
        rec.parameters.count = as_int(member(p, "count", "parameters."), "parameters.count");
        rec.parameters.x0 = as_int(member(p, "x0", "parameters."), "parameters.x0");
        rec.parameters.step = as_int(member(p, "step", "parameters."), "parameters.step");
        rec.parameters.model =
            parse_walk_model(as_string(member(p, "model", "parameters."), "parameters.model"));
        rec.parameters.seed.scheme = parse_seed_scheme(
            as_string(member(p, "seed_scheme", "parameters."), "parameters.seed_scheme"));
        rec.parameters.seed.value = SeedValue::from_decimal(
            as_string(member(p, "seed_value", "parameters."), "parameters.seed_value"));
        rec.parameters.validate();
    } catch (const DomainError& e) {
        bad_record(std::string("invalid parameters: ") + e.what());
    }

    rec.timestamp = as_string(member(j, "timestamp", ""), "timestamp");

    const auto& rev = member(j, "revision", "");
    if (!rev.is_null()) {
        std::string text = as_string(rev, "revision");
        if (!is_valid_revision(text)) {
            bad_record("field 'revision' must be 40 lowercase hex digits or null");
        }
        rec.revision = std::move(text);
    }

    const auto& dirty = member(j, "dirty", "");
    if (!dirty.is_boolean()) {
        bad_record("field 'dirty' must be a boolean");
    }
    rec.dirty = dirty.get<bool>();

    rec.system = env_from_json(member(j, "system", ""));
    return rec;
}

/// Parses record text. Syntax errors carry the line and column.
inline ResultRecord parse_record(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw RecordFormatError("result record: parse error at " + detail::line_col(text, at) + ": " +
                                e.what());
    }
    return record_from_json(j);
}

/// Writes `text` next to `out` and renames it into place, so readers never
/// observe a partial file.
inline void write_file_atomic(const std::filesystem::path& out, std::string_view text) {
    namespace fs = std::filesystem;
    const fs::path dir = out.has_parent_path() ? out.parent_path() : fs::path(".");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    }
    std::random_device rd;
    const fs::path tmp = dir / ("." + out.filename().string() + ".tmp-" + std::to_string(getpid()) +
                                "-" + std::to_string(rd()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
        f.flush();
        if (!f) {
            f.close();
            fs::remove(tmp, ec);
            throw IoError("write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, out, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move result into " + out.string());
    }
}

inline void write_record(const ResultRecord& rec, const std::filesystem::path& out) {
    write_file_atomic(out, serialize_record(rec));
}

inline ResultRecord read_record(const std::filesystem::path& in) {
    std::ifstream f(in, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + in.string());
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad()) {
        throw IoError("read failed: " + in.string());
    }
    return parse_record(buf.str());
}

}  // namespace r5
