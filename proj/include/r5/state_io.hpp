#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "r5/errors.hpp"
#include "r5/mt19937.hpp"

namespace r5 {

// Text interchange form of an MtState:
//
//   mt19937-state 1
//   cursor <0..624>
//   <word 0>
//   ...
//   <word 623>
//
// Words are unsigned decimal, one per line, '\n' line endings.

inline void write_state_text(std::ostream& out, const MtState& state) {
    out << "mt19937-state 1\n";
    out << "cursor " << state.cursor << '\n';
    for (std::uint32_t w : state.words) {
        out << w << '\n';
    }
}

inline MtState read_state_text(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> const std::string& {
        if (!std::getline(in, line)) {
            throw StateFormatError("state text: unexpected end of input after line " +
                                   std::to_string(lineno));
        }
        ++lineno;
        return line;
    };
    auto parse_u64 = [&](std::string_view text) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
            throw StateFormatError("state text: line " + std::to_string(lineno) +
                                   ": expected an unsigned integer, got '" + std::string(text) + "'");
        }
        return v;
    };

    if (next_line() != "mt19937-state 1") {
        throw StateFormatError("state text: line 1: bad header '" + line + "'");
    }
    const std::string_view prefix = "cursor ";
    if (next_line().rfind(prefix, 0) != 0) {
        throw StateFormatError("state text: line 2: expected 'cursor <n>'");
    }
    const std::uint64_t cursor = parse_u64(std::string_view(line).substr(prefix.size()));

    std::vector<std::uint64_t> words;
    words.reserve(kMtWords);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        words.push_back(parse_u64(line));
    }
    if (cursor > kMtWords) {
        throw StateFormatError("state text: cursor " + std::to_string(cursor) + " outside [0, 624]");
    }
    Mt19937 probe{MtState{}};
    probe.import_state(words, static_cast<std::int64_t>(cursor));
    return probe.export_state();
}

}  // namespace r5
