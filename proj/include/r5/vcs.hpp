#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "r5/errors.hpp"
#include "r5/process.hpp"

namespace r5 {

inline bool is_valid_revision(std::string_view rev) {
    return rev.size() == 40 && std::all_of(rev.begin(), rev.end(), [](char c) {
               return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
           });
}

/// Commit identity of a working tree. revision is absent outside a
/// repository (and in a repository with no commits yet).
struct VcsState {
    std::optional<std::string> revision;
    bool dirty = false;

    friend bool operator==(const VcsState&, const VcsState&) = default;
};

/// Queries git for the working tree containing `workdir`.
///
/// dirty is true iff tracked files differ from HEAD; untracked files are
/// ignored. A repository without any commit reports dirty, since nothing
/// it contains is committed. Throws VcsUnavailableError when git cannot be
/// executed and IoError when workdir is not a directory.
inline VcsState capture_vcs(const std::filesystem::path& workdir, const std::string& git = "git") {
    std::error_code ec;
    if (!std::filesystem::is_directory(workdir, ec)) {
        throw IoError("not a directory: " + workdir.string());
    }
    const std::string dir = workdir.string();
    auto git_run = [&](std::initializer_list<std::string> args) {
        std::vector<std::string> argv{git, "-C", dir};
        argv.insert(argv.end(), args);
        auto r = detail::run_process(argv);
        if (!r.launched) {
            throw VcsUnavailableError("cannot execute '" + git + "'");
        }
        return r;
    };

    const auto inside = git_run({"rev-parse", "--is-inside-work-tree"});
    if (inside.exit_code != 0 || inside.out.rfind("true", 0) != 0) {
        return {};
    }

    VcsState state;
    auto head = git_run({"rev-parse", "--verify", "-q", "HEAD"});
    if (head.exit_code != 0) {
        state.dirty = true;
        return state;
    }
    const auto end = head.out.find_last_not_of(" \r\n");
    std::string rev = end == std::string::npos ? std::string() : head.out.substr(0, end + 1);
    if (!is_valid_revision(rev)) {
        throw VcsUnavailableError("unexpected revision format from git: '" + rev + "'");
    }
    state.revision = std::move(rev);

    // Stat-only changes (touch, checkout) would otherwise read as modifications.
    git_run({"update-index", "-q", "--refresh"});
    state.dirty = git_run({"diff-index", "--quiet", "HEAD", "--"}).exit_code != 0;
    return state;
}

}  // namespace r5
