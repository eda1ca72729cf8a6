#pragma once

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#ifndef R5_FIXTURE_DIR
#error "R5_FIXTURE_DIR must point at the committed fixtures"
#endif

namespace r5::testing {

inline std::filesystem::path fixture_dir() { return R5_FIXTURE_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    f << text;
}

inline nlohmann::json load_fixture(const std::string& name) {
    return nlohmann::json::parse(slurp(fixture_dir() / name));
}

/// IEEE-754 bit pattern (16 hex digits, big-endian order) to double.
inline double double_from_hex(const std::string& hex) {
    const std::uint64_t bits = std::stoull(hex, nullptr, 16);
    double d;
    std::memcpy(&d, &bits, sizeof d);
    return d;
}

inline std::uint64_t bits_of(double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    return bits;
}

/// Seeds for which committed array-scheme fixtures exist.
inline const std::vector<std::string>& oracle_a_seeds() {
    static const std::vector<std::string> seeds{"0", "1", "2", "42", "439", "12345",
                                                "18446744073709551617"};
    return seeds;
}

inline const std::vector<std::string>& oracle_b_seeds() {
    static const std::vector<std::string> seeds{"0", "1", "2", "42", "439", "12345"};
    return seeds;
}

/// Fresh directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("r5-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline int sh(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

inline std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

/// Git repository with one committed tracked file.
class TempRepo : public TempDir {
public:
    TempRepo() {
        const std::string g = "git -C " + quoted(path()) + " ";
        spit(path() / "tracked.txt", "original\n");
        if (sh(g + "init -q") != 0 || sh(g + "add tracked.txt") != 0 ||
            sh(g + "-c user.name=test -c user.email=test@example.com commit -q -m init") != 0) {
            throw std::runtime_error("cannot create test repository");
        }
    }

    void make_dirty() { spit(path() / "tracked.txt", "modified\n"); }

    std::string head() const {
        const auto tmp = path() / ".git" / "head.out";
        sh("git -C " + quoted(path()) + " rev-parse HEAD > " + quoted(tmp));
        std::string s = slurp(tmp);
        std::filesystem::remove(tmp);
        while (!s.empty() && s.back() == '\n') s.pop_back();
        return s;
    }
};

}  // namespace r5::testing
