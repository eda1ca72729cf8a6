#pragma once

#include <sys/utsname.h>

#include <string>

#ifndef R5_ARTIFACT_NAME
#define R5_ARTIFACT_NAME "r5walk"
#endif
#ifndef R5_ARTIFACT_VERSION
#define R5_ARTIFACT_VERSION "0.0.0-dev"
#endif

namespace r5 {

/// Where a result was computed. Every field is non-empty; anything the
/// system will not report becomes "unknown".
struct EnvFingerprint {
    std::string os_name;
    std::string os_version;
    std::string architecture;
    std::string artifact_name;
    std::string artifact_version;
    std::string toolchain;

    friend bool operator==(const EnvFingerprint&, const EnvFingerprint&) = default;
};

namespace detail {

inline std::string or_unknown(std::string value) {
    return value.empty() ? std::string("unknown") : value;
}

inline std::string toolchain_description() {
    std::string out;
#if defined(__clang__)
    out = "clang " __clang_version__;
#elif defined(__GNUC__)
    out = "gcc " __VERSION__;
#elif defined(_MSC_VER)
    out = "msvc " + std::to_string(_MSC_FULL_VER);
#endif
    if (!out.empty()) {
        out += "; C++ " + std::to_string(__cplusplus);
#if defined(_GLIBCXX_RELEASE)
        out += "; libstdc++ " + std::to_string(_GLIBCXX_RELEASE);
#elif defined(_LIBCPP_VERSION)
        out += "; libc++ " + std::to_string(_LIBCPP_VERSION);
#endif
#if defined(__x86_64__) || defined(__aarch64__) || defined(_WIN64)
        out += "; 64-bit";
#else
        out += "; 32-bit";
#endif
    }
    while (!out.empty() && out.back() == ' ') {
        out.pop_back();
    }
    return out;
}

}  // namespace detail

inline EnvFingerprint capture_env() {
    EnvFingerprint env;
    struct utsname info {};
    if (uname(&info) == 0) {
        env.os_name = info.sysname;
        env.os_version = info.release;
        env.architecture = info.machine;
    }
    env.os_name = detail::or_unknown(env.os_name);
    env.os_version = detail::or_unknown(env.os_version);
    env.architecture = detail::or_unknown(env.architecture);
    env.artifact_name = detail::or_unknown(R5_ARTIFACT_NAME);
    env.artifact_version = detail::or_unknown(R5_ARTIFACT_VERSION);
    env.toolchain = detail::or_unknown(detail::toolchain_description());
    return env;
}

}  // namespace r5
