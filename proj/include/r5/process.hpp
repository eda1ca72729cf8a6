#pragma once

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <string>
#include <vector>

#include "r5/errors.hpp"

namespace r5::detail {

struct ProcessResult {
    bool launched = false;  // false when the executable could not be started
    int exit_code = -1;
    std::string out;
};

/// Runs argv[0] from PATH with stdin and stderr on /dev/null, capturing stdout.
inline ProcessResult run_process(const std::vector<std::string>& argv) {
    ProcessResult result;
    int out_pipe[2];
    int err_pipe[2];
    if (pipe(out_pipe) != 0) {
        throw IoError("pipe failed");
    }
    if (pipe2(err_pipe, O_CLOEXEC) != 0) {
        close(out_pipe[0]);
        close(out_pipe[1]);
        throw IoError("pipe failed");
    }

    std::vector<char*> args;
    for (const auto& a : argv) {
        args.push_back(const_cast<char*>(a.c_str()));
    }
    args.push_back(nullptr);

    const pid_t pid = fork();
    if (pid < 0) {
        for (int fd : {out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]}) close(fd);
        throw IoError("fork failed");
    }
    if (pid == 0) {
        close(out_pipe[0]);
        close(err_pipe[0]);
        dup2(out_pipe[1], STDOUT_FILENO);
        const int devnull = open("/dev/null", O_RDWR);
        if (devnull >= 0) {
            dup2(devnull, STDIN_FILENO);
            dup2(devnull, STDERR_FILENO);
        }
        execvp(args[0], args.data());
        const int err = errno;
        [[maybe_unused]] auto n = write(err_pipe[1], &err, sizeof err);
        _exit(127);
    }

    close(out_pipe[1]);
    close(err_pipe[1]);
    char buf[4096];
    for (;;) {
        const ssize_t n = read(out_pipe[0], buf, sizeof buf);
        if (n > 0) {
            result.out.append(buf, static_cast<std::size_t>(n));
        } else if (n == 0 || errno != EINTR) {
            break;
        }
    }
    close(out_pipe[0]);
    int exec_errno = 0;
    const ssize_t got = read(err_pipe[0], &exec_errno, sizeof exec_errno);
    close(err_pipe[0]);

    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    result.launched = got <= 0;
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else {
        result.exit_code = 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
    }
    return result;
}

}  // namespace r5::detail
