#ifndef COREFKIT_CLI_H_
#define COREFKIT_CLI_H_

namespace corefkit {

// Exit codes: 0 success, 1 usage error, 2 data error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the corefkit executable. Reports go to --output or stdout,
// diagnostics to stderr.
int RunCli(int argc, const char *const *argv);

}  // namespace corefkit

#endif  // COREFKIT_CLI_H_
