#pragma once

namespace degen::cli {

/// Full command-line entry point (argv style, argv[0] = program name).
/// Returns the process exit code: 0 success, 1 usage or input parse failure,
/// 2 violated operation precondition, 3 failed verification claim.
int run(int argc, const char* const* argv);

}  // namespace degen::cli
