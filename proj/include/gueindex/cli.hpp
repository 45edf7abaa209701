#pragma once

namespace gueindex {

// Entry point for the command-line tool. Exit codes: 0 success,
// 1 verification failure, 2 usage error.
int cli_main(int argc, const char* const* argv);

} // namespace gueindex
