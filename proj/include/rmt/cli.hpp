#pragma once

namespace rmt {

// Full command-line entry point. Exit codes: 0 success, 2 argument error,
// 3 data error, 4 numerical failure.
int cli_run(int argc, const char* const* argv);

}  // namespace rmt
