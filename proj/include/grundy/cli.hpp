#pragma once

// Command-line front end. run_cli parses argv and dispatches to the library;
// it is exposed here so tests can drive the full command surface in-process.
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.

namespace grundy {

int run_cli(int argc, const char* const* argv);

}  // namespace grundy
