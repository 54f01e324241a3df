#pragma once

// Command-line surface: gen, bench, selftest, seed-info.
// Exit codes: 0 ok, 1 selftest failure, 2 usage error, 3 I/O error.

namespace bcn::cli {

int run(int argc, const char* const* argv);

}  // namespace bcn::cli
