#pragma once

#include <iosfwd>

namespace sidon {

/// Entry point of the `sidon` command-line tool. Output goes to `out`,
/// diagnostics to `err`; interactive game input is read from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sidon
