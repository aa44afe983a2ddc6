#pragma once

#include <iosfwd>

namespace treegray {

/// Entry point of the `treegray` tool. Subcommands: gen, count, verify,
/// bench, graycode. Returns 0 on success, 1 when a verification fails and 2
/// for usage errors (bad flags, malformed graphs, pivot mode on a
/// non-complete graph).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace treegray
