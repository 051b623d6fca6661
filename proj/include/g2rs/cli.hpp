#pragma once

#include <iosfwd>

namespace g2rs {

/// Subcommands verify-group, unfold-cosets, verify-lemmas, closed-form, oracle, all.
/// Returns 0 when every executed check passes, 1 on a failed check, 2 on a usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace g2rs
