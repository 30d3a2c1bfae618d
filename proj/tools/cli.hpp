#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypertile::cli {

/// Runs the hypertile command line with `args` (program name excluded).
/// Returns 0 on success, 1 for a negative answer under --strict and 2 for
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypertile::cli
