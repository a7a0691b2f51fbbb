#pragma once

// Deterministic clique enumeration on small graphs with an optional node
// budget and a pool of worker threads over top-level branches.

#include <vector>

namespace siltsms {

enum class CliqueMode { exact_size, maximal };

struct SearchOptions {
  int workers = 1;
  /// Maximum number of search nodes; 0 means unlimited.
  long budget = 0;
};

/// Cliques as ascending vertex lists, sorted lexicographically. `adjacent`
/// must be symmetric; the diagonal is ignored. Throws BudgetExceeded.
std::vector<std::vector<int>> find_cliques(const std::vector<std::vector<bool>>& adjacent, CliqueMode mode, int size,
                                           const SearchOptions& options);

/// Worker count from SILTSMS_WORKERS, else 1.
int default_workers();

}  // namespace siltsms
