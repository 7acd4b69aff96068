#ifndef EDGEKEEP_PARALLEL_HPP
#define EDGEKEEP_PARALLEL_HPP

#include <functional>

namespace edgekeep {

/// Worker count: EDGEKEEP_THREADS when set to a positive integer, else hardware concurrency.
int worker_count() noexcept;

/// Runs body(row) for every row in [0, rows), split into contiguous blocks across workers.
/// body must only write state owned by its row.
void parallel_rows(int rows, const std::function<void(int)>& body);

}  // namespace edgekeep

#endif  // EDGEKEEP_PARALLEL_HPP
