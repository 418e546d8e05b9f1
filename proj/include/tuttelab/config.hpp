#pragma once

#include <cstdint>
#include <stdexcept>

namespace tuttelab {

// Thrown when an exhaustive enumeration would exceed the point budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace config {

// Cap on q^m for exhaustive counts. Default 2e9.
uint64_t point_budget();
void set_point_budget(uint64_t);

// Worker count: set_threads() wins, then TUTTELAB_THREADS, then hardware.
int threads();
void set_threads(int);

// Largest admissible field size p^r.
uint64_t field_size_limit();

// tutte_subset enumerates 2^m subsets; refuse beyond this edge count.
int subset_edge_cap();

}  // namespace config
}  // namespace tuttelab
