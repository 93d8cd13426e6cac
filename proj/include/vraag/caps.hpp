#pragma once

#include <cstddef>

namespace vraag {

// Enumeration and search bounds. A truncated enumeration never produces a
// wrong "fail"; it only downgrades a dependent "pass" to Unknown.
struct Caps {
  std::size_t cycle_max_len = 20;      // vertices per 2-component cycle
  std::size_t cycle_max_count = 10000; // cycles per component pair
  std::size_t kernel_depth = 10;       // letters in kernel-search words
  std::size_t cell_cap = 50000;        // completion cells (vertices+edges+squares)
};

}  // namespace vraag
