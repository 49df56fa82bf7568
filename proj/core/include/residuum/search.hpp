#pragma once

// Exhaustive search for 3x3 magic squares of distinct squares with a given
// center e^2.
//
// The magic total is 3e^2, so each of the four lines through the center
// pairs two squares summing to 2e^2. The search enumerates those pairs for
// every center, assembles every placement of four distinct pairs on the
// four center lines, and tests the four outer lines. In primitive-only mode
// centers whose root has a prime factor = 3 mod 4 are skipped outright: such
// a prime would divide every entry. Non-primitive squares are still found,
// via their primitive reduction at a smaller center.

#include <cstdint>
#include <utility>
#include <vector>

#include "residuum/integer_squares.hpp"

namespace residuum {

inline constexpr std::uint64_t kMaxSearchCenter = 100'000'000;

/// Unordered pairs (x^2, y^2), x < y, x != e, with x^2 + y^2 = 2e^2.
/// Ascending in x.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_decompositions(std::uint64_t e);

/// True iff e has a prime factor = 3 mod 4.
bool has_inadmissible_factor(std::uint64_t e);

/// Lexicographically smallest image of g under the eight grid symmetries.
IntGrid canonical_form(const IntGrid& g);

struct SearchOptions {
  bool primitive_only = true;
  /// Grids with at least this many (but not all) lines summing to 3e^2 are
  /// near misses. Values above 7 disable near-miss reporting.
  int near_miss_threshold = 7;
  unsigned workers = 1;
};

struct SearchReport {
  std::uint64_t e_min = 0;
  std::uint64_t e_max = 0;
  bool primitive_only = true;
  int near_miss_threshold = 7;
  std::uint64_t pruned_centers = 0;
  std::uint64_t centers_with_four_pairs = 0;
  std::uint64_t candidates_tested = 0;
  /// Canonical forms, ascending by center then cells.
  std::vector<IntGrid> hits;
  std::vector<IntGrid> near_misses;
};

/// Throws BadRange unless 1 <= e_min <= e_max <= kMaxSearchCenter. Output
/// is identical for every worker count.
SearchReport search_msos(std::uint64_t e_min, std::uint64_t e_max,
                         const SearchOptions& options = {});

}  // namespace residuum
