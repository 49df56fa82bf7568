#include "residuum/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <string>
#include <mutex>
#include <thread>

#include "residuum/error.hpp"

namespace residuum {
namespace {

// Index maps new[k] = old[map[k]] for the eight symmetries of the square.
constexpr std::array<std::array<std::size_t, 9>, 8> kSymmetries{{
    {0, 1, 2, 3, 4, 5, 6, 7, 8},  // identity
    {6, 3, 0, 7, 4, 1, 8, 5, 2},  // rotate 90
    {8, 7, 6, 5, 4, 3, 2, 1, 0},  // rotate 180
    {2, 5, 8, 1, 4, 7, 0, 3, 6},  // rotate 270
    {2, 1, 0, 5, 4, 3, 8, 7, 6},  // mirror left-right
    {6, 7, 8, 3, 4, 5, 0, 1, 2},  // mirror top-bottom
    {0, 3, 6, 1, 4, 7, 2, 5, 8},  // transpose
    {8, 5, 2, 7, 4, 1, 6, 3, 0},  // anti-transpose
}};

// Cell pairs of the four lines through the center: diagonal, column,
// anti-diagonal, row.
constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kCenterLines{{
    {0, 8}, {1, 7}, {2, 6}, {3, 5},
}};

struct CenterResult {
  bool pruned = false;
  bool four_pairs = false;
  std::uint64_t tested = 0;
  std::vector<IntGrid> hits;
  std::vector<IntGrid> near_misses;
};

CenterResult search_center(std::uint64_t e, const SearchOptions& options) {
  CenterResult out;
  if (options.primitive_only && has_inadmissible_factor(e)) {
    out.pruned = true;
    return out;
  }
  const auto pairs = pair_decompositions(e);
  if (pairs.size() < 4) return out;
  out.four_pairs = true;

  const std::uint64_t e2 = e * e;
  const std::uint64_t total = 3 * e2;
  const std::size_t n = pairs.size();

  std::array<std::size_t, 4> chosen{};
  for (chosen[0] = 0; chosen[0] < n; ++chosen[0]) {
    for (chosen[1] = chosen[0] + 1; chosen[1] < n; ++chosen[1]) {
      for (chosen[2] = chosen[1] + 1; chosen[2] < n; ++chosen[2]) {
        for (chosen[3] = chosen[2] + 1; chosen[3] < n; ++chosen[3]) {
          std::array<std::size_t, 4> order = chosen;
          do {
            for (unsigned flips = 0; flips < 16; ++flips) {
              IntGrid g;
              g.cells[4] = e2;
              for (std::size_t line = 0; line < 4; ++line) {
                auto [lo, hi] = pairs[order[line]];
                if (flips & (1u << line)) std::swap(lo, hi);
                g.cells[kCenterLines[line].first] = lo;
                g.cells[kCenterLines[line].second] = hi;
              }
              if (canonical_form(g) != g) continue;
              ++out.tested;

              const int correct = count_lines_with_sum(g, total);
              if (correct == 8) {
                if (is_square_entried(g) && is_distinct(g)) out.hits.push_back(g);
              } else if (correct >= options.near_miss_threshold && is_distinct(g)) {
                out.near_misses.push_back(g);
              }
            }
          } while (std::next_permutation(order.begin(), order.end()));
        }
      }
    }
  }
  std::sort(out.hits.begin(), out.hits.end());
  std::sort(out.near_misses.begin(), out.near_misses.end());
  return out;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_decompositions(std::uint64_t e) {
  if (e < 1) throw Error(Errc::bad_parameters, "center root must be positive");
  if (e > kMaxSearchCenter) {
    throw Error(Errc::out_of_range, "center root " + std::to_string(e) + " too large");
  }
  const std::uint64_t target = 2 * e * e;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  // x < e < y for every pair with x != y.
  for (std::uint64_t x = 0; x < e; ++x) {
    const std::uint64_t x2 = x * x;
    if (auto y = exact_sqrt(target - x2)) out.emplace_back(x2, *y * *y);
  }
  return out;
}

bool has_inadmissible_factor(std::uint64_t e) {
  for (const auto& [q, k] : factorize(e)) {
    if (q % 4 == 3) return true;
  }
  return false;
}

IntGrid canonical_form(const IntGrid& g) {
  IntGrid best = g;
  for (const auto& map : kSymmetries) {
    IntGrid image;
    for (std::size_t k = 0; k < 9; ++k) image.cells[k] = g.cells[map[k]];
    if (image < best) best = image;
  }
  return best;
}

SearchReport search_msos(std::uint64_t e_min, std::uint64_t e_max,
                         const SearchOptions& options) {
  if (e_min < 1 || e_min > e_max || e_max > kMaxSearchCenter) {
    throw Error(Errc::bad_range, "invalid center range [" + std::to_string(e_min) +
                                     ", " + std::to_string(e_max) + "]");
  }

  const std::uint64_t count = e_max - e_min + 1;
  std::vector<CenterResult> results(count);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> failures;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::uint64_t k = next++; k < count; k = next++) {
      try {
        results[k] = search_center(e_min + k, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        failures.push_back(std::current_exception());
        return;
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.workers, 1, count));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (!failures.empty()) std::rethrow_exception(failures.front());

  SearchReport report;
  report.e_min = e_min;
  report.e_max = e_max;
  report.primitive_only = options.primitive_only;
  report.near_miss_threshold = options.near_miss_threshold;
  for (auto& r : results) {
    report.pruned_centers += r.pruned;
    report.centers_with_four_pairs += r.four_pairs;
    report.candidates_tested += r.tested;
    report.hits.insert(report.hits.end(), r.hits.begin(), r.hits.end());
    report.near_misses.insert(report.near_misses.end(), r.near_misses.begin(),
                              r.near_misses.end());
  }
  return report;
}

}  // namespace residuum
