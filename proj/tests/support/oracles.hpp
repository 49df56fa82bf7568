#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the library's arithmetic, so agreement is meaningful.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace residuum::oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

/// {n^2 mod p : 1 <= n <= p-1}, ascending.
inline std::vector<std::uint64_t> squares_table(std::uint64_t p) {
  std::set<std::uint64_t> s;
  for (std::uint64_t n = 1; n < p; ++n) s.insert(n * n % p);
  return {s.begin(), s.end()};
}

/// Every r in [0, p) with r^2 = a.
inline std::vector<std::uint64_t> all_roots(std::uint64_t a, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (r * r % p == a % p) out.push_back(r);
  }
  return out;
}

inline std::optional<std::uint64_t> inverse_by_scan(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return std::nullopt;
}

inline bool is_square_int(std::uint64_t n) {
  std::uint64_t lo = 0, hi = std::uint64_t{1} << 32;
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) lo = mid; else hi = mid;
  }
  return lo * lo == n;
}

using Grid = std::array<std::uint64_t, 9>;

/// Magic squares of distinct squares with center e^2 and every line summing
/// to the top-row total. Free cells a, b, c, d range over squares; the other
/// four are read off from column 1, the main diagonal, row 2 and column 2.
/// The total is whatever the top row sums to, never assumed to be 3e^2.
inline std::set<Grid> naive_msos_at_center(std::uint64_t e) {
  const std::uint64_t e2 = e * e;
  std::vector<std::uint64_t> sq;
  for (std::uint64_t r = 0; r * r <= 3 * e2; ++r) sq.push_back(r * r);
  // Derived cells are bounded by the largest possible total, 9e^2.
  std::vector<char> is_sq(9 * e2 + 1, 0);
  for (std::uint64_t r = 0; r * r <= 9 * e2; ++r) is_sq[r * r] = 1;
  auto square = [&](std::int64_t v) {
    return v >= 0 && static_cast<std::uint64_t>(v) < is_sq.size() && is_sq[v];
  };
  const std::array<std::array<int, 3>, 8> lines{{{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                                 {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                                 {0, 4, 8}, {2, 4, 6}}};

  std::set<Grid> out;
  for (auto a : sq) {
    for (auto b : sq) {
      for (auto c : sq) {
        const std::int64_t t = static_cast<std::int64_t>(a + b + c);
        const std::int64_t i = t - static_cast<std::int64_t>(a + e2);
        const std::int64_t h = t - static_cast<std::int64_t>(b + e2);
        if (!square(i) || !square(h)) continue;
        for (auto d : sq) {
          const std::int64_t g = t - static_cast<std::int64_t>(a + d);
          const std::int64_t f = t - static_cast<std::int64_t>(d + e2);
          if (!square(g) || !square(f)) continue;
          const Grid cells{a, b, c, d, e2, static_cast<std::uint64_t>(f),
                           static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(h),
                           static_cast<std::uint64_t>(i)};
          bool ok = true;
          for (const auto& l : lines) {
            ok = ok && static_cast<std::int64_t>(cells[l[0]] + cells[l[1]] + cells[l[2]]) == t;
          }
          Grid sorted = cells;
          std::sort(sorted.begin(), sorted.end());
          ok = ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
          if (ok) out.insert(cells);
        }
      }
    }
  }
  return out;
}

/// Grids with center e^2 whose four center lines sum to 3e^2, all nine cells
/// distinct squares, and at least `min_correct` of eight lines at 3e^2.
/// Brute force over the four cells a, b, c, d.
inline std::set<Grid> naive_center_line_grids(std::uint64_t e, int min_correct) {
  const std::uint64_t e2 = e * e;
  std::vector<std::uint64_t> sq;
  for (std::uint64_t r = 0; r * r <= 2 * e2; ++r) sq.push_back(r * r);
  auto partner_ok = [&](std::uint64_t v) { return is_square_int(2 * e2 - v); };

  std::set<Grid> out;
  for (auto a : sq) {
    if (!partner_ok(a)) continue;
    for (auto b : sq) {
      if (!partner_ok(b)) continue;
      for (auto c : sq) {
        if (!partner_ok(c)) continue;
        for (auto d : sq) {
          if (!partner_ok(d)) continue;
          const Grid cells{a, b, c, d, e2, 2 * e2 - d, 2 * e2 - c, 2 * e2 - b, 2 * e2 - a};
          Grid sorted = cells;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          const std::array<std::array<int, 3>, 8> lines{{{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                                         {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                                         {0, 4, 8}, {2, 4, 6}}};
          int correct = 0;
          for (const auto& l : lines) {
            correct += (cells[l[0]] + cells[l[1]] + cells[l[2]] == 3 * e2);
          }
          if (correct >= min_correct) out.insert(cells);
        }
      }
    }
  }
  return out;
}

/// Classical three-parameter magic square with center c.
inline Grid classical_magic(std::int64_t c, std::int64_t a, std::int64_t b) {
  const std::array<std::int64_t, 9> v{c - b,     c + a + b, c - a,
                                      c - a + b, c,         c + a - b,
                                      c + a,     c - a - b, c + b};
  Grid out{};
  for (std::size_t k = 0; k < 9; ++k) out[k] = static_cast<std::uint64_t>(v[k]);
  return out;
}

}  // namespace residuum::oracle
