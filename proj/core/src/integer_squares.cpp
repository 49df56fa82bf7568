#include "residuum/integer_squares.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "residuum/error.hpp"

namespace residuum {

std::optional<std::uint64_t> is_magic(const IntGrid& g) {
  for (auto v : g.cells) {
    if (v > kMaxCell / 3) {
      throw Error(Errc::out_of_range, "cell " + std::to_string(v) + " too large");
    }
  }
  const auto& v = g.cells;
  const std::uint64_t total = v[0] + v[1] + v[2];
  for (const auto& line : kLines) {
    if (v[line[0]] + v[line[1]] + v[line[2]] != total) return std::nullopt;
  }
  return total;
}

int count_lines_with_sum(const IntGrid& g, std::uint64_t target) {
  const auto& v = g.cells;
  int n = 0;
  for (const auto& line : kLines) {
    if (v[line[0]] + v[line[1]] + v[line[2]] == target) ++n;
  }
  return n;
}

bool check_total_is_three_centers(const IntGrid& g) {
  const auto total = is_magic(g);
  if (!total) throw Error(Errc::not_magic, "grid is not magic");
  return *total == 3 * g.center();
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;  // r*r > n
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) noexcept {
  const std::uint64_t r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_square_entried(const IntGrid& g) {
  return std::all_of(g.cells.begin(), g.cells.end(),
                     [](std::uint64_t v) { return exact_sqrt(v).has_value(); });
}

bool is_distinct(const IntGrid& g) {
  auto sorted = g.cells;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::uint64_t cell_gcd(const IntGrid& g) noexcept {
  std::uint64_t d = 0;
  for (auto v : g.cells) d = std::gcd(d, v);
  return d;
}

IntGrid reduce_primitive(const IntGrid& g) {
  if (!is_square_entried(g)) {
    throw Error(Errc::not_square_entried, "grid has a non-square cell");
  }
  const std::uint64_t d = cell_gcd(g);
  if (d == 0) throw Error(Errc::all_zero, "cannot reduce the all-zero grid");
  if (!exact_sqrt(d)) {
    throw Error(Errc::internal, "gcd " + std::to_string(d) + " of squares is not a square");
  }
  IntGrid out = g;
  for (auto& v : out.cells) v /= d;
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw Error(Errc::bad_parameters, "cannot factor 0");
  if (n > kMaxFactorInput) {
    throw Error(Errc::out_of_range, std::to_string(n) + " exceeds factoring bound");
  }
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    if (k > 0) out.emplace_back(q, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool CenterAdmissibility::all_admissible() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimeVerdict& v) { return v.admissible; });
}

CenterAdmissibility admissible_center_check(std::uint64_t e) {
  if (e < 1) throw Error(Errc::bad_parameters, "center root must be positive");
  CenterAdmissibility out;
  for (const auto& [q, k] : factorize(e)) {
    out.factors.push_back({q, q == 2 || q % 4 == 1});
  }
  out.degenerate_center = e <= 2;
  return out;
}

ResidueGrid residue_class_of(const IntGrid& g, const ContextPtr& ctx) {
  if (!is_square_entried(g)) {
    throw Error(Errc::not_square_entried, "grid has a non-square cell");
  }
  Cells cells{};
  for (std::size_t k = 0; k < 9; ++k) cells[k] = g.cells[k] % ctx->p();
  return ResidueGrid(ctx, cells);
}

const std::array<Mod2Class, 4>& mod2_patterns() noexcept {
  static const std::array<Mod2Class, 4> patterns{{
      {{0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {{1, 1, 0, 1, 0, 1, 0, 1, 1}},
      {{1, 0, 1, 0, 0, 0, 1, 0, 1}},
      {{0, 1, 1, 1, 0, 1, 1, 1, 0}},
  }};
  return patterns;
}

Mod2Class operator^(const Mod2Class& x, const Mod2Class& y) noexcept {
  Mod2Class out;
  for (std::size_t k = 0; k < 9; ++k) out.bits[k] = x.bits[k] ^ y.bits[k];
  return out;
}

Mod2Class mod2_classify(const IntGrid& g) {
  if (g.center() % 2 != 0) throw Error(Errc::odd_center, "center is odd");
  Mod2Class m;
  for (std::size_t k = 0; k < 9; ++k) m.bits[k] = static_cast<std::uint8_t>(g.cells[k] % 2);
  const auto& patterns = mod2_patterns();
  if (std::find(patterns.begin(), patterns.end(), m) == patterns.end()) {
    throw Error(Errc::unexpected_pattern, "parity pattern is not a magic residue class");
  }
  return m;
}

std::array<std::array<Mod2Class, 4>, 4> klein_group_table() {
  const auto& patterns = mod2_patterns();
  std::array<std::array<Mod2Class, 4>, 4> table{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) table[i][j] = patterns[i] ^ patterns[j];
  }
  return table;
}

bool has_even_center_line(const Mod2Class& m) noexcept {
  // central row, central column, main diagonal, anti-diagonal
  for (std::size_t li : {1u, 4u, 6u, 7u}) {
    const auto& line = kLines[li];
    if (m.bits[line[0]] == 0 && m.bits[line[1]] == 0 && m.bits[line[2]] == 0) {
      return true;
    }
  }
  return false;
}

}  // namespace residuum
