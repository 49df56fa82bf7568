#pragma once

// Integer-side checks on 3x3 grids: magic sums, square entries,
// primitivity, admissible prime divisors of the center root, reduction to
// residue classes, and the four parity patterns of an even-centered square.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "residuum/fp_core.hpp"
#include "residuum/residue_classes.hpp"

namespace residuum {

/// Row-major a^2 .. i^2. Cells are plain nonnegative integers; squareness,
/// magic-ness and distinctness are properties checked on demand.
struct IntGrid {
  std::array<std::uint64_t, 9> cells{};

  std::uint64_t center() const noexcept { return cells[4]; }
  friend auto operator<=>(const IntGrid&, const IntGrid&) = default;
};

/// Largest cell value accepted by the line-sum checks (three cells must sum
/// without overflow).
inline constexpr std::uint64_t kMaxCell = std::uint64_t{1} << 62;

/// Common line sum T when all eight lines agree.
std::optional<std::uint64_t> is_magic(const IntGrid& g);

/// Number of the eight lines summing to `target`.
int count_lines_with_sum(const IntGrid& g, std::uint64_t target);

/// True iff T = 3 * center. Throws NotMagic.
bool check_total_is_three_centers(const IntGrid& g);

bool is_square_entried(const IntGrid& g);
bool is_distinct(const IntGrid& g);

/// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) noexcept;

/// gcd of all nine cells.
std::uint64_t cell_gcd(const IntGrid& g) noexcept;

/// Divides out the cell gcd. Throws AllZero, NotSquareEntried.
IntGrid reduce_primitive(const IntGrid& g);

/// Trial-division factorization; n <= kMaxFactorInput (OutOfRange).
inline constexpr std::uint64_t kMaxFactorInput = 1'000'000'000'000ULL;
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

struct PrimeVerdict {
  std::uint64_t prime = 0;
  bool admissible = false;  // p = 2 or p = 1 mod 4
};

struct CenterAdmissibility {
  std::vector<PrimeVerdict> factors;
  /// e <= 2 cannot be the center root of a square with distinct entries.
  bool degenerate_center = false;

  bool all_admissible() const noexcept;
};

/// Verdict for each distinct prime factor of the center root e, ascending.
CenterAdmissibility admissible_center_check(std::uint64_t e);

/// Cell-wise reduction mod p. Throws NotSquareEntried.
ResidueGrid residue_class_of(const IntGrid& g, const ContextPtr& ctx);

struct Mod2Class {
  std::array<std::uint8_t, 9> bits{};
  friend auto operator<=>(const Mod2Class&, const Mod2Class&) = default;
};

/// The four parity patterns of a magic square with even center, in order:
/// all even; [[1,1,0],[1,0,1],[0,1,1]]; [[1,0,1],[0,0,0],[1,0,1]];
/// [[0,1,1],[1,0,1],[1,1,0]].
const std::array<Mod2Class, 4>& mod2_patterns() noexcept;

Mod2Class operator^(const Mod2Class& x, const Mod2Class& y) noexcept;

/// Throws OddCenter; UnexpectedPattern if the reduction is not one of the
/// four patterns (only possible for non-magic input).
Mod2Class mod2_classify(const IntGrid& g);

/// table[i][j] = patterns[i] ^ patterns[j].
std::array<std::array<Mod2Class, 4>, 4> klein_group_table();

/// True iff the central row, central column or a main diagonal is all even.
bool has_even_center_line(const Mod2Class& m) noexcept;

}  // namespace residuum
