#pragma once

// Magic-square residue classes over F_p with zero center: construction,
// classification, symmetry orbits, counting, and brute-force enumeration.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "residuum/fp_core.hpp"

namespace residuum {

/// Row-major cells a b c / d e f / g h i.
using Cells = std::array<std::uint64_t, 9>;

namespace cell {
inline constexpr std::size_t a = 0, b = 1, c = 2;
inline constexpr std::size_t d = 3, e = 4, f = 5;
inline constexpr std::size_t g = 6, h = 7, i = 8;
inline constexpr std::array<std::size_t, 4> corners{a, c, g, i};
inline constexpr std::array<std::size_t, 4> midedges{b, d, f, h};
}  // namespace cell

/// The eight lines of a 3x3 grid: rows, columns, main diagonal, anti-diagonal.
inline constexpr std::array<std::array<std::size_t, 3>, 8> kLines{{
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
    {0, 4, 8}, {2, 4, 6},
}};

/// 3x3 grid of squares of F_p. Stores cell values rather than roots, so
/// equality is value-wise and independent of any choice of square root.
class ResidueGrid {
 public:
  /// Reduces every cell mod p; throws NotASquare if a cell is not a square.
  ResidueGrid(ContextPtr ctx, const Cells& cells);

  const Cells& cells() const noexcept { return cells_; }
  std::uint64_t at(std::size_t row, std::size_t col) const noexcept {
    return cells_[3 * row + col];
  }
  std::uint64_t center() const noexcept { return cells_[cell::e]; }
  bool all_zero() const noexcept;

  const ContextPtr& context() const noexcept { return ctx_; }
  std::uint64_t modulus() const noexcept { return ctx_->p(); }

  friend bool operator==(const ResidueGrid& x, const ResidueGrid& y) noexcept {
    return x.modulus() == y.modulus() && x.cells_ == y.cells_;
  }
  friend std::strong_ordering operator<=>(const ResidueGrid& x,
                                          const ResidueGrid& y) noexcept {
    if (auto c = x.modulus() <=> y.modulus(); c != 0) return c;
    return x.cells_ <=> y.cells_;
  }

 private:
  ContextPtr ctx_;
  Cells cells_;
};

/// (alpha, beta, gamma) with alpha^2 - beta^2 = beta^2 - gamma^2 = 1, all
/// nonzero. The constructor enforces this (NotAMember on violation).
class UnitTriple {
 public:
  UnitTriple(FieldElement alpha, FieldElement beta, FieldElement gamma);

  const FieldElement& alpha() const noexcept { return alpha_; }
  const FieldElement& beta() const noexcept { return beta_; }
  const FieldElement& gamma() const noexcept { return gamma_; }
  const ContextPtr& context() const noexcept { return alpha_.context(); }

 private:
  FieldElement alpha_, beta_, gamma_;
};

enum class ClassKind { trivial_corner, trivial_midedge, nontrivial, all_zero };

std::string_view to_string(ClassKind kind) noexcept;

/// Common line sum when all eight lines agree; nullopt otherwise.
std::optional<std::uint64_t> is_magic_class(const ResidueGrid& g);

/// Throws NotMagic or NonzeroCenter. Corner zeros take precedence over
/// mid-edge zeros when both occur.
ClassKind classify(const ResidueGrid& g);

/// [[0,1,-1],[-1,0,1],[1,-1,0]]. Needs p = 1 mod 4 (BadPrimeForm).
ResidueGrid gen_trivial_corner(const ContextPtr& ctx);

/// [[1,0,-1],[-2,0,2],[1,0,-1]]. Needs p = 1 mod 8 (BadPrimeForm).
ResidueGrid gen_trivial_midedge(const ContextPtr& ctx);

/// C_p: residues n with n, n+1, n+2 all nonzero squares. Ascending.
std::vector<std::uint64_t> consecutive_triples(const PrimeContext& ctx);

/// Roots of n+2, n+1, n (canonical smaller roots). Throws NotAMember.
UnitTriple triple_from_member(const ContextPtr& ctx, std::uint64_t n);

/// Grid (w*beta)^2 gamma^2 1 / alpha^2 0 (w*alpha)^2 / w^2 (w*gamma)^2 beta^2.
ResidueGrid gen_nontrivial(const UnitTriple& t);

// Grid symmetries.
ResidueGrid rotate90(const ResidueGrid& g);  // clockwise
ResidueGrid rotate180(const ResidueGrid& g);
ResidueGrid reflect_anti_diagonal(const ResidueGrid& g);  // about c-e-g
ResidueGrid reflect_horizontal(const ResidueGrid& g);     // swaps top and bottom rows
ResidueGrid scale(const ResidueGrid& g, std::uint64_t s);

/// All grids reachable by the four rotations composed with scaling by
/// every nonzero square. Reflections are deliberately excluded.
std::set<ResidueGrid> orbit(const ResidueGrid& g);

/// (p-1) * (|C_p| + 4) for p = 1 mod 8, (p-1) * (|C_p| + 2) for p = 5 mod 8.
std::uint64_t count_bound(const PrimeContext& ctx);

struct EnumerateOptions {
  std::uint64_t max_p = 100;
  /// Also run the naive 8-cell enumeration when p <= this and compare.
  std::uint64_t naive_cross_check_p = 13;
  unsigned workers = 1;
};

/// Every nonzero magic grid of squares with zero center, by brute force
/// over the four free cells a, b, c, d. Throws BadPrimeForm unless
/// p = 1 mod 4 and BoundExceeded when p > options.max_p.
std::set<ResidueGrid> enumerate_all(const ContextPtr& ctx,
                                    const EnumerateOptions& options = {});

/// Fully naive oracle: all eight non-center cells range over the squares
/// and all eight line sums must agree. Exponential; p <= max_p enforced.
std::set<ResidueGrid> enumerate_naive(const ContextPtr& ctx,
                                      std::uint64_t max_p = 13);

/// Union of the orbits of the canonical trivial grids and of one
/// nontrivial grid per member of C_p.
std::set<ResidueGrid> generated_classes(const ContextPtr& ctx);

}  // namespace residuum
