#pragma once

// Arithmetic progressions of three integer squares (congrua) and their
// use as explicit witnesses that C_p is nonempty.
//
// A progression x^2 - y^2 = y^2 - z^2 = d descends to F_p as a unit triple
// (x/r, y/r, z/r) whenever p does not divide xyz and d = r^2 is a nonzero
// square mod p. Two progressions are built in:
//   (7, 5, 1; 24)    from (m, n) = (2, 1), works for p = 1, 5 mod 24, p != 5
//   (49, 41, 31; 720) from (m, n) = (5, 4), works for p = 1, 9 mod 20, p > 41

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "residuum/fp_core.hpp"
#include "residuum/residue_classes.hpp"

namespace residuum {

struct SquareProgression {
  std::uint64_t x = 0, y = 0, z = 0;
  std::uint64_t d = 0;
  /// Set when (m, n) were not coprime of opposite parity.
  bool relaxed_parameters = false;

  friend bool operator==(const SquareProgression&, const SquareProgression&) = default;
};

/// (m^2 - n^2 + 2mn, m^2 + n^2, |m^2 - n^2 - 2mn|; 4mn(m^2 - n^2)).
/// Throws BadParameters if m <= n, n < 1, or m is too large for 64 bits.
SquareProgression congruum_triple(std::uint64_t m, std::uint64_t n);

/// Every intermediate of the descent to F_p, kept for reporting.
struct ScalingChain {
  SquareProgression progression;
  std::uint64_t x_squared = 0;  // x^2 mod p
  std::uint64_t y_squared = 0;
  std::uint64_t z_squared = 0;
  std::uint64_t difference = 0;     // d mod p
  std::uint64_t root = 0;           // smaller root r of d
  std::uint64_t root_inverse = 0;   // 1/r
  std::uint64_t scale = 0;          // 1/r^2 = 1/d
  UnitTriple triple;
};

/// Throws BadPrimeForm (p != 1 mod 4), DividesTerm (p | xyz) or
/// NonResidueDifference (d is zero or a non-residue mod p).
ScalingChain scaling_chain(const SquareProgression& prog, const ContextPtr& ctx);

UnitTriple ap_to_unit_triple(const SquareProgression& prog, const ContextPtr& ctx);

/// Explicit C_p listings for the small primes where the congruum routes do
/// not apply (29 and 41 divide a term or sit below the threshold; 37 is
/// reached by neither congruence). nullopt for every other prime.
std::optional<std::span<const std::uint64_t>> small_case_table(std::uint64_t p);

/// How a witness was obtained.
struct Construction {
  UnitTriple triple;
  std::optional<ScalingChain> chain;          // congruum route
  std::optional<std::uint64_t> table_member;  // small-case table route
};

/// p = 1, 9 mod 20. Uses (49, 41, 31) for p > 41 and the small-case table
/// for p = 29, 41. Throws NotCovered otherwise.
Construction construct_mod20(const ContextPtr& ctx);

/// p = 1, 5 mod 24 with p != 5, via (7, 5, 1). Throws Exception5 for p = 5,
/// NotCovered for other residues.
Construction construct_mod24(const ContextPtr& ctx);

bool covered_mod20(std::uint64_t p) noexcept;
bool covered_mod24(std::uint64_t p) noexcept;

enum class Coverage {
  excluded_5_13_17,
  covered_mod20,
  covered_mod24,
  covered_both,
  uncovered_but_nonempty,
  small_case_table,
};

std::string_view to_string(Coverage c) noexcept;

struct CoverageStatus {
  std::uint64_t p = 0;
  Coverage status = Coverage::uncovered_but_nonempty;
};

/// Precedence: excluded > both > mod20 > mod24 > small table > direct
/// computation of C_p. Throws NotPrime or BadPrimeForm (p != 1 mod 4).
CoverageStatus coverage_status(std::uint64_t p);

struct SweepResult {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> tried;  // (m, n)
  std::optional<ScalingChain> found;
};

/// Tries primitive (m, n) with n < m <= max_m in lexicographic order and
/// stops at the first congruum that descends to F_p. Finds witnesses only;
/// proves nothing about other primes.
SweepResult congruum_sweep(const ContextPtr& ctx, std::uint64_t max_m = 12);

}  // namespace residuum
