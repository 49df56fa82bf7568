#pragma once

// Arithmetic in the prime field F_p and the quadratic-residue machinery
// built on top of it.
//
// A PrimeContext is created once per modulus and shared (immutably) by
// every FieldElement reduced against it. Contexts are compared by modulus,
// so two independently built contexts for the same p interoperate.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace residuum {

/// Largest modulus accepted by make_context. The residue bitmap is O(p)
/// and primality is decided by trial division, so this keeps both cheap.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 26;

enum class ResidueForm { two, one_mod_four, three_mod_four };

/// Deterministic trial division; exact for every n < 2^64 but only fast
/// for n up to roughly 10^12.
bool is_prime(std::uint64_t n) noexcept;

// Raw modular helpers. All arguments must already be reduced mod p and
// p must be below 2^32 so that products fit in 64 bits.
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) noexcept {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) noexcept {
  return a == 0 ? 0 : p - a;
}
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) noexcept {
  return (a * b) % p;
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t p) noexcept;

/// Legendre symbol by Euler's criterion, p an odd prime.
int legendre_symbol(std::uint64_t a, std::uint64_t p);

/// Inverse by the extended Euclidean algorithm. Throws DivisionByZero.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Tonelli-Shanks (with the p = 3 mod 4 shortcut). Returns the smaller
/// of the two roots. Throws NonResidue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

class PrimeContext {
 public:
  /// Throws NotPrime, or OutOfRange when p < 2 or p > kMaxModulus.
  explicit PrimeContext(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  ResidueForm form() const noexcept { return form_; }

  /// Nonzero quadratic residues S_p, ascending.
  const std::vector<std::uint64_t>& qr_set() const noexcept { return qr_set_; }

  /// True for nonzero residues only; 0 is a square but not in S_p.
  bool is_qr(std::uint64_t v) const noexcept {
    return v < p_ && is_qr_[v];
  }
  /// Zero or a member of S_p.
  bool is_square(std::uint64_t v) const noexcept {
    return v == 0 || is_qr(v);
  }

  /// Smaller element of order 4 (w^2 = -1); present iff p = 1 mod 4.
  std::optional<std::uint64_t> w() const noexcept { return w_; }

  /// Smaller square root of 2; present iff p = 2 or p = +-1 mod 8.
  std::optional<std::uint64_t> tau() const noexcept { return tau_; }

  std::uint64_t reduce(std::int64_t v) const noexcept;

 private:
  std::uint64_t p_;
  ResidueForm form_;
  std::vector<std::uint64_t> qr_set_;
  std::vector<bool> is_qr_;
  std::optional<std::uint64_t> w_;
  std::optional<std::uint64_t> tau_;
};

using ContextPtr = std::shared_ptr<const PrimeContext>;

ContextPtr make_context(std::uint64_t p);

class FieldElement {
 public:
  FieldElement(ContextPtr ctx, std::int64_t v);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return ctx_->p(); }
  const ContextPtr& context() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement square() const;
  FieldElement pow(std::uint64_t exp) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);

  /// Equal iff same modulus and same residue.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.modulus() == b.modulus() && a.value_ == b.value_;
  }

 private:
  FieldElement(ContextPtr ctx, std::uint64_t v, bool /*reduced*/)
      : ctx_(std::move(ctx)), value_(v) {}

  ContextPtr ctx_;
  std::uint64_t value_;
};

/// Throws ContextMismatch unless a and b share a modulus.
void require_same_field(const FieldElement& a, const FieldElement& b);

/// -1, 0 or 1. Requires an odd modulus (BadPrimeForm otherwise).
int legendre(const FieldElement& a);

/// Smaller root r (r <= p - r) with r^2 = a. Throws NonResidue.
FieldElement sqrt_mod(const FieldElement& a);

/// Throws DivisionByZero.
FieldElement inv(const FieldElement& a);

}  // namespace residuum
