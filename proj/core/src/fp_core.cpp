#include "residuum/fp_core.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "residuum/error.hpp"

namespace residuum {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

int legendre_symbol(std::uint64_t a, std::uint64_t p) {
  if (p == 2) {
    throw Error(Errc::bad_prime_form, "Legendre symbol needs an odd prime");
  }
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  std::int64_t r0 = static_cast<std::int64_t>(p);
  std::int64_t r1 = static_cast<std::int64_t>(a);
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (p == 2 || a == 0) return a;
  if (legendre_symbol(a, p) != 1) {
    throw Error(Errc::non_residue, std::to_string(a) +
                                       " is not a quadratic residue mod " +
                                       std::to_string(p));
  }

  std::uint64_t r;
  if (p % 4 == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    // p - 1 = q * 2^s with q odd.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre_symbol(z, p) != -1) ++z;

    unsigned m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      unsigned i = 0;
      for (std::uint64_t t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
      std::uint64_t b = c;
      for (unsigned j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
  }
  return std::min(r, p - r);
}

PrimeContext::PrimeContext(std::uint64_t p) : p_(p) {
  if (p < 2 || p > kMaxModulus) {
    throw Error(Errc::out_of_range, "modulus " + std::to_string(p) +
                                        " outside [2, " +
                                        std::to_string(kMaxModulus) + "]");
  }
  if (!is_prime(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  }

  if (p == 2) {
    form_ = ResidueForm::two;
  } else if (p % 4 == 1) {
    form_ = ResidueForm::one_mod_four;
  } else {
    form_ = ResidueForm::three_mod_four;
  }

  is_qr_.assign(p, false);
  for (std::uint64_t n = 1; n <= (p == 2 ? 1 : (p - 1) / 2); ++n) {
    is_qr_[mul_mod(n, n, p)] = true;
  }
  for (std::uint64_t v = 1; v < p; ++v) {
    if (is_qr_[v]) qr_set_.push_back(v);
  }

  if (form_ == ResidueForm::one_mod_four) {
    w_ = residuum::sqrt_mod(p - 1, p);
  }
  // In F_2, 2 = 0 and its only root is 0.
  if (p == 2) {
    tau_ = 0;
  } else if (p % 8 == 1 || p % 8 == 7) {
    tau_ = residuum::sqrt_mod(2, p);
  }
}

std::uint64_t PrimeContext::reduce(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

ContextPtr make_context(std::uint64_t p) {
  return std::make_shared<const PrimeContext>(p);
}

FieldElement::FieldElement(ContextPtr ctx, std::int64_t v)
    : ctx_(std::move(ctx)), value_(0) {
  if (!ctx_) throw Error(Errc::bad_parameters, "null prime context");
  value_ = ctx_->reduce(v);
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::context_mismatch,
                "elements of F_" + std::to_string(a.modulus()) + " and F_" +
                    std::to_string(b.modulus()) + " cannot be combined");
  }
}

FieldElement FieldElement::square() const { return *this * *this; }

FieldElement FieldElement::pow(std::uint64_t exp) const {
  return FieldElement(ctx_, pow_mod(value_, exp, modulus()), true);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.ctx_, add_mod(a.value_, b.value_, a.modulus()), true);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.ctx_, sub_mod(a.value_, b.value_, a.modulus()), true);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.ctx_, mul_mod(a.value_, b.value_, a.modulus()), true);
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.ctx_, neg_mod(a.value_, a.modulus()), true);
}

int legendre(const FieldElement& a) {
  return legendre_symbol(a.value(), a.modulus());
}

FieldElement sqrt_mod(const FieldElement& a) {
  return FieldElement(a.context(),
                      static_cast<std::int64_t>(sqrt_mod(a.value(), a.modulus())));
}

FieldElement inv(const FieldElement& a) {
  return FieldElement(a.context(), static_cast<std::int64_t>(
                                       inverse_mod(a.value(), a.modulus())));
}

}  // namespace residuum
