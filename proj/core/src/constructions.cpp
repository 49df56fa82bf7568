#include "residuum/constructions.hpp"

#include <array>
#include <numeric>
#include <string>

#include "residuum/error.hpp"

namespace residuum {
namespace {

constexpr std::uint64_t kMaxCongruumParameter = 30000;

constexpr std::array<std::uint64_t, 4> kC29{4, 5, 22, 23};
constexpr std::array<std::uint64_t, 4> kC37{9, 10, 25, 26};
constexpr std::array<std::uint64_t, 2> kC41{8, 31};

}  // namespace

SquareProgression congruum_triple(std::uint64_t m, std::uint64_t n) {
  if (n < 1 || m <= n) {
    throw Error(Errc::bad_parameters, "congruum needs m > n >= 1, got (" +
                                          std::to_string(m) + ", " +
                                          std::to_string(n) + ")");
  }
  if (m > kMaxCongruumParameter) {
    throw Error(Errc::bad_parameters, "congruum parameter m = " + std::to_string(m) +
                                          " overflows 64-bit arithmetic");
  }
  const std::uint64_t diff = m * m - n * n;
  const std::uint64_t twice = 2 * m * n;

  SquareProgression out;
  out.x = diff + twice;
  out.y = m * m + n * n;
  out.z = diff > twice ? diff - twice : twice - diff;
  out.d = 2 * twice * diff;
  out.relaxed_parameters = std::gcd(m, n) != 1 || (m - n) % 2 == 0;

  if (out.x * out.x - out.y * out.y != out.d ||
      out.y * out.y - out.z * out.z != out.d) {
    throw Error(Errc::internal, "congruum parametrization broke the progression");
  }
  return out;
}

ScalingChain scaling_chain(const SquareProgression& prog, const ContextPtr& ctx) {
  const std::uint64_t p = ctx->p();
  if (p % 4 != 1) {
    throw Error(Errc::bad_prime_form,
                "descent needs p = 1 mod 4, got " + std::to_string(p));
  }
  if (prog.x % p == 0 || prog.y % p == 0 || prog.z % p == 0) {
    throw Error(Errc::divides_term, std::to_string(p) + " divides a term of (" +
                                        std::to_string(prog.x) + ", " +
                                        std::to_string(prog.y) + ", " +
                                        std::to_string(prog.z) + ")");
  }
  const std::uint64_t d = prog.d % p;
  if (legendre_symbol(d, p) != 1) {
    throw Error(Errc::non_residue_difference,
                "difference " + std::to_string(prog.d) +
                    " is not a nonzero square mod " + std::to_string(p));
  }

  const std::uint64_t r = sqrt_mod(d, p);
  const std::uint64_t r_inv = inverse_mod(r, p);
  auto scaled = [&](std::uint64_t v) {
    return FieldElement(ctx, static_cast<std::int64_t>(mul_mod(v % p, r_inv, p)));
  };
  const auto sq = [p](std::uint64_t v) { return mul_mod(v % p, v % p, p); };

  return ScalingChain{
      .progression = prog,
      .x_squared = sq(prog.x),
      .y_squared = sq(prog.y),
      .z_squared = sq(prog.z),
      .difference = d,
      .root = r,
      .root_inverse = r_inv,
      .scale = mul_mod(r_inv, r_inv, p),
      .triple = UnitTriple(scaled(prog.x), scaled(prog.y), scaled(prog.z)),
  };
}

UnitTriple ap_to_unit_triple(const SquareProgression& prog, const ContextPtr& ctx) {
  return scaling_chain(prog, ctx).triple;
}

std::optional<std::span<const std::uint64_t>> small_case_table(std::uint64_t p) {
  switch (p) {
    case 29: return std::span<const std::uint64_t>(kC29);
    case 37: return std::span<const std::uint64_t>(kC37);
    case 41: return std::span<const std::uint64_t>(kC41);
    default: return std::nullopt;
  }
}

bool covered_mod20(std::uint64_t p) noexcept {
  return p % 20 == 1 || p % 20 == 9;
}

bool covered_mod24(std::uint64_t p) noexcept {
  return p != 5 && (p % 24 == 1 || p % 24 == 5);
}

Construction construct_mod20(const ContextPtr& ctx) {
  const std::uint64_t p = ctx->p();
  if (!covered_mod20(p)) {
    throw Error(Errc::not_covered,
                std::to_string(p) + " is not 1 or 9 mod 20");
  }
  if (p > 41) {
    auto chain = scaling_chain(congruum_triple(5, 4), ctx);
    UnitTriple t = chain.triple;
    return Construction{std::move(t), std::move(chain), std::nullopt};
  }
  const auto table = small_case_table(p);
  if (!table || table->empty()) {
    throw Error(Errc::internal, "no small-case table for p = " + std::to_string(p));
  }
  const std::uint64_t member = table->front();
  return Construction{triple_from_member(ctx, member), std::nullopt, member};
}

Construction construct_mod24(const ContextPtr& ctx) {
  const std::uint64_t p = ctx->p();
  if (p == 5) {
    throw Error(Errc::exception_5, "p = 5 divides the term 5 of (7, 5, 1)");
  }
  if (!covered_mod24(p)) {
    throw Error(Errc::not_covered, std::to_string(p) + " is not 1 or 5 mod 24");
  }
  auto chain = scaling_chain(congruum_triple(2, 1), ctx);
  UnitTriple t = chain.triple;
  return Construction{std::move(t), std::move(chain), std::nullopt};
}

std::string_view to_string(Coverage c) noexcept {
  switch (c) {
    case Coverage::excluded_5_13_17: return "excluded_5_13_17";
    case Coverage::covered_mod20: return "covered_mod20";
    case Coverage::covered_mod24: return "covered_mod24";
    case Coverage::covered_both: return "covered_both";
    case Coverage::uncovered_but_nonempty: return "uncovered_but_nonempty";
    case Coverage::small_case_table: return "small_case_table";
  }
  return "unknown";
}

CoverageStatus coverage_status(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (p % 4 != 1) {
    throw Error(Errc::bad_prime_form,
                "coverage is defined for p = 1 mod 4, got " + std::to_string(p));
  }
  if (p == 5 || p == 13 || p == 17) return {p, Coverage::excluded_5_13_17};

  const bool by20 = covered_mod20(p);
  const bool by24 = covered_mod24(p);
  if (by20 && by24) return {p, Coverage::covered_both};
  if (by20) return {p, Coverage::covered_mod20};
  if (by24) return {p, Coverage::covered_mod24};
  if (small_case_table(p)) return {p, Coverage::small_case_table};

  if (consecutive_triples(*make_context(p)).empty()) {
    throw Error(Errc::internal, "C_" + std::to_string(p) +
                                    " is empty, contradicting the known run results");
  }
  return {p, Coverage::uncovered_but_nonempty};
}

SweepResult congruum_sweep(const ContextPtr& ctx, std::uint64_t max_m) {
  SweepResult out;
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      out.tried.emplace_back(m, n);
      try {
        out.found = scaling_chain(congruum_triple(m, n), ctx);
        return out;
      } catch (const Error& e) {
        if (e.code() != Errc::divides_term &&
            e.code() != Errc::non_residue_difference) {
          throw;
        }
      }
    }
  }
  return out;
}

}  // namespace residuum
