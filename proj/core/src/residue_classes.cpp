#include "residuum/residue_classes.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "residuum/error.hpp"

namespace residuum {
namespace {

void require_one_mod_four(const PrimeContext& ctx, std::string_view what) {
  if (ctx.p() % 4 != 1) {
    throw Error(Errc::bad_prime_form, std::string(what) + " needs p = 1 mod 4, got " +
                                          std::to_string(ctx.p()));
  }
}

std::vector<std::uint64_t> squares_with_zero(const PrimeContext& ctx) {
  std::vector<std::uint64_t> out{0};
  out.insert(out.end(), ctx.qr_set().begin(), ctx.qr_set().end());
  return out;
}

Cells permute(const Cells& src, const std::array<std::size_t, 9>& from) {
  Cells out{};
  for (std::size_t k = 0; k < 9; ++k) out[k] = src[from[k]];
  return out;
}

bool lines_agree(const Cells& v, std::uint64_t p) {
  const std::uint64_t first = (v[0] + v[1] + v[2]) % p;
  for (const auto& line : kLines) {
    if ((v[line[0]] + v[line[1]] + v[line[2]]) % p != first) return false;
  }
  return true;
}

bool all_lines_zero(const Cells& v, std::uint64_t p) {
  for (const auto& line : kLines) {
    if ((v[line[0]] + v[line[1]] + v[line[2]]) % p != 0) return false;
  }
  return true;
}

}  // namespace

ResidueGrid::ResidueGrid(ContextPtr ctx, const Cells& cells)
    : ctx_(std::move(ctx)), cells_(cells) {
  if (!ctx_) throw Error(Errc::bad_parameters, "null prime context");
  for (auto& v : cells_) {
    v %= ctx_->p();
    if (!ctx_->is_square(v)) {
      throw Error(Errc::not_a_square, std::to_string(v) + " is not a square mod " +
                                          std::to_string(ctx_->p()));
    }
  }
}

bool ResidueGrid::all_zero() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

UnitTriple::UnitTriple(FieldElement alpha, FieldElement beta, FieldElement gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  require_same_field(alpha_, beta_);
  require_same_field(beta_, gamma_);
  const FieldElement one(alpha_.context(), 1);
  if (alpha_.is_zero() || beta_.is_zero() || gamma_.is_zero() ||
      alpha_.square() - beta_.square() != one ||
      beta_.square() - gamma_.square() != one) {
    throw Error(Errc::not_a_member,
                "(" + std::to_string(alpha_.value()) + ", " +
                    std::to_string(beta_.value()) + ", " +
                    std::to_string(gamma_.value()) + ") is not a unit triple");
  }
}

std::string_view to_string(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::trivial_corner: return "trivial_corner";
    case ClassKind::trivial_midedge: return "trivial_midedge";
    case ClassKind::nontrivial: return "nontrivial";
    case ClassKind::all_zero: return "all_zero";
  }
  return "unknown";
}

std::optional<std::uint64_t> is_magic_class(const ResidueGrid& g) {
  const std::uint64_t p = g.modulus();
  const auto& v = g.cells();
  std::optional<std::uint64_t> common;
  for (const auto& line : kLines) {
    const std::uint64_t s = (v[line[0]] + v[line[1]] + v[line[2]]) % p;
    if (!common) {
      common = s;
    } else if (*common != s) {
      return std::nullopt;
    }
  }
  return common;
}

ClassKind classify(const ResidueGrid& g) {
  if (!is_magic_class(g)) throw Error(Errc::not_magic, "grid is not magic");
  if (g.center() != 0) throw Error(Errc::nonzero_center, "center is nonzero");
  const auto& v = g.cells();
  if (g.all_zero()) return ClassKind::all_zero;
  for (auto k : cell::corners) {
    if (v[k] == 0) return ClassKind::trivial_corner;
  }
  for (auto k : cell::midedges) {
    if (v[k] == 0) return ClassKind::trivial_midedge;
  }
  return ClassKind::nontrivial;
}

ResidueGrid gen_trivial_corner(const ContextPtr& ctx) {
  require_one_mod_four(*ctx, "trivial corner class");
  const std::uint64_t m = ctx->p() - 1;
  return ResidueGrid(ctx, {0, 1, m, m, 0, 1, 1, m, 0});
}

ResidueGrid gen_trivial_midedge(const ContextPtr& ctx) {
  require_one_mod_four(*ctx, "trivial mid-edge class");
  const std::uint64_t p = ctx->p();
  if (p % 8 != 1) {
    throw Error(Errc::bad_prime_form,
                "mid-edge zeros need p = 1 mod 8; " + std::to_string(p) +
                    " = 5 mod 8 forbids them");
  }
  return ResidueGrid(ctx, {1, 0, p - 1, p - 2, 0, 2, 1, 0, p - 1});
}

std::vector<std::uint64_t> consecutive_triples(const PrimeContext& ctx) {
  const std::uint64_t p = ctx.p();
  std::vector<std::uint64_t> out;
  for (auto n : ctx.qr_set()) {
    if (ctx.is_qr((n + 1) % p) && ctx.is_qr((n + 2) % p)) out.push_back(n);
  }
  return out;
}

UnitTriple triple_from_member(const ContextPtr& ctx, std::uint64_t n) {
  const std::uint64_t p = ctx->p();
  if (n >= p || !ctx->is_qr(n) || !ctx->is_qr((n + 1) % p) ||
      !ctx->is_qr((n + 2) % p)) {
    throw Error(Errc::not_a_member,
                std::to_string(n) + " is not in C_" + std::to_string(p));
  }
  auto root = [&](std::uint64_t v) {
    return FieldElement(ctx, static_cast<std::int64_t>(sqrt_mod(v % p, p)));
  };
  return UnitTriple(root(n + 2), root(n + 1), root(n));
}

ResidueGrid gen_nontrivial(const UnitTriple& t) {
  const auto& ctx = t.context();
  if (!ctx->w()) {
    throw Error(Errc::bad_prime_form, "no element of order 4 in F_" +
                                          std::to_string(ctx->p()));
  }
  const FieldElement w(ctx, static_cast<std::int64_t>(*ctx->w()));
  const auto sq = [](const FieldElement& x) { return x.square().value(); };
  return ResidueGrid(ctx, {sq(w * t.beta()), sq(t.gamma()), 1,
                           sq(t.alpha()), 0, sq(w * t.alpha()),
                           sq(w), sq(w * t.gamma()), sq(t.beta())});
}

ResidueGrid rotate90(const ResidueGrid& g) {
  // new(r, c) = old(2 - c, r)
  return ResidueGrid(g.context(), permute(g.cells(), {6, 3, 0, 7, 4, 1, 8, 5, 2}));
}

ResidueGrid rotate180(const ResidueGrid& g) {
  return ResidueGrid(g.context(), permute(g.cells(), {8, 7, 6, 5, 4, 3, 2, 1, 0}));
}

ResidueGrid reflect_anti_diagonal(const ResidueGrid& g) {
  // new(r, c) = old(2 - c, 2 - r)
  return ResidueGrid(g.context(), permute(g.cells(), {8, 5, 2, 7, 4, 1, 6, 3, 0}));
}

ResidueGrid reflect_horizontal(const ResidueGrid& g) {
  return ResidueGrid(g.context(), permute(g.cells(), {6, 7, 8, 3, 4, 5, 0, 1, 2}));
}

ResidueGrid scale(const ResidueGrid& g, std::uint64_t s) {
  const std::uint64_t p = g.modulus();
  Cells out = g.cells();
  for (auto& v : out) v = mul_mod(v, s % p, p);
  return ResidueGrid(g.context(), out);
}

std::set<ResidueGrid> orbit(const ResidueGrid& g) {
  std::set<ResidueGrid> out;
  ResidueGrid rotated = g;
  for (int r = 0; r < 4; ++r) {
    for (auto s : g.context()->qr_set()) out.insert(scale(rotated, s));
    rotated = rotate90(rotated);
  }
  return out;
}

std::uint64_t count_bound(const PrimeContext& ctx) {
  require_one_mod_four(ctx, "count bound");
  const std::uint64_t k = ctx.p() % 8 == 1 ? 2 : 1;
  return (ctx.p() - 1) * (consecutive_triples(ctx).size() + 2 * k);
}

std::set<ResidueGrid> enumerate_all(const ContextPtr& ctx,
                                    const EnumerateOptions& options) {
  require_one_mod_four(*ctx, "enumeration");
  const std::uint64_t p = ctx->p();
  if (p > options.max_p) {
    throw Error(Errc::bound_exceeded, "p = " + std::to_string(p) +
                                          " exceeds enumeration bound " +
                                          std::to_string(options.max_p));
  }

  const auto sq = squares_with_zero(*ctx);
  const std::size_t n = sq.size();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(n)));

  // Each worker takes a strided share of the a-loop; results are merged
  // into an ordered set, so the output does not depend on scheduling.
  std::vector<std::vector<Cells>> found(workers);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t ia = id; ia < n; ia += workers) {
        const std::uint64_t a = sq[ia];
        for (std::uint64_t b : sq) {
          for (std::uint64_t c : sq) {
            if ((a + b + c) % p != 0) continue;
            for (std::uint64_t d : sq) {
              const Cells v{a, b, c,
                            d, 0, neg_mod(d, p),
                            neg_mod(c, p), neg_mod(b, p), neg_mod(a, p)};
              if ((v[cell::a] + v[cell::d] + v[cell::g]) % p != 0) continue;
              if (!all_lines_zero(v, p)) {
                throw Error(Errc::internal,
                            "top row and left column vanish but another line does not");
              }
              if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
                continue;
              }
              found[id].push_back(v);
            }
          }
        }
      }
    } catch (...) {
      failures[id] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::set<ResidueGrid> out;
  for (const auto& chunk : found) {
    for (const auto& v : chunk) out.emplace(ctx, v);
  }

  if (p <= options.naive_cross_check_p) {
    if (enumerate_naive(ctx, options.naive_cross_check_p) != out) {
      throw Error(Errc::internal, "naive and reduced enumerations disagree for p = " +
                                      std::to_string(p));
    }
  }
  return out;
}

std::set<ResidueGrid> enumerate_naive(const ContextPtr& ctx, std::uint64_t max_p) {
  const std::uint64_t p = ctx->p();
  if (p > max_p) {
    throw Error(Errc::bound_exceeded, "naive enumeration limited to p <= " +
                                          std::to_string(max_p));
  }
  const auto sq = squares_with_zero(*ctx);
  const std::size_t n = sq.size();

  std::set<ResidueGrid> out;
  std::array<std::size_t, 8> idx{};
  constexpr std::array<std::size_t, 8> slots{0, 1, 2, 3, 5, 6, 7, 8};
  while (true) {
    Cells v{};
    for (std::size_t k = 0; k < 8; ++k) v[slots[k]] = sq[idx[k]];
    if (lines_agree(v, p) &&
        !std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
      out.emplace(ctx, v);
    }
    std::size_t k = 0;
    while (k < 8 && ++idx[k] == n) idx[k++] = 0;
    if (k == 8) break;
  }
  return out;
}

std::set<ResidueGrid> generated_classes(const ContextPtr& ctx) {
  require_one_mod_four(*ctx, "generated classes");
  std::set<ResidueGrid> out = orbit(gen_trivial_corner(ctx));
  if (ctx->p() % 8 == 1) out.merge(orbit(gen_trivial_midedge(ctx)));
  for (auto n : consecutive_triples(*ctx)) {
    out.merge(orbit(gen_nontrivial(triple_from_member(ctx, n))));
  }
  return out;
}

}  // namespace residuum
