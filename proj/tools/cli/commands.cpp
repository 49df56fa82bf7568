#include "cli/commands.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "residuum/constructions.hpp"
#include "residuum/error.hpp"
#include "residuum/fp_core.hpp"
#include "residuum/residue_classes.hpp"
#include "residuum/search.hpp"

namespace residuum::cli {
namespace {

using nlohmann::json;

std::string_view form_name(ResidueForm f) {
  switch (f) {
    case ResidueForm::two: return "two";
    case ResidueForm::one_mod_four: return "one_mod_four";
    case ResidueForm::three_mod_four: return "three_mod_four";
  }
  return "unknown";
}

json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json grid_json(const ResidueGrid& g) {
  json values = json::array();
  json roots = json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    json vrow = json::array();
    json rrow = json::array();
    for (std::size_t c = 0; c < 3; ++c) {
      vrow.push_back(g.at(r, c));
      rrow.push_back(sqrt_mod(g.at(r, c), g.modulus()));
    }
    values.push_back(vrow);
    roots.push_back(rrow);
  }
  return json{{"values", values}, {"roots", roots}};
}

json grid_json(const IntGrid& g) {
  json values = json::array();
  json roots = json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    json vrow = json::array();
    json rrow = json::array();
    for (std::size_t c = 0; c < 3; ++c) {
      const std::uint64_t v = g.cells[3 * r + c];
      vrow.push_back(v);
      rrow.push_back(optional_json(exact_sqrt(v)));
    }
    values.push_back(vrow);
    roots.push_back(rrow);
  }
  return json{{"values", values}, {"roots", roots}};
}

json mod2_json(const Mod2Class& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    rows.push_back({m.bits[3 * r], m.bits[3 * r + 1], m.bits[3 * r + 2]});
  }
  return rows;
}

json triple_json(const UnitTriple& t) {
  return json{
      {"alpha", t.alpha().value()},
      {"beta", t.beta().value()},
      {"gamma", t.gamma().value()},
      {"alpha_squared", t.alpha().square().value()},
      {"beta_squared", t.beta().square().value()},
      {"gamma_squared", t.gamma().square().value()},
  };
}

json chain_json(const ScalingChain& c) {
  return json{
      {"progression", {{"x", c.progression.x},
                       {"y", c.progression.y},
                       {"z", c.progression.z},
                       {"d", c.progression.d}}},
      {"x_squared", c.x_squared},
      {"y_squared", c.y_squared},
      {"z_squared", c.z_squared},
      {"difference", c.difference},
      {"root", c.root},
      {"root_inverse", c.root_inverse},
      {"scale", c.scale},
  };
}

int mod2_index(const Mod2Class& m) {
  const auto& patterns = mod2_patterns();
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (patterns[k] == m) return static_cast<int>(k);
  }
  return -1;
}

json analyze_one_mod_four(const ContextPtr& ctx, const CommandOptions& options) {
  json out;
  const std::uint64_t p = ctx->p();
  out["trivial_corner"] = grid_json(gen_trivial_corner(ctx));
  if (p % 8 == 1) {
    out["trivial_midedge"] = grid_json(gen_trivial_midedge(ctx));
  } else {
    out["trivial_midedge"] = nullptr;
    out["trivial_midedge_note"] =
        "p = 5 mod 8: 2 is not a square, so no class has a zero mid-edge";
  }

  json nontrivial = json::array();
  for (auto n : consecutive_triples(*ctx)) {
    const UnitTriple t = triple_from_member(ctx, n);
    nontrivial.push_back(
        {{"member", n}, {"triple", triple_json(t)}, {"grid", grid_json(gen_nontrivial(t))}});
  }
  out["nontrivial"] = nontrivial;

  const std::uint64_t bound = count_bound(*ctx);
  out["count_bound"] = bound;
  out["coverage"] = to_string(coverage_status(p).status);

  if (p <= options.max_oracle_p) {
    EnumerateOptions eo;
    eo.max_p = options.max_oracle_p;
    eo.workers = options.workers;
    const auto all = enumerate_all(ctx, eo);
    out["oracle"] = {
        {"count", all.size()},
        {"within_bound", all.size() <= bound},
        {"matches_generated", all == generated_classes(ctx)},
    };
  } else {
    out["oracle"] = nullptr;
  }
  return out;
}

}  // namespace

OutputDocument cmd_analyze(std::uint64_t p, const CommandOptions& options) {
  OutputDocument doc;
  doc.command = "analyze";
  doc.parameters = {{"p", p}, {"max_oracle_p", options.max_oracle_p}};

  const ContextPtr ctx = make_context(p);
  json& r = doc.results;
  r["p"] = p;
  r["residue_form"] = form_name(ctx->form());
  r["qr_set"] = ctx->qr_set();
  r["qr_count"] = ctx->qr_set().size();
  r["consecutive_triples"] = consecutive_triples(*ctx);
  r["w"] = optional_json(ctx->w());
  r["tau"] = optional_json(ctx->tau());

  switch (ctx->form()) {
    case ResidueForm::one_mod_four:
      r["classes"] = analyze_one_mod_four(ctx, options);
      break;
    case ResidueForm::three_mod_four:
      r["classes"] = nullptr;
      r["note"] =
          "p = 3 mod 4: -1 is not a square, so x^2 + y^2 = 0 forces x = y = 0. "
          "A primitive square of squares cannot have p dividing its center.";
      break;
    case ResidueForm::two: {
      json patterns = json::array();
      for (const auto& m : mod2_patterns()) patterns.push_back(mod2_json(m));
      r["classes"] = nullptr;
      r["parity_patterns"] = patterns;
      r["note"] =
          "An even center admits exactly four parity patterns, which form a "
          "Klein four-group under cell-wise addition.";
      break;
    }
  }
  return doc;
}

OutputDocument cmd_table(std::uint64_t max, const CommandOptions& /*options*/) {
  if (max < 5) {
    throw Error(Errc::bad_range, "table needs max >= 5, got " + std::to_string(max));
  }
  if (max > kMaxModulus) {
    throw Error(Errc::bad_range, "table max exceeds " + std::to_string(kMaxModulus));
  }
  OutputDocument doc;
  doc.command = "table";
  doc.parameters = {{"max", max}};

  json rows = json::array();
  for (std::uint64_t p = 5; p <= max; p += 4) {
    if (!is_prime(p)) continue;
    const auto ctx = make_context(p);
    rows.push_back({
        {"p", p},
        {"qr_count", ctx->qr_set().size()},
        {"cp_count", consecutive_triples(*ctx).size()},
        {"coverage", to_string(coverage_status(p).status)},
        {"bound", count_bound(*ctx)},
    });
  }
  doc.results["rows"] = rows;
  return doc;
}

IntGrid parse_square(std::string_view text) {
  IntGrid g;
  std::size_t count = 0;
  std::size_t line = 1;
  std::size_t pos = 0;
  auto fail = [&](std::size_t ln, std::size_t col, const std::string& msg) {
    throw Error(Errc::parse_error,
                std::to_string(ln) + ":" + std::to_string(col) + ": " + msg);
  };

  while (pos < text.size()) {
    const std::size_t line_end = std::min(text.find('\n', pos), text.size());
    const std::string_view row = text.substr(pos, line_end - pos);
    const std::size_t first = row.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && row[first] != '#') {
      std::size_t k = 0;
      while (k < row.size()) {
        const char ch = row[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
          ++k;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          fail(line, k + 1, std::string("unexpected character '") + ch + "'");
        }
        const std::size_t start = k;
        std::uint64_t value = 0;
        while (k < row.size() && std::isdigit(static_cast<unsigned char>(row[k]))) {
          const std::uint64_t digit = static_cast<std::uint64_t>(row[k] - '0');
          if (value > (kMaxCell / 3 - digit) / 10) fail(line, start + 1, "value too large");
          value = value * 10 + digit;
          ++k;
        }
        if (k < row.size() && !std::isspace(static_cast<unsigned char>(row[k]))) {
          fail(line, k + 1, std::string("unexpected character '") + row[k] + "'");
        }
        if (count == 9) fail(line, start + 1, "more than 9 integers");
        g.cells[count++] = value;
      }
    }
    pos = line_end + 1;
    ++line;
  }
  if (count != 9) {
    fail(line, 1, "expected 9 integers, found " + std::to_string(count));
  }
  return g;
}

OutputDocument cmd_verify(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_not_found, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return cmd_verify_text(buf.str(), path.string());
}

OutputDocument cmd_verify_text(std::string_view text, std::string_view source) {
  const IntGrid g = parse_square(text);

  OutputDocument doc;
  doc.command = "verify";
  doc.parameters = {{"path", std::string(source)}};
  json& r = doc.results;

  r["grid"] = grid_json(g);
  const auto total = is_magic(g);
  r["magic"] = total.has_value();
  r["total"] = optional_json(total);
  r["total_is_three_centers"] =
      total ? json(check_total_is_three_centers(g)) : json(nullptr);

  const bool squares = is_square_entried(g);
  r["square_entried"] = squares;
  r["distinct"] = is_distinct(g);

  const std::uint64_t d = cell_gcd(g);
  r["gcd"] = d;
  r["primitive"] = d == 1;
  r["reduced"] = (squares && d > 1) ? grid_json(reduce_primitive(g)) : json(nullptr);

  const auto e = exact_sqrt(g.center());
  r["center_root"] = optional_json(e);
  if (!e || *e == 0) {
    r["center_check"] = nullptr;
    r["residue_classes"] = json::array();
    return doc;
  }

  const CenterAdmissibility check = admissible_center_check(*e);
  json factors = json::array();
  for (const auto& f : check.factors) {
    factors.push_back({{"prime", f.prime}, {"admissible", f.admissible}});
  }
  r["center_check"] = {
      {"factors", factors},
      {"all_admissible", check.all_admissible()},
      {"degenerate_center", check.degenerate_center},
  };

  json classes = json::array();
  if (squares) {
    for (const auto& f : check.factors) {
      if (!f.admissible) continue;
      const auto ctx = make_context(f.prime);
      const ResidueGrid rg = residue_class_of(g, ctx);
      json entry{{"p", f.prime}, {"grid", grid_json(rg)}};
      if (f.prime == 2) {
        try {
          const Mod2Class m = mod2_classify(g);
          entry["parity_pattern"] = mod2_index(m);
          entry["even_center_line"] = has_even_center_line(m);
        } catch (const Error& err) {
          entry["parity_pattern"] = nullptr;
          entry["error"] = to_string(err.code());
        }
      } else {
        const auto sum = is_magic_class(rg);
        entry["magic"] = sum.has_value();
        entry["classification"] =
            sum ? json(to_string(classify(rg))) : json(nullptr);
      }
      classes.push_back(entry);
    }
  }
  r["residue_classes"] = classes;
  return doc;
}

OutputDocument cmd_construct(std::uint64_t p) {
  OutputDocument doc;
  doc.command = "construct";
  doc.parameters = {{"p", p}};

  const CoverageStatus status = coverage_status(p);
  const ContextPtr ctx = make_context(p);
  json& r = doc.results;
  r["coverage"] = to_string(status.status);

  std::optional<Construction> built;
  std::string route;
  switch (status.status) {
    case Coverage::covered_both:
    case Coverage::covered_mod20:
      built = construct_mod20(ctx);
      route = built->chain ? "congruum (49, 41, 31; 720)" : "small-case table";
      break;
    case Coverage::covered_mod24:
      built = construct_mod24(ctx);
      route = "congruum (7, 5, 1; 24)";
      break;
    case Coverage::small_case_table: {
      const std::uint64_t member = small_case_table(p)->front();
      built = Construction{triple_from_member(ctx, member), std::nullopt, member};
      route = "small-case table";
      break;
    }
    case Coverage::uncovered_but_nonempty:
    case Coverage::excluded_5_13_17: {
      SweepResult sweep = congruum_sweep(ctx);
      json tried = json::array();
      for (const auto& [m, n] : sweep.tried) tried.push_back({m, n});
      r["sweep_tried"] = tried;
      if (sweep.found) {
        UnitTriple t = sweep.found->triple;
        built = Construction{std::move(t), std::move(sweep.found), std::nullopt};
        route = "congruum sweep";
      }
      break;
    }
  }

  r["covered"] = built.has_value();
  if (!built) {
    r["error"] = to_string(Errc::not_covered);
    const auto cp = consecutive_triples(*ctx);
    r["consecutive_triples"] = cp;
    r["note"] = cp.empty() ? "C_" + std::to_string(p) +
                                 " is empty: no nontrivial residue class exists"
                           : "no built-in congruum descends to this prime";
    return doc;
  }

  r["route"] = route;
  r["triple"] = triple_json(built->triple);
  r["chain"] = built->chain ? chain_json(*built->chain) : json(nullptr);
  r["table_member"] = optional_json(built->table_member);
  const std::uint64_t gamma_sq = built->triple.gamma().square().value();
  r["gamma_squared_in_cp"] = [&] {
    for (auto n : consecutive_triples(*ctx)) {
      if (n == gamma_sq) return true;
    }
    return false;
  }();
  r["grid"] = grid_json(gen_nontrivial(built->triple));
  return doc;
}

OutputDocument cmd_search(std::uint64_t e_min, std::uint64_t e_max,
                          const CommandOptions& options) {
  OutputDocument doc;
  doc.command = "search";
  doc.parameters = {
      {"e_min", e_min},
      {"e_max", e_max},
      {"primitive_only", options.primitive_only},
      {"near_miss_threshold", options.near_miss_threshold},
  };

  SearchOptions so;
  so.primitive_only = options.primitive_only;
  so.near_miss_threshold = options.near_miss_threshold;
  so.workers = options.workers;
  const SearchReport report = search_msos(e_min, e_max, so);

  json hits = json::array();
  for (const auto& g : report.hits) hits.push_back(grid_json(g));
  json near = json::array();
  for (const auto& g : report.near_misses) {
    const std::uint64_t e2 = g.center();
    near.push_back({{"grid", grid_json(g)},
                    {"correct_lines", count_lines_with_sum(g, 3 * e2)}});
  }

  json& r = doc.results;
  r["e_range"] = {report.e_min, report.e_max};
  r["pruned_centers"] = report.pruned_centers;
  r["centers_with_four_pairs"] = report.centers_with_four_pairs;
  r["candidates_tested"] = report.candidates_tested;
  r["hits"] = hits;
  r["near_misses"] = near;
  r["notes"] = {
      "primitive-only mode skips centers e with a prime factor = 3 mod 4; such a "
      "prime divides every entry, and the reduced square is searched at a smaller e",
      "a near miss is a distinct square-entried grid with all four center lines "
      "summing to 3e^2 and at least near_miss_threshold of the eight lines correct; "
      "this definition is a tooling choice",
  };
  return doc;
}

int exit_code_for(const OutputDocument& doc) {
  if (doc.command == "search" && doc.results.contains("hits") &&
      !doc.results["hits"].empty()) {
    return kExitSearchHit;
  }
  return kExitOk;
}

}  // namespace residuum::cli
