#include "cli/render.hpp"

#include <iomanip>
#include <sstream>

#include "residuum/error.hpp"

namespace residuum::cli {
namespace {

using nlohmann::json;

std::string scalar(const json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string list(const json& j) {
  std::string out = "{";
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (k > 0) out += ", ";
    out += scalar(j[k]);
  }
  return out + "}";
}

void grid(std::ostream& os, const json& g, const std::string& indent) {
  const json& values = g.at("values");
  const json& roots = g.at("roots");
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      std::string s = scalar(values[r][c]);
      if (!roots[r][c].is_null()) s += "=" + scalar(roots[r][c]) + "^2";
      width = std::max(width, s.size());
      cells.push_back(std::move(s));
    }
  }
  for (std::size_t r = 0; r < 3; ++r) {
    os << indent;
    for (std::size_t c = 0; c < 3; ++c) {
      os << std::setw(static_cast<int>(width + 2)) << cells[3 * r + c];
    }
    os << '\n';
  }
}

void analyze(std::ostream& os, const json& r) {
  os << "F_" << scalar(r["p"]) << " (" << scalar(r["residue_form"]) << ")\n";
  os << "  S_p (" << scalar(r["qr_count"]) << "): " << list(r["qr_set"]) << '\n';
  os << "  C_p: " << list(r["consecutive_triples"]) << '\n';
  os << "  w: " << scalar(r["w"]) << "   tau: " << scalar(r["tau"]) << '\n';
  if (r.contains("note")) os << "  " << scalar(r["note"]) << '\n';
  if (r.contains("parity_patterns")) {
    for (const auto& pat : r["parity_patterns"]) {
      for (const auto& row : pat) os << "    " << row.dump() << '\n';
      os << '\n';
    }
  }
  const json& c = r["classes"];
  if (c.is_null()) return;
  os << "  coverage: " << scalar(c["coverage"]) << '\n';
  os << "  trivial corner class:\n";
  grid(os, c["trivial_corner"], "    ");
  if (c["trivial_midedge"].is_null()) {
    os << "  trivial mid-edge class: none (" << scalar(c["trivial_midedge_note"]) << ")\n";
  } else {
    os << "  trivial mid-edge class:\n";
    grid(os, c["trivial_midedge"], "    ");
  }
  for (const auto& nt : c["nontrivial"]) {
    os << "  nontrivial class from C_p member " << scalar(nt["member"]) << ":\n";
    grid(os, nt["grid"], "    ");
  }
  os << "  count bound: " << scalar(c["count_bound"]) << '\n';
  if (!c["oracle"].is_null()) {
    os << "  oracle count: " << scalar(c["oracle"]["count"])
       << " (within bound: " << scalar(c["oracle"]["within_bound"])
       << ", matches generated orbits: " << scalar(c["oracle"]["matches_generated"])
       << ")\n";
  }
}

void table(std::ostream& os, const json& r) {
  os << std::setw(8) << "p" << std::setw(10) << "|S_p|" << std::setw(8) << "|C_p|"
     << std::setw(10) << "bound" << "  coverage\n";
  for (const auto& row : r["rows"]) {
    os << std::setw(8) << scalar(row["p"]) << std::setw(10) << scalar(row["qr_count"])
       << std::setw(8) << scalar(row["cp_count"]) << std::setw(10)
       << scalar(row["bound"]) << "  " << scalar(row["coverage"]) << '\n';
  }
}

void verify(std::ostream& os, const json& r) {
  grid(os, r["grid"], "  ");
  os << "magic: " << scalar(r["magic"]) << "   total: " << scalar(r["total"])
     << "   total = 3*center: " << scalar(r["total_is_three_centers"]) << '\n';
  os << "square-entried: " << scalar(r["square_entried"])
     << "   distinct: " << scalar(r["distinct"]) << '\n';
  os << "gcd: " << scalar(r["gcd"]) << "   primitive: " << scalar(r["primitive"]) << '\n';
  if (!r["reduced"].is_null()) {
    os << "reduced form:\n";
    grid(os, r["reduced"], "  ");
  }
  os << "center root: " << scalar(r["center_root"]) << '\n';
  if (!r["center_check"].is_null()) {
    const json& cc = r["center_check"];
    for (const auto& f : cc["factors"]) {
      os << "  prime " << scalar(f["prime"]) << ": "
         << (f["admissible"].get<bool>() ? "admissible" : "inadmissible") << '\n';
    }
    if (cc["degenerate_center"].get<bool>()) {
      os << "  warning: center root <= 2 is impossible for distinct entries\n";
    }
  }
  for (const auto& rc : r["residue_classes"]) {
    os << "residue class mod " << scalar(rc["p"]) << ":\n";
    grid(os, rc["grid"], "  ");
    if (rc.contains("classification")) {
      os << "  magic: " << scalar(rc["magic"])
         << "   classification: " << scalar(rc["classification"]) << '\n';
    } else {
      os << "  parity pattern: " << scalar(rc["parity_pattern"]) << '\n';
    }
  }
}

void construct(std::ostream& os, const json& r) {
  os << "coverage: " << scalar(r["coverage"]) << '\n';
  if (r.contains("sweep_tried")) {
    os << "congruum sweep tried " << r["sweep_tried"].size() << " (m, n) pairs\n";
  }
  if (!r["covered"].get<bool>()) {
    os << scalar(r["error"]) << ": " << scalar(r["note"]) << '\n';
    return;
  }
  os << "route: " << scalar(r["route"]) << '\n';
  if (!r["chain"].is_null()) {
    const json& c = r["chain"];
    const json& pr = c["progression"];
    os << "  " << scalar(pr["x"]) << "^2 - " << scalar(pr["y"]) << "^2 = "
       << scalar(pr["y"]) << "^2 - " << scalar(pr["z"]) << "^2 = " << scalar(pr["d"]) << '\n';
    os << "  residues: " << scalar(c["x_squared"]) << ", " << scalar(c["y_squared"])
       << ", " << scalar(c["z_squared"]) << "   difference: " << scalar(c["difference"])
       << " = " << scalar(c["root"]) << "^2\n";
    os << "  1/" << scalar(c["root"]) << " = " << scalar(c["root_inverse"])
       << "   1/difference = " << scalar(c["scale"]) << '\n';
  }
  if (!r["table_member"].is_null()) {
    os << "  C_p member: " << scalar(r["table_member"]) << '\n';
  }
  const json& t = r["triple"];
  os << "unit triple (alpha, beta, gamma) = (" << scalar(t["alpha"]) << ", "
     << scalar(t["beta"]) << ", " << scalar(t["gamma"]) << "), squares ("
     << scalar(t["alpha_squared"]) << ", " << scalar(t["beta_squared"]) << ", "
     << scalar(t["gamma_squared"]) << ")\n";
  os << "nontrivial class:\n";
  grid(os, r["grid"], "  ");
}

void search(std::ostream& os, const json& r) {
  for (const auto& note : r["notes"]) os << "# " << scalar(note) << '\n';
  os << "centers " << scalar(r["e_range"][0]) << ".." << scalar(r["e_range"][1])
     << ": pruned " << scalar(r["pruned_centers"]) << ", with >= 4 pairs "
     << scalar(r["centers_with_four_pairs"]) << ", candidates "
     << scalar(r["candidates_tested"]) << '\n';
  os << "hits: " << r["hits"].size() << '\n';
  for (const auto& g : r["hits"]) grid(os, g, "  ");
  os << "near misses: " << r["near_misses"].size() << '\n';
  for (const auto& nm : r["near_misses"]) {
    os << "  (" << scalar(nm["correct_lines"]) << "/8 lines)\n";
    grid(os, nm["grid"], "    ");
  }
}

}  // namespace

std::string render_text(const OutputDocument& doc) {
  std::ostringstream os;
  const json& r = doc.results;
  if (doc.command == "analyze") {
    analyze(os, r);
  } else if (doc.command == "table") {
    table(os, r);
  } else if (doc.command == "verify") {
    verify(os, r);
  } else if (doc.command == "construct") {
    construct(os, r);
  } else if (doc.command == "search") {
    search(os, r);
  } else {
    os << r.dump(2) << '\n';
  }
  return os.str();
}

std::string render_csv(const OutputDocument& doc) {
  if (doc.command != "table") {
    throw Error(Errc::bad_parameters, "csv output is only available for table");
  }
  std::ostringstream os;
  os << "p,qr_count,cp_count,coverage,bound\n";
  for (const auto& row : doc.results["rows"]) {
    os << row["p"].get<std::uint64_t>() << ',' << row["qr_count"].get<std::uint64_t>()
       << ',' << row["cp_count"].get<std::uint64_t>() << ','
       << row["coverage"].get<std::string>() << ',' << row["bound"].get<std::uint64_t>()
       << '\n';
  }
  return os.str();
}

}  // namespace residuum::cli
