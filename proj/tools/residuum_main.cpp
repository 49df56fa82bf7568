#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/render.hpp"
#include "residuum/error.hpp"

namespace {

using residuum::Errc;
using namespace residuum::cli;

unsigned worker_count() {
  if (const char* env = std::getenv("RESIDUUM_THREADS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid RESIDUUM_THREADS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::file_not_found:
      return kExitInput;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"residuum: magic squares of squares modulo primes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  CommandOptions options;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "structured", "csv"}));
  app.add_option("--max-oracle-p", options.max_oracle_p,
                 "Largest p for which analyze runs the brute-force oracle");
  app.add_option("--near-miss-threshold", options.near_miss_threshold,
                 "Minimum correct lines (of 8) for a near miss")
      ->check(CLI::Range(0, 8));
  app.add_flag("--primitive-only,!--no-primitive-only", options.primitive_only,
               "Skip centers with a prime factor = 3 mod 4 (default on)");

  std::uint64_t p = 0;
  auto* analyze = app.add_subcommand("analyze", "Residues, classes and bounds for F_p");
  analyze->add_option("p", p, "Prime modulus")->required();

  std::uint64_t max = 0;
  auto* table = app.add_subcommand("table", "One row per prime p = 1 mod 4 up to max");
  table->add_option("max", max, "Largest prime to tabulate")->required();

  std::string path;
  auto* verify = app.add_subcommand("verify", "Check a 3x3 grid read from a file");
  verify->add_option("path", path, "File with 9 integers, row-major")->required();

  auto* construct = app.add_subcommand("construct", "Build a unit triple mod p from a congruum");
  construct->add_option("p", p, "Prime modulus, p = 1 mod 4")->required();

  std::uint64_t e_min = 0, e_max = 0;
  auto* search = app.add_subcommand("search", "Search centers e_min..e_max for magic squares of squares");
  search->add_option("e_min", e_min, "Smallest center root")->required();
  search->add_option("e_max", e_max, "Largest center root")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  options.workers = worker_count();

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    OutputDocument doc;
    if (command == "analyze") {
      doc = cmd_analyze(p, options);
    } else if (command == "table") {
      doc = cmd_table(max, options);
    } else if (command == "verify") {
      doc = cmd_verify(path);
    } else if (command == "construct") {
      doc = cmd_construct(p);
    } else {
      doc = cmd_search(e_min, e_max, options);
    }

    if (format == "structured") {
      std::cout << serialize(doc);
    } else if (format == "csv") {
      std::cout << render_csv(doc);
    } else {
      std::cout << render_text(doc);
    }
    return residuum::cli::exit_code_for(doc);
  } catch (const residuum::Error& e) {
    if (format == "structured") {
      OutputDocument err;
      err.command = command;
      err.results = {{"error", {{"code", residuum::to_string(e.code())}, {"message", e.what()}}}};
      std::cout << serialize(err);
    }
    std::cerr << "error: " << residuum::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
