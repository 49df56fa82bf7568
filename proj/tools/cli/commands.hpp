#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "cli/output_document.hpp"
#include "residuum/integer_squares.hpp"

namespace residuum::cli {

struct CommandOptions {
  std::uint64_t max_oracle_p = 100;
  int near_miss_threshold = 7;
  bool primitive_only = true;
  unsigned workers = 1;
};

/// Exit codes of the residuum executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitSearchHit = 10;

OutputDocument cmd_analyze(std::uint64_t p, const CommandOptions& options = {});

/// Throws BadRange when max < 5.
OutputDocument cmd_table(std::uint64_t max, const CommandOptions& options = {});

/// Throws FileNotFound or ParseError.
OutputDocument cmd_verify(const std::filesystem::path& path);
OutputDocument cmd_verify_text(std::string_view text, std::string_view source = "<text>");

OutputDocument cmd_construct(std::uint64_t p);

OutputDocument cmd_search(std::uint64_t e_min, std::uint64_t e_max,
                          const CommandOptions& options = {});

/// Nine whitespace-separated nonnegative integers, row-major. Lines whose
/// first non-blank character is '#' are ignored. ParseError messages carry
/// "line:column".
IntGrid parse_square(std::string_view text);

/// kExitSearchHit for a search document with hits, kExitOk otherwise.
int exit_code_for(const OutputDocument& doc);

}  // namespace residuum::cli
