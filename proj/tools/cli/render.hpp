#pragma once

#include <string>

#include "cli/output_document.hpp"

namespace residuum::cli {

/// Plain-text rendering for terminals. Square cells are annotated as
/// "v=r^2" with the smaller root whenever a root exists.
std::string render_text(const OutputDocument& doc);

/// CSV rendering; only the table command has a tabular payload.
/// Throws BadParameters for other commands.
std::string render_csv(const OutputDocument& doc);

}  // namespace residuum::cli
