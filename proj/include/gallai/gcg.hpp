#pragma once

#include "gallai/colored_graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace gallai {

/// GCG text format:
///
///   gcg 1
///   <n> <k>
///   row i (1 <= i <= n-1): i colors for the edges {i,0}, {i,1}, ..., {i,i-1}
///
/// '#' starts a comment running to end of line; blank lines are ignored.
std::string encode(const ColoredCompleteGraph& g);

/// Throws ParseError with the 1-based line and column of the first problem.
ColoredCompleteGraph decode(std::string_view text);

/// encode() followed by "# <comment>" lines, one per line of comment.
std::string encode_with_comment(const ColoredCompleteGraph& g, std::string_view comment);

ColoredCompleteGraph read_gcg_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace gallai
