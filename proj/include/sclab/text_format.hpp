#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sclab/automaton.hpp"

namespace sclab {

/// Reads the line-oriented `dfa` text format:
///
///     dfa
///     alphabet a b c
///     states 2
///     start 0
///     final 1
///     0 a 1
///     ...            (one line per state/symbol pair, each exactly once)
///
/// Lines whose first non-blank character is `#` and blank lines are ignored.
/// Throws ParseError with the offending line number.
Dfa parse_dfa(std::string_view text);
Dfa read_dfa_file(const std::filesystem::path& path);

/// Emits the same format: header sections in order, transitions sorted by
/// (state, symbol index), trailing newline.
std::string emit_dfa(const Dfa& d);

/// Graphviz digraph. Finals are double circles; an invisible point node marks
/// the start; one edge per (state, symbol) labelled with the symbol name.
std::string emit_dot(const Dfa& d, std::string_view graph_name = "dfa");

}  // namespace sclab
