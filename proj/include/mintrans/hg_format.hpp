#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mintrans/hypergraph.hpp"

namespace mintrans {

/**
 * Reads the line-oriented .hg format:
 *
 *   # comment                      anything after '#' is ignored
 *   vertices: a b c d              optional, first directive; fixes the universe order
 *   a b                            one edge per line, whitespace-separated labels
 *   -                              the empty edge
 *
 * Without a `vertices:` line the universe is every label in order of first
 * appearance. Throws ParseError on repeated labels within a line, labels
 * outside a declared universe, and inputs with neither edges nor a universe.
 */
[[nodiscard]] Hypergraph parse_hg(std::string_view text);

/// Parses edges over the universe (and labels) of `universe`. A `vertices:`
/// line in the text may only name labels of that universe.
[[nodiscard]] Hypergraph parse_hg(std::string_view text, const Hypergraph& universe);

/// Writes a `vertices:` header followed by one edge per line.
[[nodiscard]] std::string serialize_hg(const Hypergraph& h);

/// Members as labels in ascending universe order, space-separated; "-" for ∅.
[[nodiscard]] std::string format_set(const Hypergraph& h, const VertexSet& s);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace mintrans
