#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "inrl/algebra.hpp"
#include "inrl/decomposition.hpp"
#include "inrl/gluing.hpp"

namespace inrl {

/// Reads the line-oriented algebra format:
///
///   elements bot a -a top
///   one top
///   neg top -a a bot
///   join <row 0>
///   <row 1> ...
///   fusion <row 0>
///   <row 1> ...
///
/// A table row may also start on the line after its keyword. Lines whose
/// first non-blank character is '#' are comments. Section keywords cannot
/// be element names. Throws ParseError with a 1-based line and column.
FiniteInRL parse_algebra(std::string_view text);

/// Sections in fixed order, single spaces, first table row on the keyword
/// line, trailing newline.
std::string emit_algebra(const FiniteInRL& alg);

enum class OrderKind { lattice, monoidal };

/// Hasse diagram of one order as a DOT digraph, edges from lower to upper
/// element sorted by (source, target) index.
std::string dot_export(const FiniteInRL& alg, OrderKind order);

/// Gluing spec file:
///
///   lower PATH
///   upper PATH
///   a TOKEN
///   b TOKEN
///   phi
///   x -> y
///
/// Paths are relative to the spec file. The names are resolved against
/// the loaded algebras, not here.
struct GluingSpecFile {
  std::string lower;
  std::string upper;
  NamedGluing gluing;

  friend bool operator==(const GluingSpecFile&, const GluingSpecFile&) = default;
};

GluingSpecFile parse_gluing_spec(std::string_view text);
std::string emit_gluing_spec(const GluingSpecFile& spec);

bool looks_like_gluing_spec(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// An algebra file, or a spec file which is glued. A spec may refer to
/// other spec files.
FiniteInRL load_algebra(const std::filesystem::path& path);

/// Loads both sides of a spec file and resolves it.
GluingSpec load_gluing_spec(const std::filesystem::path& path);

/// Writes root.rlat for a leaf, otherwise root.glue; further nodes go to
/// node_K.glue and leaves to leaf_K.rlat.
void write_tree(const DecompositionTree& tree, const std::filesystem::path& dir);

DecompositionTree read_tree(const std::filesystem::path& dir);

}  // namespace inrl
