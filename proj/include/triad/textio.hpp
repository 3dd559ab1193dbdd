#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triad/workspace.hpp"

namespace triad {

struct Diagnostic {
  enum class Severity { Error, Warning };
  enum class Category { Syntax, Reference, Invariant };

  Severity severity = Severity::Error;
  Category category = Category::Syntax;
  int line = 0;  // 1-based
  int col = 0;   // 1-based
  std::string message;

  std::string str() const;  // "line L col C: message"
};

struct ParseResult {
  std::optional<Workspace> workspace;  // engaged only when diagnostics carry no errors
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return workspace.has_value(); }
};

/// Parses the workspace block format. All-or-nothing: any error yields no
/// workspace. Syntax errors stop the parse; reference and invariant errors
/// are collected across the whole file.
ParseResult parse_workspace(std::string_view text);

/// Canonical form: blocks ordered by kind then id, every key printed, item
/// lists sorted. parse(serialize(w)) is structurally equal to w.
std::string serialize_workspace(const Workspace& w);

/// Quotes an atom for file or report output: the bare text when it matches
/// [A-Za-z0-9_.+-]+, a double-quoted escaped string otherwise.
std::string quote_atom(const Atom& atom);

std::string render_triad_tree(const TriadTree& tree);

}  // namespace triad
