#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosetlab/word.hpp"

namespace cosetlab {

/// A finitely presented group < names | relators >.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::size_t generator_count() const noexcept {
    return generator_names.size();
  }

  friend bool operator==(const Presentation &, const Presentation &) = default;
};

/// Generators of a subgroup H, given as words in the parent group.
struct SubgroupSpec {
  std::vector<Word> generators;

  friend bool operator==(const SubgroupSpec &, const SubgroupSpec &) = default;
};

/// Parses `< a, b | a^2, (a*b)^3 = b^-1, ... >`.
///
/// Relators are products of `ident`, `1` and parenthesized products, each
/// optionally raised to an integer power, joined by `*`. A chain of equations
/// `t0 = t1 = ... = tk` contributes the relators `t_i * t_{i+1}^-1`; empty
/// results are dropped. Throws ParseError on malformed input.
Presentation parse_presentation(std::string_view text);

/// Parses a bare word over already-declared generator names.
Word parse_word(std::string_view text,
                const std::vector<std::string> &generator_names);

/// Canonical text form; parse_presentation(to_string(p)) == p.
std::string to_string(const Presentation &p);

/// Reads a UTF-8 file holding one presentation.
Presentation load_presentation_file(const std::string &path);

struct CatalogEntry {
  std::string name;
  std::string description;
  Presentation presentation;
  /// Known counts of index-d subgroup classes, d = 1, 2, ...
  std::optional<std::vector<std::size_t>> eta_oracle;
};

/// Built-in groups: trefoil, fig8, trefoil-0surgery, fig8-0surgery, a6-demo.
const CatalogEntry &catalog_lookup(std::string_view name);
std::vector<std::string> catalog_names();

/// Resolves a catalog name or, failing that, a path to a presentation file.
Presentation resolve_group(const std::string &selector);

} // namespace cosetlab
