#include <filesystem>

#include "cosetlab/error.hpp"
#include "cosetlab/presentation.hpp"

namespace cosetlab {

namespace {

// Surgery groups are the knot group plus the longitude of the meridian x as a
// relator. The trefoil longitude is (xy)^3 x^-6; the figure-eight longitude
// y x^-1 y^-1 x^2 y^-1 x^-1 y commutes with x and has zero exponent sum.
std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"trefoil", "trefoil knot complement",
                     parse_presentation("< x, y | x*y*x = y*x*y >"),
                     std::nullopt});
  entries.push_back(
      {"fig8", "figure-eight knot complement",
       parse_presentation("< x, y | y*x*y^-1*x*y = x*y*x^-1*y*x >"),
       std::nullopt});
  entries.push_back(
      {"trefoil-0surgery", "0-surgery on the trefoil knot",
       parse_presentation("< x, y | x*y*x = y*x*y, (x*y)^3 = x^6 >"),
       std::vector<std::size_t>{1, 1, 2, 2, 1, 5, 3, 2, 4, 1, 1,  12, 3,
                                3, 4, 3, 1, 17, 3, 2, 8, 1, 1, 27, 2}});
  entries.push_back(
      {"fig8-0surgery", "0-surgery on the figure-eight knot",
       parse_presentation("< x, y | y*x*y^-1*x*y = x*y*x^-1*y*x, "
                          "y*x^-1*y^-1*x^2*y^-1*x^-1*y >"),
       std::vector<std::size_t>{1, 1, 1, 2, 2, 5, 1, 2, 2, 4, 3, 17,
                                1, 1, 2, 3, 1, 6, 3, 6, 1, 3, 1, 43}});
  entries.push_back(
      {"a6-demo", "two-generator presentation of A6",
       parse_presentation("< a, b | a^2=b^4=(a*b)^5=(a*b^2)^5=1 >"),
       std::nullopt});
  return entries;
}

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

} // namespace

const CatalogEntry &catalog_lookup(std::string_view name) {
  for (const auto &e : catalog())
    if (e.name == name)
      return e;
  throw Error(ErrorCode::UnknownGroup,
              "unknown catalog group '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto &e : catalog())
    names.push_back(e.name);
  return names;
}

Presentation resolve_group(const std::string &selector) {
  for (const auto &e : catalog())
    if (e.name == selector)
      return e.presentation;
  if (std::filesystem::exists(selector))
    return load_presentation_file(selector);
  throw Error(ErrorCode::UnknownGroup,
              "'" + selector + "' is neither a catalog group nor a file");
}

} // namespace cosetlab
