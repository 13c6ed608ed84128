#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "heffter/array.hpp"

namespace heffter::cli {

/// Structural problem with an input file (bad JSON, wrong shape, bad header).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON: {"n", "t", "v", "provenance", "rows": [[signed or null, ...], ...]}.
// The header n is the column count; rows may be fewer or more for
// rectangular external arrays.
nlohmann::json array_to_json(const NzsArray& a);
NzsArray array_from_json(const nlohmann::json& doc);

// CSV: "# n=.. t=.. v=.. provenance=.." then one line of signed values per
// row, empty fields for empty cells.
std::string array_to_csv(const NzsArray& a);
NzsArray array_from_csv(std::string_view text);

/// Picks JSON when the first non-blank character is '{', CSV otherwise.
NzsArray parse_array(std::string_view text);

}  // namespace heffter::cli
