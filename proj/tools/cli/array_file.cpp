#include "cli/array_file.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "heffter/errors.hpp"

namespace heffter::cli {

using nlohmann::json;

namespace {

// Square files with v = 2n^2 + t get the same context construct() would use.
ModulusContext context_for(std::int64_t n, std::int64_t t, std::int64_t v, std::size_t rows) {
  if (n < 1 || t < 1 || v < 1) throw MalformedInput("n, t and v must be positive");
  try {
    if (rows == static_cast<std::size_t>(n) && n <= kMaxOrder && v == 2 * n * n + t) {
      return ModulusContext::tight(n, t);
    }
    return ModulusContext::with_modulus(v, t);
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
}

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw MalformedInput("not an integer: '" + std::string(s) + "'");
  }
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

json array_to_json(const NzsArray& a) {
  json rows = json::array();
  for (const auto& row : a.signed_rows()) {
    json line = json::array();
    for (const auto& cell : row) line.push_back(cell ? json(*cell) : json(nullptr));
    rows.push_back(std::move(line));
  }
  return json{{"n", a.cols()},
              {"t", a.ctx().t()},
              {"v", a.ctx().v()},
              {"provenance", std::string(to_string(a.provenance()))},
              {"rows", std::move(rows)}};
}

NzsArray array_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw MalformedInput("array file must be a JSON object");
    for (const char* key : {"n", "t", "v", "rows"}) {
      if (!doc.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
    }
    const auto n = doc.at("n").get<std::int64_t>();
    const auto t = doc.at("t").get<std::int64_t>();
    const auto v = doc.at("v").get<std::int64_t>();
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || rows.empty()) throw MalformedInput("'rows' must be a non-empty array");

    Provenance prov = Provenance::external;
    if (doc.contains("provenance")) {
      auto parsed = provenance_from_string(doc.at("provenance").get<std::string>());
      if (!parsed) throw MalformedInput("unknown provenance");
      prov = *parsed;
    }

    NzsArray a(context_for(n, t, v, rows.size()), rows.size(), static_cast<std::size_t>(n), prov);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        throw MalformedInput("row " + std::to_string(r) + " does not have n entries");
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c].is_null()) continue;
        if (!row[c].is_number_integer()) {
          throw MalformedInput("cell (" + std::to_string(r) + "," + std::to_string(c) + ") is not an integer");
        }
        a.set_value(r, c, row[c].get<std::int64_t>());
      }
    }
    return a;
  } catch (const json::exception& e) {
    throw MalformedInput(e.what());
  }
}

std::string array_to_csv(const NzsArray& a) {
  std::ostringstream out;
  out << "# n=" << a.cols() << " t=" << a.ctx().t() << " v=" << a.ctx().v()
      << " provenance=" << to_string(a.provenance()) << '\n';
  for (const auto& row : a.signed_rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      if (row[c]) out << *row[c];
    }
    out << '\n';
  }
  return out.str();
}

NzsArray array_from_csv(std::string_view text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string_view::npos) lines.pop_back();
  if (lines.empty() || lines.front().substr(0, 1) != "#") throw MalformedInput("CSV must start with a '#' header");

  std::int64_t n = 0, t = 0, v = 0;
  Provenance prov = Provenance::external;
  for (auto field : split(lines.front().substr(1), ' ')) {
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    if (key == "n") n = parse_int(value);
    else if (key == "t") t = parse_int(value);
    else if (key == "v") v = parse_int(value);
    else if (key == "provenance") {
      auto value_trimmed = value;
      while (!value_trimmed.empty() && value_trimmed.back() == '\r') value_trimmed.remove_suffix(1);
      auto parsed = provenance_from_string(value_trimmed);
      if (!parsed) throw MalformedInput("unknown provenance");
      prov = *parsed;
    }
  }
  if (lines.size() < 2) throw MalformedInput("CSV has no rows");

  NzsArray a(context_for(n, t, v, lines.size() - 1), lines.size() - 1, static_cast<std::size_t>(n), prov);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto cells = split(lines[r], ',');
    if (cells.size() != static_cast<std::size_t>(n)) {
      throw MalformedInput("row " + std::to_string(r - 1) + " does not have n entries");
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].find_first_not_of(" \t\r") == std::string_view::npos) continue;
      a.set_value(r - 1, c, parse_int(cells[c]));
    }
  }
  return a;
}

NzsArray parse_array(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw MalformedInput("empty input");
  if (text[first] == '{') {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw MalformedInput("invalid JSON");
    return array_from_json(doc);
  }
  return array_from_csv(text);
}

}  // namespace heffter::cli
