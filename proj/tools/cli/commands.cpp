#include "cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/array_file.hpp"
#include "heffter/constructions.hpp"
#include "heffter/errors.hpp"
#include "heffter/oracle.hpp"

namespace heffter::cli {

using nlohmann::json;

namespace {

// Thrown inside a command to leave with a given exit code.
struct Exit {
  int code;
  std::string message;
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw Exit{kCheckFailed, "cannot write " + path};
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Exit{kCheckFailed, "cannot read " + path};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

json line_ref(const LineRef& l) {
  return json{{"axis", std::string(to_string(l.axis))}, {"index", l.index}};
}

json vertices_json(const std::vector<Residue>& xs) {
  json out = json::array();
  for (Residue x : xs) out.push_back(x.value);
  return out;
}

json directions_json(const std::vector<Direction>& dirs) {
  json out = json::array();
  for (Direction d : dirs) out.push_back(d == Direction::forward ? "forward" : "reverse");
  return out;
}

json partition_json(const PartitionReport& p) {
  json defects = json::array();
  for (const auto& d : p.defects) {
    defects.push_back(json{{"edge", {d.edge.lo, d.edge.hi}}, {"multiplicity", d.multiplicity}});
  }
  return json{{"ok", p.ok},
              {"expected_edges", p.expected_edges},
              {"covered_edges", p.covered_edges},
              {"defects", std::move(defects)}};
}

struct Common {
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::string out;
  unsigned threads = 1;
};

void add_nt(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "Array order")->required();
  cmd->add_option("--t", c.t, "Order of the subgroup J")->required();
}

int cmd_construct(const Common& c, const std::string& format, std::ostream& out) {
  const NzsArray a = construct(c.n, c.t);
  emit(format == "csv" ? array_to_csv(a) : dump(array_to_json(a)), c.out, out);
  return kOk;
}

int cmd_verify(const std::string& in, const std::string& report_path, std::ostream& out, std::ostream& err) {
  const std::string text = slurp(in);
  NzsArray a = [&] {
    try {
      return parse_array(text);
    } catch (const MalformedInput& e) {
      throw Exit{kMalformed, in + ": " + e.what()};
    }
  }();
  const auto report = check_axioms(a);
  emit(dump(report_to_json(report)), report_path, out);
  if (!report.overall) err << "verify: array fails at least one check\n";
  return report.overall ? kOk : kCheckFailed;
}

int cmd_decompose(const Common& c, const std::string& axis_name, bool orthogonal, bool full, std::ostream& out) {
  const NzsArray a = construct(c.n, c.t);
  const Axis axis = axis_name == "cols" ? Axis::cols : Axis::rows;
  const Decomposition d = line_decomposition(a, axis, c.threads);
  const PartitionReport partition = check_partition(d, c.threads);

  json base = json::array();
  for (const auto& b : d.base_blocks) base.push_back(vertices_json(b.vertices));
  json doc{{"n", c.n},
           {"t", c.t},
           {"v", a.ctx().v()},
           {"axis", std::string(to_string(axis))},
           {"base_blocks", std::move(base)},
           {"block_count", d.blocks.size()},
           {"partition", partition_json(partition)}};
  if (full) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(vertices_json(b.vertices));
    doc["blocks"] = std::move(blocks);
  }
  bool ok = partition.ok;
  if (orthogonal) {
    const Decomposition other = line_decomposition(a, axis == Axis::rows ? Axis::cols : Axis::rows, c.threads);
    const auto ortho = axis == Axis::rows ? check_orthogonal(d, other) : check_orthogonal(other, d);
    doc["orthogonal"] = ortho.ok;
    if (ortho.witness) doc["orthogonal_witness"] = {ortho.witness->first, ortho.witness->second};
    ok = ok && ortho.ok;
  }
  emit(dump(doc), c.out, out);
  return ok ? kOk : kCheckFailed;
}

int cmd_embed(const Common& c, std::uint64_t seed, std::uint64_t max_tries, const std::string& faces_path,
              std::ostream& out, std::ostream& err) {
  const NzsArray a = construct(c.n, c.t);
  CompatibilitySearch opts;
  opts.seed = seed;
  opts.max_tries = max_tries;
  opts.threads = c.threads;
  const auto found = find_compatible_orderings(a, opts);
  if (!found.ordering) {
    throw Exit{kSearchExhausted, "no compatible orderings after " + std::to_string(found.tries) +
                                     (found.exhaustive ? " patterns (exhaustive)" : " random patterns")};
  }
  const auto report = trace_faces(build_rho0(a, *found.ordering));

  json doc = embedding_to_json(report, false);
  doc["n"] = c.n;
  doc["t"] = c.t;
  doc["v"] = a.ctx().v();
  doc["search"] = json{{"seed", seed},
                       {"tries", found.tries},
                       {"exhaustive", found.exhaustive},
                       {"rows", directions_json(found.ordering->rows)},
                       {"cols", directions_json(found.ordering->cols)}};
  try {
    const auto check = predicted_spectrum_check(report, c.n, c.t);
    doc["prediction"] = json{{"rule", check.rule}, {"ok", check.ok}, {"violations", check.violations}};
  } catch (const UnsupportedParameters&) {
    doc["prediction"] = nullptr;
  }
  if (!faces_path.empty()) emit(dump(embedding_to_json(report, true)["faces"]), faces_path, out);
  emit(dump(doc), c.out, out);
  const bool ok = report.closed && report.two_colorable && report.euler_even;
  if (!ok) err << "embed: traced embedding failed a consistency check\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_export_graph(const Common& c, const std::string& format, std::ostream& out) {
  const auto ctx = ModulusContext::tight(c.n, c.t);
  emit(format == "dot" ? graph_as_dot(ctx) : graph_as_edgelist(ctx), c.out, out);
  return kOk;
}

int cmd_oracle(std::int64_t t, bool reduce, const std::string& path, std::ostream& out) {
  const auto arrays = oracle::enumerate_nh22(t, reduce);
  json list = json::array();
  bool agree = true;
  for (const auto& a : arrays) {
    list.push_back(array_to_json(a)["rows"]);
    agree = agree && check_axioms(a).overall;
  }
  json doc{{"t", t},
           {"v", 8 + t},
           {"reduce_symmetry", reduce},
           {"count", arrays.size()},
           {"verifier_agrees", agree},
           {"arrays", std::move(list)}};
  emit(dump(doc), path, out);
  return agree ? kOk : kCheckFailed;
}

int cmd_simple_ordering(std::int64_t v, std::int64_t t, const std::vector<std::int64_t>& elements,
                        std::size_t bound, std::ostream& out) {
  const auto ctx = ModulusContext::with_modulus(v, t);
  std::vector<Residue> xs;
  for (auto x : elements) xs.push_back(ctx.reduce(x));
  const auto found = find_simple_ordering(xs, ctx, bound);
  json doc{{"v", v}, {"found", found.has_value()}};
  if (found) {
    json ordering = json::array();
    for (Residue x : *found) ordering.push_back(ctx.signed_value(x));
    doc["ordering"] = std::move(ordering);
  }
  out << dump(doc);
  return found ? kOk : kCheckFailed;
}

}  // namespace

unsigned resolve_threads(unsigned flag) {
  if (const char* env = std::getenv("HEFFTER_THREADS")) {
    unsigned value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
  }
  return flag == 0 ? 1 : flag;
}

json report_to_json(const VerificationReport& r) {
  json cells = json::array();
  for (const Cell& c : r.subgroup_cells) cells.push_back({c.row, c.col});
  json zero = json::array();
  for (const auto& l : r.zero_sum_lines) zero.push_back(line_ref(l));
  json first = nullptr;
  if (r.first_not_simple) {
    const auto& w = r.first_not_simple->witness;
    first = line_ref(r.first_not_simple->line);
    first["kind"] = w.kind == SimplicityWitness::Kind::zero_sum ? "zero_sum" : "repeated_sum";
    first["first"] = w.first;
    first["second"] = w.second;
  }
  return json{{"overall", r.overall},
              {"filled_counts_ok", r.filled_counts_ok},
              {"row_counts", r.row_counts},
              {"col_counts", r.col_counts},
              {"support_ok", r.support_ok},
              {"missing_classes", r.missing_classes},
              {"duplicated_classes", r.duplicated_classes},
              {"subgroup_cells", std::move(cells)},
              {"sums_ok", r.sums_ok},
              {"zero_sum_lines", std::move(zero)},
              {"globally_simple", r.globally_simple},
              {"first_not_simple", std::move(first)}};
}

json embedding_to_json(const EmbeddingReport& r, bool with_faces) {
  json spectrum = json::array();
  for (const auto& e : r.spectrum) {
    spectrum.push_back(json{{"color", std::string(to_string(e.color))}, {"length", e.length}, {"count", e.count}});
  }
  json doc{{"V", r.vertices},
           {"E", r.edges},
           {"F", r.face_count},
           {"euler_characteristic", r.euler_characteristic},
           {"genus", r.genus},
           {"closed", r.closed},
           {"two_colorable", r.two_colorable},
           {"spectrum", std::move(spectrum)}};
  if (with_faces) {
    json faces = json::array();
    for (const auto& f : r.faces) {
      faces.push_back(json{{"color", std::string(to_string(f.color))},
                           {"generator", f.generator},
                           {"boundary", vertices_json(f.boundary)}});
    }
    doc["faces"] = std::move(faces);
  }
  return doc;
}

std::string graph_as_dot(const ModulusContext& ctx) {
  std::ostringstream out;
  out << "graph K {\n";
  for (std::int64_t x = 0; x < ctx.v(); ++x) out << "  " << x << " [part=" << x % ctx.step() << "];\n";
  for (const Edge& e : multipartite_edges(ctx)) out << "  " << e.lo << " -- " << e.hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_as_edgelist(const ModulusContext& ctx) {
  std::ostringstream out;
  for (const Edge& e : multipartite_edges(ctx)) out << e.lo << ' ' << e.hi << '\n';
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and check non-zero sum Heffter arrays, their decompositions and embeddings", "heffter"};
  app.require_subcommand(1);
  unsigned threads_flag = 1;
  app.add_option("--threads", threads_flag, "Worker threads (HEFFTER_THREADS overrides)")->check(CLI::PositiveNumber);

  Common c;
  std::string format = "json";
  std::string in, report_path, axis = "rows", faces_path;
  bool orthogonal = false, full = false, reduce = false;
  std::uint64_t seed = 1, max_tries = CompatibilitySearch{}.max_tries;
  std::int64_t modulus = 0;
  std::size_t bound = kDefaultOrderingBound;
  std::vector<std::int64_t> elements;

  auto* construct_cmd = app.add_subcommand("construct", "Build NH_t(n;n) and write it as JSON or CSV");
  add_nt(construct_cmd, c);
  construct_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  construct_cmd->add_option("--out", c.out, "Output file (stdout if omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "Check an array file against the definition");
  verify_cmd->add_option("--in", in, "Array file (JSON or CSV)")->required();
  verify_cmd->add_option("--report", report_path, "Report file (stdout if omitted)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Develop the row or column path decomposition");
  add_nt(decompose_cmd, c);
  decompose_cmd->add_option("--axis", axis)->check(CLI::IsMember({"rows", "cols"}));
  decompose_cmd->add_flag("--check-orthogonal", orthogonal, "Also check orthogonality against the other axis");
  decompose_cmd->add_flag("--full", full, "Include every developed block");
  decompose_cmd->add_option("--out", c.out);

  auto* embed_cmd = app.add_subcommand("embed", "Trace the embedding from compatible orderings");
  add_nt(embed_cmd, c);
  embed_cmd->add_option("--seed", seed);
  embed_cmd->add_option("--max-tries", max_tries);
  embed_cmd->add_option("--faces", faces_path, "Write face boundaries to this file");
  embed_cmd->add_option("--out", c.out);

  auto* graph_cmd = app.add_subcommand("export-graph", "Write K_{v/t x t} as DOT or an edge list");
  add_nt(graph_cmd, c);
  graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "edgelist"}));
  graph_cmd->add_option("--out", c.out);

  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate every globally simple NH_t(2;2)");
  oracle_cmd->add_option("--t", c.t)->required();
  oracle_cmd->add_flag("--reduce-symmetry", reduce);
  oracle_cmd->add_option("--out", c.out);

  auto* ordering_cmd = app.add_subcommand("simple-ordering", "Search a simple ordering of a small multiset");
  ordering_cmd->add_option("--v", modulus, "Modulus")->required();
  ordering_cmd->add_option("--t", c.t, "Subgroup order")->default_val(1);
  ordering_cmd->add_option("--elements", elements, "Comma-separated integers")->required()->delimiter(',');
  ordering_cmd->add_option("--bound", bound);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "heffter: " << e.what() << "\n";
    return kMalformed;
  }
  c.threads = resolve_threads(threads_flag);

  try {
    if (*construct_cmd) return cmd_construct(c, format, out);
    if (*verify_cmd) return cmd_verify(in, report_path, out, err);
    if (*decompose_cmd) return cmd_decompose(c, axis, orthogonal, full, out);
    if (*embed_cmd) return cmd_embed(c, seed, max_tries, faces_path, out, err);
    if (*graph_cmd) {
      if (format == "json") format = "edgelist";
      return cmd_export_graph(c, format, out);
    }
    if (*oracle_cmd) return cmd_oracle(c.t, reduce, c.out, out);
    if (*ordering_cmd) return cmd_simple_ordering(modulus, c.t, elements, bound, out);
  } catch (const Exit& e) {
    err << "heffter: " << e.message << "\n";
    return e.code;
  } catch (const UnsupportedParameters& e) {
    err << "heffter: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BoundExceeded& e) {
    err << "heffter: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    err << "heffter: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kMalformed;
}

}  // namespace heffter::cli
