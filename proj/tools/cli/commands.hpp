#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "heffter/decomposition.hpp"
#include "heffter/embedding.hpp"
#include "heffter/verifier.hpp"

namespace heffter::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // also I/O failures
  kUnsupported = 2,
  kMalformed = 3,
  kSearchExhausted = 4,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// HEFFTER_THREADS wins over the flag when it holds a positive integer.
unsigned resolve_threads(unsigned flag);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json embedding_to_json(const EmbeddingReport& report, bool with_faces);
std::string graph_as_dot(const ModulusContext& ctx);
std::string graph_as_edgelist(const ModulusContext& ctx);

}  // namespace heffter::cli
