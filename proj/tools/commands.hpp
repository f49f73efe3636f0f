#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "barbridge/decompositions.hpp"
#include "document.hpp"

namespace barbridge::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // internal error, or dowker-check found unequal barcodes
  kInputError = 2,
  kAssumption = 3,
  kTruncated = 4,  // only with strict_complete
};

struct RunConfig {
  std::string command;  // persistence | extend | analogous | dowker-check | generate
  std::vector<std::string> inputs;
  bool points = false;  // inputs are n x d point clouds
  int k = 1;
  std::uint32_t field = 2;
  std::optional<int> max_dim;  // defaults to k + 1
  std::string tie_break = "error";  // error | jitter
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t member_cap = 64;
  std::optional<Grade> psi_override;
  bool strict_complete = false;
  std::uint64_t seed = 7;
  std::string out;  // JSON path (stdout when empty); output directory for generate
  std::string svg;
  std::string mode = "feature";  // feature | similarity
  std::string extension_mode = "auto";  // auto | general | f2
  std::size_t bar = 0;  // rank in the (length desc, birth asc) order
  std::string cycle;  // extend: cycle file instead of a bar
  std::string generator;  // circles | clusters | torus | trefoil
  std::string random;  // dowker-check: "RxC" random matrix
  bool timings = false;
};

struct CommandResult {
  Json document;
  std::string svg;
  bool truncated = false;
  bool alarm = false;  // dowker-check: barcodes differ
  // generate: file name -> contents
  std::vector<std::pair<std::string, std::string>> files;
};

// Runs one command; library errors propagate as exceptions.
CommandResult execute(const RunConfig& config);

// execute() plus output files and the exit-code contract; the JSON document
// goes to `out` when no --out path is given, messages go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace barbridge::cli
