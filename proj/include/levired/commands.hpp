#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "levired/document.hpp"

namespace levired {

using Report = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kResourceLimit = 3 };

struct CommandOptions {
  SchubertOptions schubert;
  std::uint64_t seed = 1;
  int samples = 0;  // random on-face instances to verify per face
};

struct CommandResult {
  Report report;
  int exit_code = kOk;
};

// Each command catches its own errors and reports them with the matching
// exit code, so the report is always a complete document.
CommandResult cmd_mult(const ProblemDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_check_face(const ProblemDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_reduce(const ProblemDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_gen_rules(const ProblemDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_schubert(const ProblemDocument& doc, const CommandOptions& opts = {});

/// Runs cmd_reduce on every fixture whose group label starts with `filter`
/// (all fixtures when the filter is empty).
CommandResult replay_corpus(const std::vector<ProblemDocument>& corpus, const std::string& filter = "",
                            const CommandOptions& opts = {});

/// Indented "key: value" rendering of a report.
std::string render_text(const Report& report);

/// Path of the bundled fixture file.
std::string default_corpus_path();

}  // namespace levired
