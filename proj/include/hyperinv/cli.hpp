#pragma once

#include <string>

#include "hyperinv/codec.hpp"

namespace hyperinv::cli {

using json = nlohmann::json;

inline constexpr const char* kKernelVersion = "0.1.0";

enum ExitCode { kOk = 0, kDomainError = 1, kMalformed = 2 };

struct Outcome {
  json report;
  int exit_code = kOk;
};

/// Runs one {"command", "payload"} request against a locus table.
Outcome run(const json& request, const LocusTable& table);

/// Parses text as one request (or an array of them when batch is set) and
/// runs it. Batch entries run concurrently; the report array keeps input
/// order and the exit code is the worst over all entries.
Outcome run_text(const std::string& text, const LocusTable& table, bool batch);

/// One line per report: command, status and either the error or a short digest.
std::string summary(const json& report);

}  // namespace hyperinv::cli
