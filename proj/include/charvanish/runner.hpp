#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvanish/groupspec.hpp"
#include "charvanish/nonvanish.hpp"

namespace charvanish {

// Work-queue execution of the verification suite over a manifest.  Groups
// are verified concurrently (at most `jobs` workers); reports are merged in
// manifest order, so output bytes do not depend on the worker count.
struct RunResult {
  std::vector<VerificationReport> reports;
  std::vector<std::string> errors;  // per-group build/verify failures

  bool all_pass() const;
};

RunResult run_verification(const CorpusManifest& manifest,
                           const VerifyOptions& options, int jobs);

// Whole-run JSON document: {"schema": 1, "reports": [...]}, canonical bytes.
std::string run_json(const RunResult& r);
// One summary line per group plus a totals line.
std::string run_text(const RunResult& r);

}  // namespace charvanish
