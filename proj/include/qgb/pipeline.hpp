#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qgb/certificate.hpp"
#include "qgb/io.hpp"

namespace qgb {

enum class Verdict { Proved, NotProved, InputError };

const char* to_string(Verdict v);

struct CheckOptions {
  /// Proved additionally requires the criterion checker to accept.
  bool require_criterion = false;
  std::optional<std::filesystem::path> representation;  // overrides the problem's
  bool assume_consistent = false;
  int consistency_max_len = 6;
};

struct Report {
  Verdict verdict = Verdict::NotProved;
  std::string reason;
  Json body;  // the full, deterministic report document
  std::optional<Certificate> certificate;
};

/// End-to-end pipeline: compatibility and signatures, reduction (through the
/// unique-label Buchberger route or Q-order compatible completion as
/// applicable), certificate construction and verification, and an optional
/// realization cross-check. Proved always carries a verifying certificate.
Report run_check(const Problem& p, const CheckOptions& opts = {});

}  // namespace qgb
