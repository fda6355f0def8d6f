#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgb/certificate.hpp"
#include "qgb/completion.hpp"
#include "qgb/quiver.hpp"
#include "qgb/realization.hpp"
#include "qgb/rewrite.hpp"

namespace qgb {

using Json = nlohmann::ordered_json;

/// A fully validated problem file: quiver, order, assumptions, claim, options.
struct Problem {
  LabelledQuiver quiver;  // owns the alphabet
  std::vector<SymbolId> precedence;
  std::vector<Generator> assumptions;
  Polynomial claim;
  std::optional<DivisorMap> dm;  // divisor override, keyed by assumption index
  CompletionConfig completion;
  std::optional<std::filesystem::path> representation_path;

  DegLexOrder order() const { return DegLexOrder(quiver.alphabet(), precedence); }
};

Json load_json_file(const std::filesystem::path& path);

/// Atomic: writes to a temporary file in the same directory, then renames.
void save_json_file(const Json& j, const std::filesystem::path& path);

/// Validation failures carry a JSON-pointer-style location in the message.
Problem problem_from_json(const Json& j, const std::filesystem::path& base_dir);
Problem load_problem(const std::filesystem::path& path);

Json certificate_to_json(const Certificate& cert, const Alphabet& alphabet,
                         const std::string& mode, const MonomialOrder* ord = nullptr);
Certificate certificate_from_json(const Json& j, const Alphabet& alphabet);

Representation representation_from_json(const Json& j, const LabelledQuiver& q);
Representation load_representation(const std::filesystem::path& path, const LabelledQuiver& q);

/// Divisor override: {"name": ["monomial", ...], ...}. Entries replace the
/// leading-monomial choice of the named generator; all other generators keep
/// their leading monomial under ord.
DivisorMap divisor_map_from_json(const Json& j, std::span<const Generator> gens,
                                 const Alphabet& alphabet, const MonomialOrder& ord);

}  // namespace qgb
