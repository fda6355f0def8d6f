#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgb {

using SymbolId = std::uint32_t;

/// Interning table for the alphabet. Ids are dense (0..size()-1) in declaration
/// order, and name <-> id is a bijection.
class Alphabet {
 public:
  /// Declares a symbol; returns the existing id when already declared.
  /// Names must match [A-Za-z_][A-Za-z0-9_]*.
  SymbolId intern(const std::string& name);

  std::optional<SymbolId> find(const std::string& name) const;
  SymbolId require(const std::string& name) const;  // input_error if unknown

  const std::string& name(SymbolId id) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  static bool valid_name(const std::string& name);

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, SymbolId> index_;
};

}  // namespace qgb
