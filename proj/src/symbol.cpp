#include "qgb/symbol.hpp"

#include <cctype>

#include "qgb/error.hpp"

namespace qgb {

bool Alphabet::valid_name(const std::string& name) {
  if (name.empty()) return false;
  const unsigned char first = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(first) && name[0] != '_') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (!std::isalnum(c) && name[i] != '_') return false;
  }
  return true;
}

SymbolId Alphabet::intern(const std::string& name) {
  if (!valid_name(name)) throw input_error("invalid symbol name '" + name + "'");
  const auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  const SymbolId id = static_cast<SymbolId>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

std::optional<SymbolId> Alphabet::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolId Alphabet::require(const std::string& name) const {
  const auto id = find(name);
  if (!id) throw input_error("unknown symbol '" + name + "'");
  return *id;
}

const std::string& Alphabet::name(SymbolId id) const {
  if (id >= names_.size()) throw error("symbol id out of range");
  return names_[id];
}

}  // namespace qgb
