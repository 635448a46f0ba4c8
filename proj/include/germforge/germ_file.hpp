#pragma once

// Line-oriented germ files.
//
//   # comment
//   [function g]
//   vars = x, y
//   expr = x^3 + y^6 + x^2*y^2
//
//   [germ cusp]
//   components = y^2; y^3
//
//   [unfolding cusp_opsu]
//   base = cusp
//   params = lam
//   components = y^2; y^3 + lam*y
//   stable = check            # or: asserted
//   substantial = false
//
// Expressions may reference functions as {name}; the reference expands to the
// parenthesized expression of that function.

#include "germforge/germ.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace germforge {

struct GermSection {
  std::string kind;
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t line = 0;

  const std::string* get(std::string_view key) const;
  /// Throws germ_file_error naming the section.
  const std::string& require(std::string_view key) const;

  friend bool operator==(const GermSection& a, const GermSection& b) {
    return a.kind == b.kind && a.name == b.name && a.entries == b.entries;
  }
};

struct GermFile {
  std::vector<GermSection> sections;

  const GermSection* find(std::string_view kind, std::string_view name) const;
  std::vector<const GermSection*> of_kind(std::string_view kind) const;

  friend bool operator==(const GermFile&, const GermFile&) = default;
};

GermFile parse_germ_file(std::string_view text);
GermFile load_germ_file(const std::filesystem::path& path);
std::string write_germ_file(const GermFile& file);

/// Splits "a; b; c" (or commas when no semicolon is present) into trimmed parts.
std::vector<std::string> split_list(std::string_view text);
bool parse_bool(std::string_view text);

/// Resolves named definitions of a germ file.
class GermLibrary {
public:
  explicit GermLibrary(GermFile file);

  const GermFile& file() const noexcept { return file_; }

  /// Expression text with every {name} function reference expanded.
  std::string function_text(const std::string& name) const;
  Polynomial function(const std::string& name) const;
  MapGerm germ(const std::string& name) const;
  Unfolding unfolding(const std::string& name) const;
  Opsu opsu(const std::string& name, int k_budget = default_ae_budget) const;
  SubstantialFlag substantial(const std::string& name) const;

  /// Expands {name} references inside arbitrary expression text.
  std::string expand(std::string_view text) const;

private:
  std::string expand(std::string_view text, std::set<std::string>& visiting) const;
  std::string function_text(const std::string& name, std::set<std::string>& visiting) const;
  const GermSection& section(std::string_view kind, const std::string& name) const;

  GermFile file_;
};

} // namespace germforge
