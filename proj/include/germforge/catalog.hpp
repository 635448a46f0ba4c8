#pragma once

// Normal forms with known codimension and simplicity, loaded from the germ-file
// format. Matching is syntactic: equality of components after renaming source
// variables and permuting components. No equivalence testing is attempted.

#include "germforge/germ.hpp"
#include "germforge/germ_file.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace germforge {

std::string_view builtin_catalog_text();

/// A1..A<max_mu>, D4..D<max_mu>, E6..E8 (those with mu <= max_mu).
std::vector<std::string> simple_function_labels(std::size_t max_mu = 8);

struct FunctionSlot {
  std::string name;
  std::vector<std::string> vars;
};

struct CatalogEntry {
  std::string id;
  std::string label;  ///< template
  std::string source; ///< classification the normal form comes from
  std::vector<std::string> vars;
  std::string components; ///< template
  std::optional<long> family_min;
  long augment_from = 0;
  std::optional<FunctionSlot> slot;
  std::string codim; ///< "k-1", "mu(P)", "2"
  bool simple = true;
  std::optional<std::string> opsu;
  std::string param = "lam";
  std::optional<std::string> base;
  std::string base_k = "k";
  std::optional<std::string> augment;
  std::vector<std::string> augment_vars;
  std::optional<int> table_row;
  std::string table_form;
  std::string constraints;

  std::size_t n() const noexcept { return vars.size(); }
};

struct CatalogInstance {
  const CatalogEntry* entry = nullptr;
  std::optional<long> k;
  std::optional<std::string> slot_label;
  std::string label;
  MapGerm germ;
};

class Catalog {
public:
  explicit Catalog(const GermFile& file);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(std::string_view id) const;
  const CatalogEntry& require(std::string_view id) const;

  CatalogInstance instantiate(const CatalogEntry& e, std::optional<long> k = std::nullopt,
                              std::optional<std::string> slot_label = std::nullopt) const;
  /// Family members k = family_min..max_k; slot entries over simple functions with mu <= 8.
  std::vector<CatalogInstance> instances(const CatalogEntry& e, long max_k) const;

  Polynomial slot_function(const CatalogEntry& e, const std::string& label) const;
  /// Stored codimension formula evaluated at the instance.
  std::size_t stored_codim(const CatalogInstance& inst) const;
  std::optional<Unfolding> opsu(const CatalogInstance& inst) const;

  /// The germ this instance augments, with its augmenting function.
  struct Augmentation {
    CatalogInstance base;
    Polynomial g;
  };
  std::optional<Augmentation> augmentation_of(const CatalogInstance& inst) const;

  std::optional<CatalogInstance> lookup(const MapGerm& germ) const;

  /// Families are matched up to this index.
  static constexpr long lookup_max_k = 12;

private:
  struct Prepared {
    CatalogInstance instance;
    std::vector<std::string> sorted_components;
  };
  const std::vector<Prepared>& prepared() const;

  std::vector<CatalogEntry> entries_;
  mutable std::shared_ptr<const std::vector<Prepared>> prepared_;
};

const Catalog& builtin_catalog();

} // namespace germforge
