#pragma once

// Simple augmentations C^4 -> C^4, rebuilt from their construction: each row
// names a base germ with a stable one-parameter unfolding and an augmenting
// function; the codimension and verdict are computed, then compared with the
// formula stored in the catalog.

#include "germforge/augmentation.hpp"
#include "germforge/catalog.hpp"
#include "germforge/simplicity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

struct TableInstance {
  std::string label;       ///< "3_A2", "5_3"
  std::string germ;        ///< augmented germ as computed
  std::string base;        ///< base germ label
  std::string g;           ///< augmenting function
  std::size_t f_codim = 0; ///< ae_codim of the base germ
  int f_order = 0;         ///< its certified jet order
  AugmentationCodim codim;
  std::size_t formula_codim = 0;
  bool matches_catalog = false; ///< augmented germ is the catalog normal form
  SimplicityVerdict verdict;

  bool codim_matches() const noexcept { return !codim.lower_bound_only && codim.value == formula_codim; }
};

struct TableEntry {
  int row = 0;
  std::string tag;         ///< "3_{P}", "5_{k}"
  std::string normal_form;
  std::string codim_expr;  ///< "mu(P)", "k-1"
  std::string constraints;
  std::vector<TableInstance> instances;
};

struct Table44Options {
  std::vector<std::string> slot_labels = {"A1", "A2", "A3", "D4"};
  std::vector<long> ks = {2, 3, 4};
  int k_budget = default_ae_budget;
};

inline constexpr const char* table44_conjecture =
    "conjecture: these are all the simple augmentations C^4 -> C^4 (not a verdict)";

std::vector<TableEntry> generate_table44(const Table44Options& options = {},
                                         const Catalog& catalog = builtin_catalog());

/// One catalog instance rebuilt as an augmentation. Throws precondition_error if
/// the instance is not stored as an augmentation.
TableInstance build_table_instance(const CatalogInstance& inst, const Catalog& catalog = builtin_catalog(),
                                   int k_budget = default_ae_budget);

} // namespace germforge
