#include "germforge/table44.hpp"

#include "germforge/ae_calculus.hpp"
#include "germforge/errors.hpp"

#include <algorithm>

namespace germforge {

TableInstance build_table_instance(const CatalogInstance& inst, const Catalog& catalog, int k_budget) {
  const auto aug = catalog.augmentation_of(inst);
  if (!aug) {
    throw precondition_error(inst.label + " is not stored as an augmentation");
  }
  const auto& base = aug->base;
  const auto unfolding = catalog.opsu(base);
  if (!unfolding) {
    throw precondition_error(base.label + " has no stored stable unfolding");
  }
  const auto F = check_opsu(*unfolding, k_budget);
  const auto f = ae_codim(base.germ, k_budget);

  TableInstance out;
  out.label = inst.label;
  out.base = base.label;
  out.g = aug->g.to_string();
  out.f_codim = f.codim;
  out.f_order = f.certified_order;

  const auto A = augment(base.germ, F, aug->g);
  out.germ = A.to_string();
  const auto hit = catalog.lookup(A);
  out.matches_catalog = hit && hit->entry == inst.entry && hit->label == inst.label;

  out.codim = augmentation_codim(f.codim, aug->g);
  out.formula_codim = catalog.stored_codim(inst);
  out.verdict = decide_simplicity(f.codim, base.entry->simple ? Tri::yes : Tri::no, aug->g);
  return out;
}

std::vector<TableEntry> generate_table44(const Table44Options& options, const Catalog& catalog) {
  std::vector<const CatalogEntry*> rows;
  for (const auto& e : catalog.entries()) {
    if (e.table_row) {
      rows.push_back(&e);
    }
  }
  std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return *a->table_row < *b->table_row; });

  std::vector<TableEntry> table;
  for (const auto* e : rows) {
    TableEntry entry{*e->table_row, e->label, e->table_form, e->codim, e->constraints, {}};
    std::vector<std::optional<long>> ks;
    if (e->family_min) {
      for (long k : options.ks) {
        if (k >= std::max(*e->family_min, e->augment_from)) {
          ks.emplace_back(k);
        }
      }
    } else {
      ks.emplace_back(std::nullopt);
    }
    std::vector<std::optional<std::string>> slots;
    if (e->slot) {
      slots.assign(options.slot_labels.begin(), options.slot_labels.end());
    } else {
      slots.emplace_back(std::nullopt);
    }
    for (const auto& k : ks) {
      for (const auto& s : slots) {
        entry.instances.push_back(build_table_instance(catalog.instantiate(*e, k, s), catalog, options.k_budget));
      }
    }
    table.push_back(std::move(entry));
  }
  return table;
}

} // namespace germforge
