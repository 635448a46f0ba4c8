#pragma once

#include "germforge/catalog.hpp"
#include "germforge/germ.hpp"
#include "germforge/local_algebra.hpp"
#include "germforge/poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace germforge {

enum class SimplicityStatus { simple, non_simple, unknown };

enum class Justification {
  none,
  nonsimple_augmenting_function, ///< g is not R-simple
  codim1_augmented_map,          ///< codim f = 1: simple iff g simple
  morse_augmenting_function,     ///< g Morse: simple iff f simple
  catalog,
};

/// Three-valued input flag for the simplicity of f.
enum class Tri { yes, no, unknown };

std::string to_string(SimplicityStatus s);
std::string to_string(Tri t);
Tri parse_tri(std::string_view text);

struct SimplicityVerdict {
  SimplicityStatus status = SimplicityStatus::unknown;
  Justification justification = Justification::none;
  std::string catalog_entry; ///< set for Justification::catalog

  /// "nonsimple-augmenting-function", "codim1-augmented-map",
  /// "morse-augmenting-function", "catalog:<entry>", "none".
  std::string justification_tag() const;

  friend bool operator==(const SimplicityVerdict&, const SimplicityVerdict&) = default;
};

SimplicityVerdict decide_simplicity(std::size_t f_codim, Tri f_simple, const Polynomial& g,
                                    int k_max = default_quotient_order);

/// Verdict stored with the catalog entry matching `germ`, if any.
std::optional<SimplicityVerdict> catalog_verdict(const MapGerm& germ, const Catalog& catalog = builtin_catalog());

/// Simple against NonSimple. Unknown contradicts nothing.
bool contradicts(const SimplicityVerdict& a, const SimplicityVerdict& b);

struct ResolvedVerdict {
  SimplicityVerdict verdict;  ///< final answer
  SimplicityVerdict computed; ///< from decide_simplicity alone
  std::optional<SimplicityVerdict> catalog;
  bool contradiction = false;
};

/// decide_simplicity, falling back to the catalog entry of `augmented` when
/// the computed verdict is Unknown.
ResolvedVerdict resolve_simplicity(std::size_t f_codim, Tri f_simple, const Polynomial& g, const MapGerm& augmented,
                                   const Catalog& catalog = builtin_catalog(), int k_max = default_quotient_order);

/// modality_of_function(g) when f_codim = 1 and the mu-constant stratum of g is
/// asserted to be quasihomogeneous; nullopt otherwise.
std::optional<int> modality_of_augmentation(std::size_t f_codim, const Polynomial& g, bool mu_constant_qh,
                                            int k_max = default_quotient_order);

} // namespace germforge
