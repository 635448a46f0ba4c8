#pragma once

#include "germforge/local_algebra.hpp"
#include "germforge/poly.hpp"

#include <optional>
#include <string>

namespace germforge {

enum class FunctionKind { A, D, E6, E7, E8, non_simple, not_isolated };

/// Unimodal family a non-simple function is adjacent to.
enum class Witness { none, P8, X9, J10plus };

std::string to_string(Witness w);

struct FunctionType {
  FunctionKind kind = FunctionKind::not_isolated;
  int k = 0; ///< index for A_k / D_k
  Witness witness = Witness::none;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> tau;
  std::size_t corank = 0;

  bool is_simple() const noexcept {
    return kind == FunctionKind::A || kind == FunctionKind::D || kind == FunctionKind::E6 ||
           kind == FunctionKind::E7 || kind == FunctionKind::E8;
  }
  /// "A3", "D5", "E7", "NonSimple(P8)", "NotIsolated".
  std::string tag() const;
};

/// Multiplicity structure of a nonzero binary cubic form.
enum class CubicRoots { distinct, double_root, triple_root };

/// Decided from the gcd degree of the two partial derivatives.
CubicRoots classify_binary_cubic(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

FunctionType classify_function(const Polynomial& g, int k_max = default_quotient_order);
bool is_morse(const Polynomial& g);
/// 0 for A/D/E; 1 for the P8/X9/J10 witnesses at mu = 8/9/10; nullopt otherwise.
std::optional<int> modality_of_function(const Polynomial& g, int k_max = default_quotient_order);

/// Normal form of a simple singularity in `vars` variables (v1^{k+1} + v2^2 + ...).
/// Labels: "A<k>", "D<k>", "E6", "E7", "E8".
Polynomial ade_normal_form(const std::string& label, const ContextPtr& ctx);

/// Unimodal witness families at a parameter value; throws precondition_error on
/// the exceptional set (P8: l^3+27=0, X9: l^2=4, J10: 4l^3+27=0).
Polynomial unimodal_family(Witness family, const Rat& lambda, const ContextPtr& ctx);

} // namespace germforge
