#pragma once

// Placeholder expansion for catalog and germ-file templates.
//
//   {name}      replaced by text bound to `name`
//   {k+1}, {2*k+1}, {k}
//               integer expressions over integer bindings

#include <map>
#include <string>
#include <string_view>

namespace germforge {

struct TemplateBindings {
  std::map<std::string, long> integers;
  std::map<std::string, std::string> texts;
};

/// Evaluates an integer expression such as "2*k+1" or "k-1". Throws syntax_error
/// or precondition_error (non-integer result, unbound variable).
long eval_int_expr(std::string_view expr, const std::map<std::string, long>& integers);

/// Text bindings are inserted verbatim; wrap them yourself if precedence matters.
std::string expand_template(std::string_view text, const TemplateBindings& bindings);

} // namespace germforge
