#include "germforge/template.hpp"

#include "germforge/errors.hpp"
#include "germforge/poly.hpp"

namespace germforge {

long eval_int_expr(std::string_view expr, const std::map<std::string, long>& integers) {
  const auto names = variables_in(expr);
  std::vector<Rat> point;
  for (const auto& name : names) {
    auto it = integers.find(name);
    if (it == integers.end()) {
      throw precondition_error("unbound integer '" + name + "' in '" + std::string(expr) + "'");
    }
    point.emplace_back(it->second);
  }
  const auto ctx = VarContext::make(names.empty() ? std::vector<std::string>{"c"} : names);
  if (names.empty()) {
    point.emplace_back(0);
  }
  const Rat value = evaluate(parse_poly(expr, ctx), point);
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw precondition_error("'" + std::string(expr) + "' is not an integer");
  }
  return value.get_num().get_si();
}

std::string expand_template(std::string_view text, const TemplateBindings& bindings) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      if (text[i] == '}') {
        throw syntax_error("unmatched '}' in template '" + std::string(text) + "'", i);
      }
      out += text[i++];
      continue;
    }
    const auto close = text.find('}', i);
    if (close == std::string_view::npos) {
      throw syntax_error("unterminated placeholder in template '" + std::string(text) + "'", i);
    }
    std::string key(text.substr(i + 1, close - i - 1));
    while (!key.empty() && key.front() == ' ') {
      key.erase(key.begin());
    }
    while (!key.empty() && key.back() == ' ') {
      key.pop_back();
    }
    if (auto it = bindings.texts.find(key); it != bindings.texts.end()) {
      out += it->second;
    } else {
      out += std::to_string(eval_int_expr(key, bindings.integers));
    }
    i = close + 1;
  }
  return out;
}

} // namespace germforge
