#include "germforge/germ_file.hpp"

#include "germforge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace germforge {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
    ++a;
  }
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
    --b;
  }
  return std::string(s.substr(a, b - a));
}

const std::set<std::string, std::less<>> known_kinds = {"function", "germ", "unfolding", "catalog"};

} // namespace

const std::string* GermSection::get(std::string_view key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

const std::string& GermSection::require(std::string_view key) const {
  if (const auto* v = get(key)) {
    return *v;
  }
  throw germ_file_error("[" + kind + " " + name + "] needs '" + std::string(key) + "'", line);
}

const GermSection* GermFile::find(std::string_view kind, std::string_view name) const {
  for (const auto& s : sections) {
    if (s.kind == kind && s.name == name) {
      return &s;
    }
  }
  return nullptr;
}

std::vector<const GermSection*> GermFile::of_kind(std::string_view kind) const {
  std::vector<const GermSection*> out;
  for (const auto& s : sections) {
    if (s.kind == kind) {
      out.push_back(&s);
    }
  }
  return out;
}

GermFile parse_germ_file(std::string_view text) {
  GermFile file;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const auto line = trim(hash == std::string::npos ? std::string_view(raw) : std::string_view(raw).substr(0, hash));
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw germ_file_error("section header must end with ']'", line_no);
      }
      const auto inner = trim(std::string_view(line).substr(1, line.size() - 2));
      const auto space = inner.find(' ');
      if (space == std::string::npos) {
        throw germ_file_error("section header needs a kind and a name", line_no);
      }
      GermSection s;
      s.kind = inner.substr(0, space);
      s.name = trim(std::string_view(inner).substr(space + 1));
      s.line = line_no;
      if (!known_kinds.contains(s.kind)) {
        throw germ_file_error("unknown section kind '" + s.kind + "'", line_no);
      }
      if (s.name.empty() || s.name.find_first_of(" \t{}[]=") != std::string::npos) {
        throw germ_file_error("invalid section name '" + s.name + "'", line_no);
      }
      if (file.find(s.kind, s.name)) {
        throw germ_file_error("duplicate section [" + s.kind + " " + s.name + "]", line_no);
      }
      file.sections.push_back(std::move(s));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw germ_file_error("expected 'key = value'", line_no);
    }
    if (file.sections.empty()) {
      throw germ_file_error("entry outside of any section", line_no);
    }
    auto key = trim(std::string_view(line).substr(0, eq));
    auto value = trim(std::string_view(line).substr(eq + 1));
    auto& s = file.sections.back();
    if (key.empty()) {
      throw germ_file_error("empty key", line_no);
    }
    if (s.get(key)) {
      throw germ_file_error("duplicate key '" + key + "'", line_no);
    }
    s.entries.emplace_back(std::move(key), std::move(value));
  }
  return file;
}

GermFile load_germ_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw germ_file_error("cannot open " + path.string(), 0);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

std::string write_germ_file(const GermFile& file) {
  std::string out;
  for (std::size_t i = 0; i < file.sections.size(); ++i) {
    const auto& s = file.sections[i];
    if (i) {
      out += '\n';
    }
    out += "[" + s.kind + " " + s.name + "]\n";
    for (const auto& [k, v] : s.entries) {
      out += k + " = " + v + "\n";
    }
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  const char sep = text.find(';') != std::string_view::npos ? ';' : ',';
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    auto part = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!part.empty()) {
      parts.push_back(std::move(part));
    }
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return parts;
}

bool parse_bool(std::string_view text) {
  const auto t = trim(text);
  if (t == "true" || t == "yes" || t == "1") {
    return true;
  }
  if (t == "false" || t == "no" || t == "0") {
    return false;
  }
  throw precondition_error("expected a boolean, got '" + t + "'");
}

GermLibrary::GermLibrary(GermFile file) : file_(std::move(file)) {}

const GermSection& GermLibrary::section(std::string_view kind, const std::string& name) const {
  if (const auto* s = file_.find(kind, name)) {
    return *s;
  }
  throw germ_file_error("no [" + std::string(kind) + " " + name + "]", 0);
}

std::string GermLibrary::expand(std::string_view text) const {
  std::set<std::string> visiting;
  return expand(text, visiting);
}

std::string GermLibrary::expand(std::string_view text, std::set<std::string>& visiting) const {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      out += text[i++];
      continue;
    }
    const auto close = text.find('}', i);
    if (close == std::string_view::npos) {
      throw syntax_error("unterminated reference", i);
    }
    const auto name = trim(text.substr(i + 1, close - i - 1));
    out += "(" + function_text(name, visiting) + ")";
    i = close + 1;
  }
  return out;
}

std::string GermLibrary::function_text(const std::string& name) const {
  std::set<std::string> visiting;
  return function_text(name, visiting);
}

std::string GermLibrary::function_text(const std::string& name, std::set<std::string>& visiting) const {
  const auto& s = section("function", name);
  if (!visiting.insert(name).second) {
    throw germ_file_error("cyclic reference through function '" + name + "'", s.line);
  }
  auto text = expand(s.require("expr"), visiting);
  visiting.erase(name);
  return text;
}

Polynomial GermLibrary::function(const std::string& name) const {
  const auto& s = section("function", name);
  const auto text = function_text(name);
  std::vector<std::string> vars;
  if (const auto* v = s.get("vars")) {
    vars = split_list(*v);
  } else {
    vars = variables_in(text);
  }
  if (vars.empty()) {
    throw germ_file_error("function '" + name + "' has no variables", s.line);
  }
  return parse_poly(text, VarContext::make(vars));
}

MapGerm GermLibrary::germ(const std::string& name) const {
  const auto& s = section("germ", name);
  std::optional<std::vector<std::string>> vars;
  if (const auto* v = s.get("vars")) {
    vars = split_list(*v);
  }
  return parse_map_germ(expand(s.require("components")), vars, name);
}

Unfolding GermLibrary::unfolding(const std::string& name) const {
  const auto& s = section("unfolding", name);
  const auto base = germ(s.require("base"));
  const auto params = split_list(s.require("params"));
  std::vector<std::pair<std::string, Role>> vars;
  for (const auto& v : base.source()->names()) {
    vars.emplace_back(v, Role::source);
  }
  for (const auto& p : params) {
    vars.emplace_back(p, Role::parameter);
  }
  const auto ctx = VarContext::make(std::move(vars));
  std::vector<Polynomial> deformation;
  for (const auto& c : split_list(expand(s.require("components")))) {
    deformation.push_back(parse_poly(c, ctx));
  }
  return Unfolding(base, params, std::move(deformation));
}

Opsu GermLibrary::opsu(const std::string& name, int k_budget) const {
  const auto& s = section("unfolding", name);
  const auto* stable = s.get("stable");
  const auto u = unfolding(name);
  if (stable && trim(*stable) == "asserted") {
    return assert_opsu(u);
  }
  if (stable && trim(*stable) != "check") {
    throw germ_file_error("stable must be 'check' or 'asserted'", s.line);
  }
  return check_opsu(u, k_budget);
}

SubstantialFlag GermLibrary::substantial(const std::string& name) const {
  const auto& s = section("unfolding", name);
  const auto* v = s.get("substantial");
  return SubstantialFlag{v != nullptr && parse_bool(*v)};
}

} // namespace germforge
