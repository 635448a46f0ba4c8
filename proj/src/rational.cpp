#include "germforge/rational.hpp"

#include "germforge/errors.hpp"

namespace germforge {

Rat make_rat(long num, long den) {
  if (den == 0) {
    throw precondition_error("zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) {
    throw syntax_error("invalid rational literal '" + text + "'", 0);
  }
  if (r.get_den() == 0) {
    throw syntax_error("zero denominator in '" + text + "'", 0);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

} // namespace germforge
