#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germforge {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a 0-based byte offset.
class syntax_error : public error {
public:
  syntax_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class unknown_variable : public error {
public:
  explicit unknown_variable(const std::string& name)
      : error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class context_mismatch : public error {
public:
  using error::error;
};

class precondition_error : public error {
public:
  using error::error;
};

/// The function has a nonzero linear part, so the origin is not a singular point.
class non_singular_germ : public error {
public:
  using error::error;
};

/// A jet computation did not stabilize within the allowed order.
class not_certified : public error {
public:
  not_certified(const std::string& what, int order)
      : error(what + " (not certified by jet order " + std::to_string(order) + ")"), order_(order) {}
  int order() const noexcept { return order_; }

private:
  int order_;
};

class not_an_unfolding : public error {
public:
  using error::error;
};

class invalid_augmenting_function : public error {
public:
  using error::error;
};

class not_stable : public error {
public:
  not_stable(const std::string& what, std::size_t lower_bound)
      : error(what + " (codimension >= " + std::to_string(lower_bound) + ")"),
        lower_bound_(lower_bound) {}
  std::size_t lower_bound() const noexcept { return lower_bound_; }

private:
  std::size_t lower_bound_;
};

class hypotheses_unmet : public error {
public:
  using error::error;
};

class germ_file_error : public error {
public:
  germ_file_error(const std::string& what, std::size_t line)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace germforge
