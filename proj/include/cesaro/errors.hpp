#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

/// Raised for arguments outside an operation's parameter domain
/// (alpha <= -1, order 0, malformed rational strings, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The telescoping ansatz had no solution at the attempted numerator degree.
class AnsatzFailure : public std::runtime_error {
 public:
  AnsatzFailure(unsigned order, unsigned attempted_degree, const std::string& what)
      : std::runtime_error(what), order_(order), attempted_degree_(attempted_degree) {}

  unsigned order() const noexcept { return order_; }
  unsigned attempted_degree() const noexcept { return attempted_degree_; }

 private:
  unsigned order_;
  unsigned attempted_degree_;
};

}  // namespace cesaro
