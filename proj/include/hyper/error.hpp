#pragma once

#include <stdexcept>
#include <string>

namespace hyper {

enum class ErrorKind {
  // input errors (CLI exit code 1)
  parse,
  empty_cell,
  unknown_element,
  duplicate_name,
  order_limit,
  index_out_of_range,
  carrier_mismatch,
  not_divisible,
  no_inverse,
  ambiguous_inverse,
  not_classical,
  budget_exceeded,
  invalid_group,
  not_subgroup,
  invalid_argument,
  // internal invariant violation (CLI exit code 2)
  internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  bool is_internal() const { return kind_ == ErrorKind::internal; }

 private:
  ErrorKind kind_;
};

}  // namespace hyper
