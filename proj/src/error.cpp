#include "hyper/error.hpp"

namespace hyper {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::empty_cell: return "EmptyCell";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::duplicate_name: return "DuplicateName";
    case ErrorKind::order_limit: return "OrderLimit";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::carrier_mismatch: return "CarrierMismatch";
    case ErrorKind::not_divisible: return "NotDivisible";
    case ErrorKind::no_inverse: return "NoInverse";
    case ErrorKind::ambiguous_inverse: return "AmbiguousInverse";
    case ErrorKind::not_classical: return "NotClassical";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::invalid_group: return "InvalidGroup";
    case ErrorKind::not_subgroup: return "NotSubgroup";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace hyper
