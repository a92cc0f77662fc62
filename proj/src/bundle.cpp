#include "hyper/bundle.hpp"

#include "hyper/error.hpp"

namespace hyper {

void check_bundle_consistency(const StructureBundle& bundle) {
  const HyperTable& t = bundle.table;
  if (bundle.divisions) {
    if (!t.same_carrier(bundle.divisions->left_division) || !t.same_carrier(bundle.divisions->right_division)) {
      throw Error(ErrorKind::carrier_mismatch, "division tables must use the same elements as the operation");
    }
  }
  if (bundle.identity && *bundle.identity >= t.order()) {
    throw Error(ErrorKind::index_out_of_range, "identity index out of range");
  }
  if (bundle.inverse) {
    if (bundle.inverse->size() != t.order()) {
      throw Error(ErrorKind::carrier_mismatch, "inverse map must cover every element");
    }
    for (CarrierIndex v : *bundle.inverse) {
      if (v >= t.order()) throw Error(ErrorKind::index_out_of_range, "inverse value out of range");
    }
  }
}

}  // namespace hyper
