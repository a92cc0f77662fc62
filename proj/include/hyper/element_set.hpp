#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace hyper {

/// Index of a carrier element. Display names live on the owning table.
using CarrierIndex = std::size_t;

/// Largest carrier order whose subsets fit one ElementSet word.
inline constexpr std::size_t kMaxOrder = 64;

/// A subset of a carrier of order at most 64, stored as one bit-vector word.
///
/// The set does not know its carrier order; tables and parsers guarantee
/// that only bits below the order are ever set.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = CarrierIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = CarrierIndex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr CarrierIndex operator*() const { return static_cast<CarrierIndex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }
  static constexpr ElementSet singleton(CarrierIndex i) { return ElementSet(std::uint64_t{1} << i); }
  /// {0, ..., order-1}
  static constexpr ElementSet full(std::size_t order) {
    return ElementSet(order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(CarrierIndex i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr CarrierIndex min() const { return static_cast<CarrierIndex>(std::countr_zero(bits_)); }

  constexpr void insert(CarrierIndex i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(CarrierIndex i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

}  // namespace hyper
