#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cliquecover {

// A subset of clique positions {0..m-1} packed into a 64-bit mask.
//
// Canonical order is by cardinality first, then by bit pattern, which is
// the order partition cells are displayed in (A, B, C, AC, BC, ABC for
// m = 3). Every ordered container of IndexSets in this library uses it.
class IndexSet {
 public:
  static constexpr int kMaxWidth = 64;

  constexpr IndexSet() = default;

  static IndexSet single(int j) {
    check_position(j);
    return IndexSet(std::uint64_t{1} << j);
  }

  static IndexSet full(int m) {
    if (m < 0 || m > kMaxWidth) {
      throw std::invalid_argument("IndexSet: width out of range");
    }
    return IndexSet(m == kMaxWidth ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << m) - 1);
  }

  static IndexSet from_bits(std::uint64_t bits) { return IndexSet(bits); }

  static IndexSet from_indices(const std::vector<int>& positions) {
    IndexSet s;
    for (int j : positions) s = s.with(j);
    return s;
  }

  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int j) const {
    check_position(j);
    return (bits_ >> j) & 1;
  }

  IndexSet with(int j) const {
    check_position(j);
    return IndexSet(bits_ | (std::uint64_t{1} << j));
  }

  IndexSet without(int j) const {
    check_position(j);
    return IndexSet(bits_ & ~(std::uint64_t{1} << j));
  }

  bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }
  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  IndexSet intersect(IndexSet other) const { return IndexSet(bits_ & other.bits_); }
  IndexSet unite(IndexSet other) const { return IndexSet(bits_ | other.bits_); }
  IndexSet complement_in(int m) const { return IndexSet(full(m).bits_ & ~bits_); }

  std::uint64_t bits() const { return bits_; }

  // Member positions, ascending 0-based.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(IndexSet a, IndexSet b) { return a.bits_ != b.bits_; }

  friend bool operator<(IndexSet a, IndexSet b) {
    const int ca = a.size();
    const int cb = b.size();
    if (ca != cb) return ca < cb;
    return a.bits_ < b.bits_;
  }

 private:
  explicit constexpr IndexSet(std::uint64_t bits) : bits_(bits) {}

  static void check_position(int j) {
    if (j < 0 || j >= kMaxWidth) {
      throw std::out_of_range("IndexSet: position out of range");
    }
  }

  std::uint64_t bits_ = 0;
};

}  // namespace cliquecover
