#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace singlets {

/// Integer vector in the Dynkin basis of a rank-r torus.
///
/// Used both for weights/roots and as the exponent vector of a Laurent
/// monomial z^e = z_1^{e_1} ... z_r^{e_r}. Entries may be negative.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t rank) : entries_(rank, 0) {}
  WeightVector(std::initializer_list<int> entries) : entries_(entries) {}
  explicit WeightVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  static WeightVector zero(std::size_t rank) { return WeightVector(rank); }
  static WeightVector constant(std::size_t rank, int value);

  std::size_t rank() const { return entries_.size(); }
  bool is_zero() const;

  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }

  std::span<const int> entries() const { return entries_; }

  WeightVector& operator+=(const WeightVector& other);
  WeightVector& operator-=(const WeightVector& other);

  friend WeightVector operator+(WeightVector lhs, const WeightVector& rhs) { return lhs += rhs; }
  friend WeightVector operator-(WeightVector lhs, const WeightVector& rhs) { return lhs -= rhs; }
  friend WeightVector operator-(WeightVector v);
  friend WeightVector operator*(int scale, WeightVector v);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b) {
    return a.entries_ <=> b.entries_;
  }

  /// "(1,-2)"
  std::string to_string() const;

  template <typename H>
  friend H AbslHashValue(H h, const WeightVector& v) {
    return H::combine(std::move(h), v.entries_);
  }

 private:
  std::vector<int> entries_;
};

}  // namespace singlets
