#include "singlets/weight_vector.hpp"

#include <algorithm>

#include "singlets/errors.hpp"

namespace singlets {

namespace {

void require_same_rank(const WeightVector& a, const WeightVector& b) {
  if (a.rank() != b.rank()) {
    throw RankMismatchError("weight rank mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

WeightVector WeightVector::constant(std::size_t rank, int value) {
  return WeightVector(std::vector<int>(rank, value));
}

bool WeightVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

WeightVector operator-(WeightVector v) {
  for (int& e : v.entries_) e = -e;
  return v;
}

WeightVector operator*(int scale, WeightVector v) {
  for (int& e : v.entries_) e *= scale;
  return v;
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

}  // namespace singlets
