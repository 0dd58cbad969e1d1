#include "singlets/laurent_polynomial.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

#include "singlets/errors.hpp"

namespace singlets {

// ---------------------------------------------------------------------------
// ExponentWindow

ExponentWindow::ExponentWindow(WeightVector lower, WeightVector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.rank() != upper_.rank()) {
    throw RankMismatchError("exponent window bounds have different lengths");
  }
  for (std::size_t i = 0; i < lower_.rank(); ++i) {
    if (lower_[i] > upper_[i]) {
      throw DomainError("exponent window has lower > upper at variable " + std::to_string(i));
    }
  }
}

bool ExponentWindow::contains(const WeightVector& e) const {
  if (e.rank() != rank()) throw RankMismatchError("exponent/window rank mismatch");
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e[i] < lower_[i] || e[i] > upper_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial basics

namespace {

void require_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw RankMismatchError(std::string(what) + ": expected rank " + std::to_string(expected) +
                            ", got " + std::to_string(got));
  }
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const BigInt& value) {
  LaurentPolynomial p(rank);
  p.add_term(WeightVector::zero(rank), value);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const WeightVector& exponent,
                                              const BigInt& coefficient) {
  LaurentPolynomial p(exponent.rank());
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPolynomial::add_term(const WeightVector& exponent, const BigInt& coefficient) {
  require_rank(rank_, exponent.rank(), "add_term");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPolynomial::coefficient(const WeightVector& exponent) const {
  require_rank(rank_, exponent.rank(), "coefficient");
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPolynomial::evaluate_at_ones() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

WeightVector LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) throw DomainError("min_exponents of the zero polynomial");
  WeightVector out = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) out[i] = std::min(out[i], e[i]);
  }
  return out;
}

WeightVector LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) throw DomainError("max_exponents of the zero polynomial");
  WeightVector out = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_rank(rank_, other.rank_, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  require_rank(rank_, other.rank_, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "z" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_decimal(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_decimal(magnitude) + "*" + mono;
    }
  }
  return out;
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial out = p;
  out += q;
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return add(p, q);
}

LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial out = p;
  out -= q;
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& p) {
  LaurentPolynomial out(p.rank());
  for (const auto& [e, c] : p.terms()) out.add_term(e, -c);
  return out;
}

// ---------------------------------------------------------------------------
// Product engine
//
// All products run through one loop: start from a set of terms, multiply by a
// sequence of factors, and after each multiplication keep only exponents inside
// a per-step box. When every exponent that can appear fits in 64 bits after
// offsetting, exponent vectors are packed into a single integer key so that
// monomial multiplication is one integer addition.

namespace {

using Bound = std::vector<long long>;

struct Box {
  Bound lower;
  Bound upper;
};

struct Extent {
  Bound lo;
  Bound hi;
};

Extent extent_of(const LaurentPolynomial& p) {
  WeightVector mn = p.min_exponents();
  WeightVector mx = p.max_exponents();
  Extent out{Bound(p.rank()), Bound(p.rank())};
  for (std::size_t i = 0; i < p.rank(); ++i) {
    out.lo[i] = mn[i];
    out.hi[i] = mx[i];
  }
  return out;
}

class PackedCodec {
 public:
  using Key = std::uint64_t;
  using Delta = std::uint64_t;
  using Map = absl::flat_hash_map<Key, BigInt>;

  static std::optional<PackedCodec> make(const Bound& lo, const Bound& hi) {
    PackedCodec codec;
    unsigned total = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      auto span = static_cast<std::uint64_t>(hi[i] - lo[i]);
      unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(span)));
      if (total + bits > 63) return std::nullopt;
      codec.lo_.push_back(lo[i]);
      codec.shift_.push_back(total);
      codec.mask_.push_back((std::uint64_t{1} << bits) - 1);
      total += bits;
    }
    return codec;
  }

  Key encode(const WeightVector& e) const {
    Key key = 0;
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      key |= static_cast<std::uint64_t>(e[i] - lo_[i]) << shift_[i];
    }
    return key;
  }

  // Signed offset; adding it to a key is exact whenever the result stays in range.
  Delta delta(const WeightVector& d) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      out += static_cast<std::uint64_t>(static_cast<std::int64_t>(d[i])) << shift_[i];
    }
    return out;
  }

  static Key apply(Key key, Delta d) { return key + d; }

  bool representable(const WeightVector& e) const {
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      if (e[i] < lo_[i] || static_cast<std::uint64_t>(e[i] - lo_[i]) > mask_[i]) return false;
    }
    return true;
  }

  long long field(Key key, std::size_t i) const {
    return static_cast<long long>((key >> shift_[i]) & mask_[i]) + lo_[i];
  }

  bool in_box(Key key, const Box& box) const {
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      long long v = field(key, i);
      if (v < box.lower[i] || v > box.upper[i]) return false;
    }
    return true;
  }

  WeightVector decode(Key key) const {
    WeightVector out(lo_.size());
    for (std::size_t i = 0; i < lo_.size(); ++i) out[i] = static_cast<int>(field(key, i));
    return out;
  }

 private:
  Bound lo_;
  std::vector<unsigned> shift_;
  std::vector<std::uint64_t> mask_;
};

class VectorCodec {
 public:
  using Key = WeightVector;
  using Delta = WeightVector;
  using Map = absl::flat_hash_map<Key, BigInt>;

  Key encode(const WeightVector& e) const { return e; }
  Delta delta(const WeightVector& d) const { return d; }
  static Key apply(const Key& key, const Delta& d) { return key + d; }
  bool representable(const WeightVector&) const { return true; }

  bool in_box(const Key& key, const Box& box) const {
    for (std::size_t i = 0; i < key.rank(); ++i) {
      if (key[i] < box.lower[i] || key[i] > box.upper[i]) return false;
    }
    return true;
  }

  WeightVector decode(const Key& key) const { return key; }
};

/// One multiplication of a product plan: the factor plus an optional box that
/// every surviving product exponent must lie in.
struct ProductStep {
  const LaurentPolynomial* factor;
  std::optional<Box> keep;
};

template <typename Codec>
typename Codec::Map multiply_step(const typename Codec::Map& current,
                                  const std::vector<std::pair<typename Codec::Delta, BigInt>>& factor,
                                  const std::optional<Box>& keep, const Codec& codec) {
  typename Codec::Map next;
  next.reserve(current.size() + current.size() / 2 + factor.size());
  for (const auto& [key, coeff] : current) {
    for (const auto& [d, fc] : factor) {
      auto product_key = Codec::apply(key, d);
      if (keep && !codec.in_box(product_key, *keep)) continue;
      BigInt& slot = next[product_key];
      mpz_addmul(slot.get_mpz_t(), coeff.get_mpz_t(), fc.get_mpz_t());
    }
  }
  absl::erase_if(next, [](const auto& kv) { return kv.second == 0; });
  return next;
}

template <typename Codec>
typename Codec::Map encode_terms(const LaurentPolynomial& p, const Codec& codec) {
  typename Codec::Map out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.emplace(codec.encode(e), c);
  return out;
}

template <typename Codec>
std::vector<std::pair<typename Codec::Delta, BigInt>> encode_factor(const LaurentPolynomial& p,
                                                                    const Codec& codec) {
  std::vector<std::pair<typename Codec::Delta, BigInt>> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.emplace_back(codec.delta(e), c);
  return out;
}

/// Calls `observe(step_index, map, codec)` after the start (index 0) and after each step.
template <typename Codec, typename Observer>
typename Codec::Map run_steps(const Codec& codec, const LaurentPolynomial& start,
                              const std::vector<ProductStep>& steps, Observer&& observe) {
  auto current = encode_terms(start, codec);
  observe(std::size_t{0}, current, codec);
  // Factors repeat in powers; encode each distinct one once.
  std::map<const LaurentPolynomial*, std::vector<std::pair<typename Codec::Delta, BigInt>>> cache;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    auto [it, inserted] = cache.try_emplace(steps[k].factor);
    if (inserted) it->second = encode_factor(*steps[k].factor, codec);
    current = multiply_step(current, it->second, steps[k].keep, codec);
    observe(k + 1, current, codec);
  }
  return current;
}

/// Exponent range covering the start terms and every candidate product.
Extent plan_extent(const LaurentPolynomial& start, const std::vector<ProductStep>& steps) {
  Extent survivors = extent_of(start);
  Extent total = survivors;
  for (const auto& step : steps) {
    Extent f = extent_of(*step.factor);
    for (std::size_t i = 0; i < survivors.lo.size(); ++i) {
      long long lo = survivors.lo[i] + f.lo[i];
      long long hi = survivors.hi[i] + f.hi[i];
      total.lo[i] = std::min(total.lo[i], lo);
      total.hi[i] = std::max(total.hi[i], hi);
      if (step.keep) {
        lo = std::max(lo, step.keep->lower[i]);
        hi = std::min(hi, step.keep->upper[i]);
        // Empty range: nothing survives, any in-range placeholder will do.
        if (lo > hi) hi = lo = std::clamp(lo, total.lo[i], total.hi[i]);
      }
      survivors.lo[i] = lo;
      survivors.hi[i] = hi;
    }
  }
  return total;
}

/// Runs the plan with the packed codec when possible, else with vector keys.
template <typename Observer>
LaurentPolynomial run_plan(const LaurentPolynomial& start, const std::vector<ProductStep>& steps,
                           Observer&& observe) {
  const std::size_t rank = start.rank();
  LaurentPolynomial result(rank);
  for (const auto& step : steps) {
    if (step.factor->is_zero()) return result;
  }
  if (start.is_zero()) return result;

  auto finish = [&](const auto& map, const auto& codec) {
    std::vector<std::pair<WeightVector, BigInt>> terms;
    terms.reserve(map.size());
    for (const auto& [key, c] : map) terms.emplace_back(codec.decode(key), c);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [e, c] : terms) result.add_term(e, c);
  };

  Extent extent = plan_extent(start, steps);
  if (auto packed = PackedCodec::make(extent.lo, extent.hi)) {
    finish(run_steps(*packed, start, steps, observe), *packed);
  } else {
    VectorCodec codec;
    finish(run_steps(codec, start, steps, observe), codec);
  }
  return result;
}

struct NoObserver {
  template <typename Map, typename Codec>
  void operator()(std::size_t, const Map&, const Codec&) const {}
};

Box target_box(std::span<const WeightVector> targets, std::size_t rank) {
  Box box{Bound(rank, std::numeric_limits<long long>::max()),
          Bound(rank, std::numeric_limits<long long>::min())};
  for (const auto& t : targets) {
    require_rank(rank, t.rank(), "target");
    for (std::size_t i = 0; i < rank; ++i) {
      box.lower[i] = std::min<long long>(box.lower[i], t[i]);
      box.upper[i] = std::max<long long>(box.upper[i], t[i]);
    }
  }
  return box;
}

}  // namespace

LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q,
                      const std::optional<ExponentWindow>& window) {
  require_rank(p.rank(), q.rank(), "mul");
  std::optional<Box> keep;
  if (window) {
    require_rank(p.rank(), window->rank(), "mul window");
    keep = Box{Bound(p.rank()), Bound(p.rank())};
    for (std::size_t i = 0; i < p.rank(); ++i) {
      keep->lower[i] = window->lower()[i];
      keep->upper[i] = window->upper()[i];
    }
  }
  // Iterate over the smaller operand's terms as the factor.
  const bool swap = q.size() > p.size();
  const LaurentPolynomial& start = swap ? q : p;
  const LaurentPolynomial& factor = swap ? p : q;
  std::vector<ProductStep> steps{{&factor, keep}};
  return run_plan(start, steps, NoObserver{});
}

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return mul(p, q);
}

LaurentPolynomial pow(const LaurentPolynomial& base, int n) {
  if (n < 0) throw DomainError("negative power " + std::to_string(n));
  LaurentPolynomial out = LaurentPolynomial::constant(base.rank(), 1);
  for (int k = 0; k < n; ++k) out = mul(out, base);
  return out;
}

LaurentPolynomial product_with_target(
    std::span<const std::reference_wrapper<const LaurentPolynomial>> factors,
    std::span<const WeightVector> targets, std::size_t rank) {
  for (const auto& f : factors) require_rank(rank, f.get().rank(), "product factor");
  LaurentPolynomial result(rank);
  if (targets.empty()) return result;
  const Box goal = target_box(targets, rank);

  for (const auto& f : factors) {
    if (f.get().is_zero()) return result;
  }

  // Suffix sums of per-variable exponent ranges of the factors still to come.
  const std::size_t n = factors.size();
  std::vector<Bound> rest_lo(n + 1, Bound(rank, 0));
  std::vector<Bound> rest_hi(n + 1, Bound(rank, 0));
  for (std::size_t k = n; k-- > 0;) {
    Extent f = extent_of(factors[k].get());
    for (std::size_t i = 0; i < rank; ++i) {
      rest_lo[k][i] = rest_lo[k + 1][i] + f.lo[i];
      rest_hi[k][i] = rest_hi[k + 1][i] + f.hi[i];
    }
  }
  auto window_after = [&](std::size_t k) {
    Box box{Bound(rank), Bound(rank)};
    for (std::size_t i = 0; i < rank; ++i) {
      box.lower[i] = goal.lower[i] - rest_hi[k][i];
      box.upper[i] = goal.upper[i] - rest_lo[k][i];
    }
    return box;
  };

  const WeightVector origin = WeightVector::zero(rank);
  {
    Box first = window_after(0);
    for (std::size_t i = 0; i < rank; ++i) {
      if (origin[i] < first.lower[i] || origin[i] > first.upper[i]) return result;
    }
  }

  std::vector<ProductStep> steps;
  steps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) steps.push_back({&factors[k].get(), window_after(k + 1)});

  LaurentPolynomial full =
      run_plan(LaurentPolynomial::constant(rank, 1), steps, NoObserver{});
  absl::flat_hash_set<WeightVector> wanted(targets.begin(), targets.end());
  for (const auto& [e, c] : full.terms()) {
    if (wanted.contains(e)) result.add_term(e, c);
  }
  return result;
}

LaurentPolynomial pow_with_target(const LaurentPolynomial& base, int n,
                                  std::span<const WeightVector> targets) {
  if (n < 0) throw DomainError("negative power " + std::to_string(n));
  std::vector<std::reference_wrapper<const LaurentPolynomial>> factors(
      static_cast<std::size_t>(n), std::cref(base));
  return product_with_target(factors, targets, base.rank());
}

std::vector<std::vector<BigInt>> power_coefficient_sequence(const LaurentPolynomial& base,
                                                            int max_n,
                                                            std::span<const WeightVector> targets) {
  if (max_n < 0) throw DomainError("negative sequence length " + std::to_string(max_n));
  const std::size_t rank = base.rank();
  std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(max_n) + 1,
                                       std::vector<BigInt>(targets.size(), BigInt(0)));
  if (targets.empty()) return out;
  const Box goal = target_box(targets, rank);
  if (base.is_zero()) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (targets[t].is_zero()) out[0][t] = 1;
    }
    return out;
  }

  // A term must reach a target within some j <= remaining steps; the union of
  // those boxes over j is the box for j = remaining widened to include j = 0.
  Extent b = extent_of(base);
  auto window_after = [&](int k) {
    const long long remaining = max_n - k;
    Box box{Bound(rank), Bound(rank)};
    for (std::size_t i = 0; i < rank; ++i) {
      box.lower[i] = goal.lower[i] - remaining * std::max(b.hi[i], 0LL);
      box.upper[i] = goal.upper[i] - remaining * std::min(b.lo[i], 0LL);
    }
    return box;
  };

  std::vector<ProductStep> steps;
  steps.reserve(static_cast<std::size_t>(max_n));
  for (int k = 0; k < max_n; ++k) steps.push_back({&base, window_after(k + 1)});

  auto observe = [&](std::size_t k, const auto& map, const auto& codec) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!codec.representable(targets[t])) continue;
      auto it = map.find(codec.encode(targets[t]));
      if (it != map.end()) out[k][t] = it->second;
    }
  };
  run_plan(LaurentPolynomial::constant(rank, 1), steps, observe);
  return out;
}

BigInt coefficient_of(const LaurentPolynomial& p, const WeightVector& e) {
  return p.coefficient(e);
}

LaurentPolynomial substitute_swap(const LaurentPolynomial& p, std::span<const std::size_t> perm) {
  const std::size_t rank = p.rank();
  if (perm.size() != rank) throw DomainError("permutation length does not match rank");
  std::vector<bool> seen(rank, false);
  for (std::size_t target : perm) {
    if (target >= rank || seen[target]) throw DomainError("not a permutation of the variables");
    seen[target] = true;
  }
  LaurentPolynomial out(rank);
  for (const auto& [e, c] : p.terms()) {
    WeightVector moved(rank);
    for (std::size_t i = 0; i < rank; ++i) moved[perm[i]] = e[i];
    out.add_term(moved, c);
  }
  return out;
}

}  // namespace singlets
