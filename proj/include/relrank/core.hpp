#ifndef RELRANK_CORE_HPP
#define RELRANK_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relrank {

/// A subset of a ground set, one bit per element index.
using Mask = std::uint32_t;

constexpr int kMaxExhaustiveGround = 16;

class GroundMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Mask mask_bits(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Ordered, uniquely labeled ground set. Labels map to indices 0..n-1 in
/// input order; all masks are index based.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Ground set with labels "0", "1", ..., "n-1".
  static GroundSet indexed(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  int index_of(const std::string& label) const;  // -1 when absent
  Mask full_mask() const { return mask_bits(size()); }

  /// Throws GroundMismatchError when bits outside the low n are set.
  void validate(Mask m) const;

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// |A \ B|; both masks over the same ground set.
inline int diff_size(Mask a, Mask b) { return popcount(a & ~b); }

int diff_size(const GroundSet& e, Mask a, Mask b);

/// Compresses the bits of m that lie under selector into the low bits
/// (software pext). m must satisfy m subset selector.
Mask compress_mask(Mask m, Mask selector);

/// Inverse of compress_mask: scatters the low bits of m into the positions
/// set in selector.
Mask expand_mask(Mask m, Mask selector);

/// Visits every nested pair (A, B) with B subset A over an n-element ground
/// set, A ascending and B descending within each A. 3^n pairs total.
template <typename F>
void for_each_nested_pair(int n, F&& f) {
  const Mask full = mask_bits(n);
  for (Mask a = 0;; ++a) {
    Mask b = a;
    while (true) {
      f(a, b);
      if (b == 0) break;
      b = (b - 1) & a;
    }
    if (a == full) break;
  }
}

/// Materialized nested-pair stream; requires n <= 16.
std::vector<std::pair<Mask, Mask>> nested_pairs(const GroundSet& e);
std::vector<std::pair<Mask, Mask>> nested_pairs(int n);

/// Value in N ∪ {inf} with saturating addition. Infinity is a tag, never a
/// sentinel numeric value; finite addition is exact or throws.
class ExtendedNat {
 public:
  ExtendedNat() : finite_(true), value_(0) {}
  ExtendedNat(std::uint64_t v) : finite_(true), value_(v) {}
  ExtendedNat(int v);

  static ExtendedNat infinity() {
    ExtendedNat x;
    x.finite_ = false;
    return x;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  /// Finite value; throws on infinity.
  std::uint64_t value() const;

  ExtendedNat operator+(const ExtendedNat& o) const;
  ExtendedNat& operator+=(const ExtendedNat& o);

  bool operator==(const ExtendedNat& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  bool operator!=(const ExtendedNat& o) const { return !(*this == o); }
  bool operator<(const ExtendedNat& o) const {
    if (!finite_) return false;
    return !o.finite_ || value_ < o.value_;
  }
  bool operator<=(const ExtendedNat& o) const { return *this < o || *this == o; }
  bool operator>(const ExtendedNat& o) const { return o < *this; }
  bool operator>=(const ExtendedNat& o) const { return o <= *this; }

  std::string str() const;

 private:
  bool finite_;
  std::uint64_t value_ = 0;
};

}  // namespace relrank

#endif  // RELRANK_CORE_HPP
