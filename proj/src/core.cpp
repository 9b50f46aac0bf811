#include "relrank/core.hpp"

#include <limits>
#include <unordered_set>

namespace relrank {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw PreconditionError("duplicate ground-set label: " + l);
    }
  }
  if (size() > 32) throw PreconditionError("ground set larger than 32 elements");
}

GroundSet GroundSet::indexed(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

void GroundSet::validate(Mask m) const {
  if ((m & ~full_mask()) != 0) {
    throw GroundMismatchError("mask has bits outside the ground set");
  }
}

int diff_size(const GroundSet& e, Mask a, Mask b) {
  e.validate(a);
  e.validate(b);
  return diff_size(a, b);
}

Mask compress_mask(Mask m, Mask selector) {
  Mask out = 0;
  int pos = 0;
  for (Mask s = selector; s != 0; s &= s - 1, ++pos) {
    Mask bit = s & -s;
    if (m & bit) out |= Mask{1} << pos;
  }
  return out;
}

Mask expand_mask(Mask m, Mask selector) {
  Mask out = 0;
  int pos = 0;
  for (Mask s = selector; s != 0; s &= s - 1, ++pos) {
    Mask bit = s & -s;
    if (m & (Mask{1} << pos)) out |= bit;
  }
  return out;
}

std::vector<std::pair<Mask, Mask>> nested_pairs(int n) {
  if (n < 0 || n > kMaxExhaustiveGround) {
    throw PreconditionError("ground set too large for exhaustive enumeration");
  }
  std::vector<std::pair<Mask, Mask>> out;
  for_each_nested_pair(n, [&](Mask a, Mask b) { out.emplace_back(a, b); });
  return out;
}

std::vector<std::pair<Mask, Mask>> nested_pairs(const GroundSet& e) {
  return nested_pairs(e.size());
}

ExtendedNat::ExtendedNat(int v) : finite_(true) {
  if (v < 0) throw PreconditionError("ExtendedNat from negative value");
  value_ = static_cast<std::uint64_t>(v);
}

std::uint64_t ExtendedNat::value() const {
  if (!finite_) throw PreconditionError("value() on infinite ExtendedNat");
  return value_;
}

ExtendedNat ExtendedNat::operator+(const ExtendedNat& o) const {
  if (!finite_ || !o.finite_) return infinity();
  if (value_ > std::numeric_limits<std::uint64_t>::max() - o.value_) {
    throw std::overflow_error("ExtendedNat addition overflow");
  }
  return ExtendedNat(value_ + o.value_);
}

ExtendedNat& ExtendedNat::operator+=(const ExtendedNat& o) {
  *this = *this + o;
  return *this;
}

std::string ExtendedNat::str() const {
  return finite_ ? std::to_string(value_) : std::string("inf");
}

}  // namespace relrank
