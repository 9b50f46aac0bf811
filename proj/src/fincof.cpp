#include "relrank/fincof.hpp"

#include <algorithm>
#include <iterator>

namespace relrank {
namespace {

std::set<long> set_minus(const std::set<long>& a, const std::set<long>& b) {
  std::set<long> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.begin()));
  return out;
}

std::set<long> set_and(const std::set<long>& a, const std::set<long>& b) {
  std::set<long> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

std::set<long> set_or(const std::set<long>& a, const std::set<long>& b) {
  std::set<long> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool disjoint(const std::set<long>& a, const std::set<long>& b) {
  return set_and(a, b).empty();
}

bool includes(const std::set<long>& big, const std::set<long>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

FinCofSet FinCofSet::finite(std::set<long> support) {
  return FinCofSet(true, std::move(support));
}

FinCofSet FinCofSet::cofinite(std::set<long> missing) {
  return FinCofSet(false, std::move(missing));
}

bool FinCofSet::contains(long x) const {
  bool in_support = support_.count(x) != 0;
  return finite_ ? in_support : !in_support;
}

bool FinCofSet::subset_of(const FinCofSet& o) const {
  if (finite_ && o.finite_) return includes(o.support_, support_);
  if (finite_ && !o.finite_) return disjoint(support_, o.support_);
  if (!finite_ && o.finite_) return false;  // an infinite set never fits in a finite one
  return includes(support_, o.support_);    // complements reverse inclusion
}

FinCofSet FinCofSet::complement() const { return FinCofSet(!finite_, support_); }

FinCofSet set_union(const FinCofSet& a, const FinCofSet& b) {
  if (a.finite_ && b.finite_) return FinCofSet(true, set_or(a.support_, b.support_));
  if (!a.finite_ && !b.finite_)
    return FinCofSet(false, set_and(a.support_, b.support_));
  const FinCofSet& fin = a.finite_ ? a : b;
  const FinCofSet& cof = a.finite_ ? b : a;
  return FinCofSet(false, set_minus(cof.support_, fin.support_));
}

FinCofSet set_intersection(const FinCofSet& a, const FinCofSet& b) {
  return set_union(a.complement(), b.complement()).complement();
}

FinCofSet set_difference(const FinCofSet& a, const FinCofSet& b) {
  return set_intersection(a, b.complement());
}

std::string FinCofSet::str() const {
  std::string body = "{";
  bool first = true;
  for (long x : support_) {
    if (!first) body += ",";
    body += std::to_string(x);
    first = false;
  }
  body += "}";
  if (finite_) return body;
  return support_.empty() ? "Z" : "Z-" + body;
}

ExtendedNat fincof_card(const FinCofSet& s) {
  if (s.is_finite()) return ExtendedNat(static_cast<std::uint64_t>(s.support().size()));
  return ExtendedNat::infinity();
}

bool sym_independent(SymbolicKind kind, const FinCofSet& s) {
  if (kind == SymbolicKind::AlmostFreeZ && s == FinCofSet::all()) return false;
  return true;
}

ExtendedNat sym_rank(SymbolicKind /*kind*/, const FinCofSet& x) {
  // Finite X is itself independent in both kinds; infinite X contains finite
  // independent subsets of every size, so the maximum is inf in both kinds.
  return fincof_card(x);
}

ExtendedNat sym_relrank(SymbolicKind kind, const FinCofSet& a, const FinCofSet& b) {
  if (!b.subset_of(a)) throw PreconditionError("sym_relrank: B is not a subset of A");
  ExtendedNat gap = fincof_card(set_difference(a, b));
  if (kind == SymbolicKind::AlmostFreeZ && a == FinCofSet::all() && b.is_cofinite()) {
    // J = B is maximal independent in B; every independent I between B and Z
    // misses one element of Z, so |I \ J| = |A\B| - 1 (never below zero).
    std::uint64_t g = gap.value();  // A\B = support of B, finite here
    return ExtendedNat(g == 0 ? 0 : g - 1);
  }
  return gap;
}

DistinguishingWitness distinguishing_witness() {
  FinCofSet a = FinCofSet::all();
  FinCofSet b = FinCofSet::cofinite({0});
  return {a, b, sym_relrank(SymbolicKind::FreeZ, a, b),
          sym_relrank(SymbolicKind::AlmostFreeZ, a, b)};
}

Matroid finite_window(SymbolicKind kind, int n) {
  GroundSet e = GroundSet::indexed(n);
  std::vector<Mask> family;
  Mask full = e.full_mask();
  for (Mask m = 0;; ++m) {
    std::set<long> labels;
    for (int i = 0; i < n; ++i) {
      if (m & (Mask{1} << i)) labels.insert(i);
    }
    if (sym_independent(kind, FinCofSet::finite(std::move(labels)))) {
      family.push_back(m);
    }
    if (m == full) break;
  }
  FamilyCheck fc = from_explicit_family(e, family);
  if (!fc.ok()) throw std::logic_error("finite window family failed axiom check");
  return *std::move(fc.matroid);
}

}  // namespace relrank
