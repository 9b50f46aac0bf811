#ifndef RELRANK_FINCOF_HPP
#define RELRANK_FINCOF_HPP

#include <set>
#include <string>

#include "relrank/core.hpp"
#include "relrank/matroid.hpp"

namespace relrank {

/// A subset of the countable ground set Z that is finite or cofinite,
/// stored canonically as a tag plus finite support (the set itself when
/// finite, its complement when cofinite). Closed under union, intersection,
/// difference and complement.
class FinCofSet {
 public:
  static FinCofSet finite(std::set<long> support);
  static FinCofSet cofinite(std::set<long> missing);
  static FinCofSet empty() { return finite({}); }
  static FinCofSet all() { return cofinite({}); }

  bool is_finite() const { return finite_; }
  bool is_cofinite() const { return !finite_; }
  const std::set<long>& support() const { return support_; }

  bool contains(long x) const;
  bool subset_of(const FinCofSet& o) const;

  FinCofSet complement() const;
  friend FinCofSet set_union(const FinCofSet& a, const FinCofSet& b);
  friend FinCofSet set_intersection(const FinCofSet& a, const FinCofSet& b);
  friend FinCofSet set_difference(const FinCofSet& a, const FinCofSet& b);

  bool operator==(const FinCofSet& o) const {
    return finite_ == o.finite_ && support_ == o.support_;
  }

  std::string str() const;

 private:
  FinCofSet(bool fin, std::set<long> support)
      : finite_(fin), support_(std::move(support)) {}

  bool finite_;
  std::set<long> support_;
};

/// The two infinite matroids of the counterexample: FreeZ has every subset
/// independent; AlmostFreeZ has every subset except Z itself.
enum class SymbolicKind { FreeZ, AlmostFreeZ };

ExtendedNat fincof_card(const FinCofSet& s);

bool sym_independent(SymbolicKind kind, const FinCofSet& s);

/// max{|I| : I independent, I subset X}. Both kinds agree everywhere: an
/// infinite X contains arbitrarily large finite independent sets.
ExtendedNat sym_rank(SymbolicKind kind, const FinCofSet& x);

/// Closed-form relative rank, derived by the witness construction.
/// FreeZ: take J = B and I = A, so r = |A\B|.
/// AlmostFreeZ: same, except when A = Z and B is cofinite. There J = B is
/// maximal in B, and no independent I with B subset I subset Z can cover all
/// of Z\B (I = Z is dependent), so one element is lost: r = max(|A\B|-1, 0).
ExtendedNat sym_relrank(SymbolicKind kind, const FinCofSet& a, const FinCofSet& b);

struct DistinguishingWitness {
  FinCofSet a, b;
  ExtendedNat free_value, almost_value;
};

/// The pair (Z, Z-{0}) where the two relative ranks differ (1 vs 0) while
/// the plain ranks agree on both components.
DistinguishingWitness distinguishing_witness();

/// Restriction of the symbolic matroid to the finite window {0..n-1}; both
/// kinds yield the free matroid uniform(n, n).
Matroid finite_window(SymbolicKind kind, int n);

}  // namespace relrank

#endif  // RELRANK_FINCOF_HPP
