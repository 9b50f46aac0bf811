#ifndef RELRANK_TABLE_HPP
#define RELRANK_TABLE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "relrank/core.hpp"
#include "relrank/matroid.hpp"

namespace relrank {

/// Explicit relative-rank table: a total map from nested pairs (A, B),
/// B subset A, to ExtendedNat. 3^n entries; no axioms presumed.
class RelRankTable {
 public:
  explicit RelRankTable(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  std::size_t entry_count() const { return values_.size(); }

  ExtendedNat at(Mask a, Mask b) const;
  void set(Mask a, Mask b, ExtendedNat v);

  bool operator==(const RelRankTable& o) const {
    return ground_ == o.ground_ && values_ == o.values_;
  }

  /// First nested pair (canonical order) where the tables differ.
  std::optional<std::pair<Mask, Mask>> first_difference(const RelRankTable& o) const;

 private:
  std::size_t index(Mask a, Mask b) const;

  GroundSet ground_;
  std::vector<std::size_t> offset_;  // per-A offset into values_
  std::vector<ExtendedNat> values_;
};

/// Evaluates r_M on every nested pair. Requires n <= 12.
RelRankTable table_from_matroid(const Matroid& m);

enum class RankAxiom { R1, R2, R3, R4, R5 };
constexpr std::array<RankAxiom, 5> kRankAxioms = {
    RankAxiom::R1, RankAxiom::R2, RankAxiom::R3, RankAxiom::R4, RankAxiom::R5};

const char* axiom_name(RankAxiom a);

struct RelRankViolation {
  RankAxiom axiom;
  std::vector<Mask> sets;    // R1/R4/R5: A,B; R2: A,B; R3: A,B,C
  std::string observed;
  std::string required;
};

struct RelRankReport {
  std::array<std::size_t, 5> counts = {};  // total violations per axiom
  std::vector<RelRankViolation> witnesses; // first few per axiom, canonical order

  bool axiom_passed(RankAxiom a) const { return counts[static_cast<int>(a)] == 0; }
  bool passed() const;
  std::size_t total() const;
  const RelRankViolation* first(RankAxiom a) const;
};

/// Exhaustive (R1)-(R5) check. R4 in its finite-union singleton-cover form;
/// R5 by exact search over I_r. thread_count 0 picks a default capped by
/// RELRANK_THREADS; the report is identical for every thread count.
RelRankReport check_axioms(const RelRankTable& t, int thread_count = 0);

/// Re-evaluates one recorded violation; true when it still fails.
bool violation_retriggers(const RelRankTable& t, const RelRankViolation& v);

/// I_r = { I : r(I|I-x) > 0 for all x in I }, sorted ascending.
std::vector<Mask> r_independents(const RelRankTable& t);

struct ReconstructResult {
  std::optional<Matroid> matroid;  // empty when (I1)-(I3) failed
  AxiomReport family_report;
  bool roundtrip_ok = false;       // matroid built AND regenerated table == input
  std::optional<std::pair<Mask, Mask>> mismatch;  // first table difference
};

/// Builds (E, I_r) through from_explicit_family and compares the regenerated
/// table entry-for-entry.
ReconstructResult reconstruct(const RelRankTable& t);

struct DualityWitness {
  Mask a, b;
  ExtendedNat lhs;  // r_M(A|B) + r_M2(E\B | E\A)
  int rhs;          // |A \ B|
};

/// First nested pair violating r_M(A|B) + r_M2(E\B|E\A) = |A\B|, if any.
std::optional<DualityWitness> find_duality_violation(const Matroid& m, const Matroid& m2);

/// True iff the identity holds on all nested pairs; equivalently m2 = dual(m).
bool duality_identity(const Matroid& m, const Matroid& m2);

/// With N = (M/X)|Y, checks r_M(A|B) = r_N(A\X|B\X) for all
/// X subset B subset A subset X∪Y. X and Y must be disjoint.
bool zoom_identity(const Matroid& m, Mask x, Mask y);

/// r(I+x|I) > 0; requires I in I_r, x not in I, and t satisfying R1, R3.
bool plus_criterion(const RelRankTable& t, Mask i, int x);

/// r(F|I) = 0; requires I in I_r, I subset F, and t satisfying R1, R3, R4.
bool span_criterion(const RelRankTable& t, Mask i, Mask f);

struct RedundancyReport {
  bool r1r2r3 = false;
  bool all_finite = false;
  bool r4 = false;
  bool r5 = false;
  // R1-R3 on finite E should force R4; with finite values also R5. A flagged
  // contradiction is a hard failure, not a data point.
  bool contradiction_r4 = false;
  bool contradiction_r5 = false;
};

RedundancyReport redundancy_report(const RelRankTable& t);

}  // namespace relrank

#endif  // RELRANK_TABLE_HPP
