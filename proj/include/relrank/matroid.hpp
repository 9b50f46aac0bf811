#ifndef RELRANK_MATROID_HPP
#define RELRANK_MATROID_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relrank/core.hpp"

namespace relrank {

struct AxiomViolation {
  std::string axiom;             // "I1", "I2", "I3"
  std::vector<Mask> witnesses;   // subsets involved, in axiom-specific order
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Finite matroid stored as its full independence family. Immutable after
/// construction; all oracles are pure.
class Matroid {
 public:
  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  /// Independence family, sorted ascending as masks.
  const std::vector<Mask>& independents() const { return family_; }

  bool is_independent(Mask x) const;

  /// Greedily extends independent J within A by ascending element index.
  /// Result is inclusionwise maximal independent within A.
  Mask max_independent_extension(Mask j, Mask a) const;

  int rank(Mask x) const;

  /// r(A|B) via the witness construction: J maximal in B, I maximal in A
  /// extending J; returns |I \ J|. Requires B subset A.
  int relative_rank(Mask a, Mask b) const;

  /// Maximal members of the family (no proper independent superset in A).
  std::vector<Mask> maximal_independents_within(Mask a) const;

  bool same_family(const Matroid& o) const {
    return ground_.size() == o.ground_.size() && family_ == o.family_;
  }

  /// Trusted constructor: the family is taken as-is (constructors that build
  /// matroids by definition use it; arbitrary input goes through
  /// from_explicit_family instead).
  Matroid(GroundSet ground, std::vector<Mask> family);

 private:
  GroundSet ground_;
  std::vector<Mask> family_;   // sorted
  std::vector<bool> member_;   // indexed by mask
};

struct FamilyCheck {
  std::optional<Matroid> matroid;
  AxiomReport report;
  bool ok() const { return matroid.has_value(); }
};

/// Validates (I1)-(I3) on an explicit family; (IM) is implied on finite
/// ground sets. Returns the matroid or a report with a concrete witness per
/// failed axiom.
FamilyCheck from_explicit_family(const GroundSet& e, const std::vector<Mask>& family);

/// Re-runs the single check a violation witnesses; true when it still fails.
bool violation_retriggers(const GroundSet& e, const std::vector<Mask>& family,
                          const AxiomViolation& v);

Matroid uniform(const GroundSet& e, int k);
Matroid uniform(int k, int n);

/// Edge e_i = edges[i]; independent iff no induced cycle. Loops and parallel
/// edges allowed.
Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
Matroid graphic(const GroundSet& e, int vertices,
                const std::vector<std::pair<int, int>>& edges);

/// Columns over GF(2); column i is bit j set iff row j is 1. Independence by
/// bit-packed elimination.
Matroid linear_gf2(const std::vector<std::vector<int>>& columns);
Matroid linear_gf2(const GroundSet& e, const std::vector<std::vector<int>>& columns);

/// M|A with ground set re-indexed to A's elements.
Matroid restrict(const Matroid& m, Mask a);

/// M/X on ground E\X; independence tested against a fixed maximal
/// independent subset of X (choice-independent, asserted in tests).
Matroid contract(const Matroid& m, Mask x);

Matroid dual(const Matroid& m);

}  // namespace relrank

#endif  // RELRANK_MATROID_HPP
