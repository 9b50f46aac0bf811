#ifndef RELRANK_ENUMERATION_HPP
#define RELRANK_ENUMERATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "relrank/matroid.hpp"
#include "relrank/table.hpp"

namespace relrank {

/// All labeled matroids on n elements, n <= 5. Enumerates antichains of
/// equicardinal basis candidates, takes downward closure and filters by
/// (I3); each labeled family appears exactly once.
std::vector<Matroid> enumerate_matroids(int n);

/// Second pipeline, n <= 4: filters every family bitset over 2^n subsets
/// through the (I1)-(I3) checker. Slow but assumption-free; used to
/// cross-validate enumerate_matroids.
std::vector<Matroid> enumerate_matroids_exhaustive(int n);

/// Minimum over all element permutations of the sorted relabeled mask list,
/// serialized. Equal keys iff the labeled families are isomorphic. n <= 7.
std::string canonical_form(const Matroid& m);

/// One representative per isomorphism class, in canonical-key order.
std::vector<Matroid> isomorphism_classes(int n);

/// Seeded +/-1 perturbation of one to three entries, clamped into the
/// R1-feasible box [0, |A\B|]. Returns the input unchanged when no entry
/// can move (n = 0). Same (t, seed) gives an identical output.
RelRankTable mutate_table(const RelRankTable& t, std::uint64_t seed);

struct ConverseFuzzReport {
  std::size_t trials = 0;
  std::size_t axioms_passed = 0;          // class (a)
  std::size_t roundtripped = 0;           // class (a) members that round-trip
  std::size_t axioms_failed = 0;          // class (b)
  std::array<std::size_t, 5> axiom_fail_counts = {};  // tables violating each axiom
  std::size_t hard_failures = 0;          // class (a) members failing the round trip
  std::vector<std::uint64_t> hard_failure_seeds;
};

/// Mutates corpus tables at size n and checks the reconstruction theorem:
/// axiom-passing tables must round-trip; failures are partitioned by axiom.
ConverseFuzzReport converse_fuzz(int n, std::size_t trials, std::uint64_t seed);

}  // namespace relrank

#endif  // RELRANK_ENUMERATION_HPP
