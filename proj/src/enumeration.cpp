#include "relrank/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace relrank {
namespace {

std::vector<Mask> downward_closure(const std::vector<Mask>& tops) {
  std::set<Mask> fam;
  for (Mask t : tops) {
    for (Mask s = t;; s = (s - 1) & t) {
      fam.insert(s);
      if (s == 0) break;
    }
  }
  if (fam.empty()) fam.insert(0);
  return {fam.begin(), fam.end()};
}

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (m & (Mask{1} << i)) out |= Mask{1} << perm[i];
  }
  return out;
}

}  // namespace

std::vector<Matroid> enumerate_matroids(int n) {
  if (n < 0 || n > 5) throw PreconditionError("enumerate_matroids: n must be <= 5");
  GroundSet e = GroundSet::indexed(n);
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    // all k-subsets; (I3) forces the maximal sets to share one cardinality
    std::vector<Mask> ksets;
    Mask full = e.full_mask();
    for (Mask m = 0;; ++m) {
      if (popcount(m) == k) ksets.push_back(m);
      if (m == full) break;
    }
    std::uint64_t combos = std::uint64_t{1} << ksets.size();
    for (std::uint64_t pick = 1; pick < combos; ++pick) {
      std::vector<Mask> bases;
      for (std::size_t i = 0; i < ksets.size(); ++i) {
        if (pick >> i & 1) bases.push_back(ksets[i]);
      }
      FamilyCheck fc = from_explicit_family(e, downward_closure(bases));
      if (fc.ok()) out.push_back(*std::move(fc.matroid));
    }
  }
  return out;
}

std::vector<Matroid> enumerate_matroids_exhaustive(int n) {
  if (n < 0 || n > 4) {
    throw PreconditionError("enumerate_matroids_exhaustive: n must be <= 4");
  }
  GroundSet e = GroundSet::indexed(n);
  std::size_t n_subsets = std::size_t{1} << n;
  std::uint64_t n_families = std::uint64_t{1} << n_subsets;
  std::vector<Matroid> out;
  for (std::uint64_t bits = 0; bits < n_families; ++bits) {
    std::vector<Mask> family;
    for (std::size_t s = 0; s < n_subsets; ++s) {
      if (bits >> s & 1) family.push_back(static_cast<Mask>(s));
    }
    if (family.empty()) continue;
    FamilyCheck fc = from_explicit_family(e, family);
    if (fc.ok()) out.push_back(*std::move(fc.matroid));
  }
  return out;
}

std::string canonical_form(const Matroid& m) {
  int n = m.size();
  if (n > 7) throw PreconditionError("canonical_form: n must be <= 7");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<Mask> relabeled;
    relabeled.reserve(m.independents().size());
    for (Mask i : m.independents()) relabeled.push_back(permute_mask(i, perm));
    std::sort(relabeled.begin(), relabeled.end());
    std::string key;
    key.push_back(static_cast<char>(n));
    for (Mask i : relabeled) {
      key.push_back(static_cast<char>(i & 0xff));
    }
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Matroid> isomorphism_classes(int n) {
  std::map<std::string, Matroid> by_key;
  for (Matroid& m : enumerate_matroids(n)) {
    by_key.emplace(canonical_form(m), std::move(m));
  }
  std::vector<Matroid> out;
  for (auto& [key, m] : by_key) out.push_back(std::move(m));
  return out;
}

RelRankTable mutate_table(const RelRankTable& t, std::uint64_t seed) {
  std::vector<std::pair<Mask, Mask>> mutable_pairs;
  for_each_nested_pair(t.size(), [&](Mask a, Mask b) {
    if (diff_size(a, b) > 0 && t.at(a, b).is_finite()) mutable_pairs.emplace_back(a, b);
  });
  if (mutable_pairs.empty()) return t;

  std::mt19937_64 rng(seed);
  RelRankTable out = t;
  std::size_t n_mutations = 1 + rng() % 3;
  for (std::size_t i = 0; i < n_mutations; ++i) {
    auto [a, b] = mutable_pairs[rng() % mutable_pairs.size()];
    std::uint64_t hi = static_cast<std::uint64_t>(diff_size(a, b));
    std::uint64_t old = out.at(a, b).value();
    bool up = rng() & 1;
    if (old == 0) up = true;
    if (old >= hi) up = false;
    out.set(a, b, ExtendedNat(up ? old + 1 : old - 1));
  }
  return out;
}

ConverseFuzzReport converse_fuzz(int n, std::size_t trials, std::uint64_t seed) {
  if (n < 0 || n > 4) throw PreconditionError("converse_fuzz: n must be <= 4");
  std::vector<Matroid> corpus = enumerate_matroids(n);
  std::vector<RelRankTable> tables;
  tables.reserve(corpus.size());
  for (const Matroid& m : corpus) tables.push_back(table_from_matroid(m));

  ConverseFuzzReport rep;
  rep.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    std::uint64_t trial_seed = seed + i;
    RelRankTable t = mutate_table(tables[i % tables.size()], trial_seed);
    RelRankReport axioms = check_axioms(t);
    if (axioms.passed()) {
      ++rep.axioms_passed;
      if (reconstruct(t).roundtrip_ok) {
        ++rep.roundtripped;
      } else {
        ++rep.hard_failures;
        rep.hard_failure_seeds.push_back(trial_seed);
      }
    } else {
      ++rep.axioms_failed;
      for (RankAxiom a : kRankAxioms) {
        if (!axioms.axiom_passed(a)) {
          ++rep.axiom_fail_counts[static_cast<std::size_t>(a)];
        }
      }
    }
  }
  return rep;
}

}  // namespace relrank
