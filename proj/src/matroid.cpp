#include "relrank/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace relrank {
namespace {

std::string mask_str(const GroundSet& e, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < e.size(); ++i) {
    if (m & (Mask{1} << i)) {
      if (!first) out += ",";
      out += e.label(i);
      first = false;
    }
  }
  return out + "}";
}

std::vector<Mask> sorted_unique(std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// Union-find for graphic independence.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false when u and v are already connected (adding the edge closes a cycle)
  bool unite(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
    return true;
  }
};

}  // namespace

Matroid::Matroid(GroundSet ground, std::vector<Mask> family)
    : ground_(std::move(ground)), family_(sorted_unique(std::move(family))) {
  member_.assign(std::size_t{1} << ground_.size(), false);
  for (Mask m : family_) {
    ground_.validate(m);
    member_[m] = true;
  }
}

bool Matroid::is_independent(Mask x) const {
  ground_.validate(x);
  return member_[x];
}

Mask Matroid::max_independent_extension(Mask j, Mask a) const {
  ground_.validate(a);
  if (!subset_of(j, a)) throw PreconditionError("J is not a subset of A");
  if (!is_independent(j)) throw PreconditionError("J is not independent");
  Mask i = j;
  for (int x = 0; x < ground_.size(); ++x) {
    Mask bit = Mask{1} << x;
    if ((a & bit) && !(i & bit) && member_[i | bit]) i |= bit;
  }
  return i;
}

int Matroid::rank(Mask x) const {
  return popcount(max_independent_extension(0, x));
}

int Matroid::relative_rank(Mask a, Mask b) const {
  if (!subset_of(b, a)) throw PreconditionError("B is not a subset of A");
  Mask j = max_independent_extension(0, b);
  Mask i = max_independent_extension(j, a);
  return diff_size(i, j);
}

std::vector<Mask> Matroid::maximal_independents_within(Mask a) const {
  ground_.validate(a);
  std::vector<Mask> out;
  for (Mask i : family_) {
    if (!subset_of(i, a)) continue;
    bool maximal = true;
    for (int x = 0; x < ground_.size() && maximal; ++x) {
      Mask bit = Mask{1} << x;
      if ((a & bit) && !(i & bit) && member_[i | bit]) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

FamilyCheck from_explicit_family(const GroundSet& e, const std::vector<Mask>& family_in) {
  if (e.size() > kMaxExhaustiveGround) {
    throw PreconditionError("ground set too large for explicit families");
  }
  std::vector<Mask> family = sorted_unique(family_in);
  std::vector<bool> member(std::size_t{1} << e.size(), false);
  for (Mask m : family) {
    e.validate(m);
    member[m] = true;
  }

  AxiomReport report;
  if (family.empty() || !member[0]) {
    report.violations.push_back({"I1", {}, "I1 violation: empty set not in family"});
  }
  for (Mask i : family) {
    for (int x = e.size() - 1; x >= 0; --x) {
      if (!(i & (Mask{1} << x))) continue;
      Mask sub = i & ~(Mask{1} << x);
      if (!member[sub]) {
        report.violations.push_back(
            {"I2",
             {i, sub},
             "I2 violation: " + mask_str(e, i) + " in family but " +
                 mask_str(e, sub) + " absent"});
        break;  // one witness per offending member
      }
    }
  }
  if (report.violations.empty()) {
    // Inclusionwise maximal members of the family.
    std::vector<Mask> maximal;
    for (Mask i : family) {
      bool is_max = true;
      for (Mask ip : family) {
        if (ip != i && subset_of(i, ip)) {
          is_max = false;
          break;
        }
      }
      if (is_max) maximal.push_back(i);
    }
    for (Mask i : family) {
      bool i_is_max =
          std::find(maximal.begin(), maximal.end(), i) != maximal.end();
      if (i_is_max) continue;
      for (Mask ip : maximal) {
        bool augments = false;
        for (Mask s = ip & ~i; s != 0; s &= s - 1) {
          if (member[i | (s & -s)]) {
            augments = true;
            break;
          }
        }
        if (!augments) {
          report.violations.push_back(
              {"I3",
               {i, ip},
               "I3 violation: I=" + mask_str(e, i) + " I'=" + mask_str(e, ip) +
                   " has no augmenting element"});
        }
      }
    }
  }

  FamilyCheck out;
  out.report = std::move(report);
  if (out.report.passed()) out.matroid = Matroid(e, std::move(family));
  return out;
}

bool violation_retriggers(const GroundSet& e, const std::vector<Mask>& family_in,
                          const AxiomViolation& v) {
  std::vector<Mask> family = sorted_unique(family_in);
  std::vector<bool> member(std::size_t{1} << e.size(), false);
  for (Mask m : family) member[m] = true;
  if (v.axiom == "I1") return family.empty() || !member[0];
  if (v.axiom == "I2") return member[v.witnesses.at(0)] && !member[v.witnesses.at(1)];
  if (v.axiom == "I3") {
    Mask i = v.witnesses.at(0), ip = v.witnesses.at(1);
    if (!member[i] || !member[ip]) return false;
    for (Mask s = ip & ~i; s != 0; s &= s - 1) {
      if (member[i | (s & -s)]) return false;
    }
    return true;
  }
  return false;
}

Matroid uniform(const GroundSet& e, int k) {
  if (k < 0 || k > e.size()) throw PreconditionError("uniform: k out of range");
  std::vector<Mask> family;
  Mask full = e.full_mask();
  for (Mask m = 0;; ++m) {
    if (popcount(m) <= k) family.push_back(m);
    if (m == full) break;
  }
  return Matroid(e, std::move(family));
}

Matroid uniform(int k, int n) { return uniform(GroundSet::indexed(n), k); }

Matroid graphic(const GroundSet& e, int vertices,
                const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != e.size()) {
    throw PreconditionError("graphic: one edge per ground-set element required");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw PreconditionError("graphic: edge endpoint out of range");
    }
  }
  std::vector<Mask> family;
  Mask full = e.full_mask();
  for (Mask m = 0;; ++m) {
    DisjointSets ds(vertices);
    bool acyclic = true;
    for (int i = 0; i < e.size() && acyclic; ++i) {
      if (m & (Mask{1} << i)) {
        acyclic = ds.unite(edges[i].first, edges[i].second);
      }
    }
    if (acyclic) family.push_back(m);
    if (m == full) break;
  }
  return Matroid(e, std::move(family));
}

Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  GroundSet e = GroundSet::indexed(static_cast<int>(edges.size()));
  return graphic(e, vertices, edges);
}

namespace {

// GF(2) rank of a set of columns, rows bit-packed into 64-bit words.
// Incremental xor basis keyed by pivot (highest set) bit.
int gf2_rank(const std::vector<std::uint64_t>& cols) {
  std::uint64_t basis[64] = {};
  int rank = 0;
  for (std::uint64_t v : cols) {
    for (int d = 63; d >= 0 && v; --d) {
      if (!(v >> d & 1)) continue;
      if (basis[d]) {
        v ^= basis[d];
      } else {
        basis[d] = v;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace

Matroid linear_gf2(const GroundSet& e, const std::vector<std::vector<int>>& columns) {
  if (static_cast<int>(columns.size()) != e.size()) {
    throw PreconditionError("linear_gf2: one column per ground-set element required");
  }
  if (e.size() > kMaxExhaustiveGround) {
    throw PreconditionError("linear_gf2: at most 16 columns");
  }
  std::size_t rows = columns.empty() ? 0 : columns[0].size();
  if (rows > 64) throw PreconditionError("linear_gf2: at most 64 rows");
  std::vector<std::uint64_t> packed;
  for (const auto& col : columns) {
    if (col.size() != rows) {
      throw PreconditionError("linear_gf2: inconsistent column lengths");
    }
    std::uint64_t w = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (col[r] != 0 && col[r] != 1) {
        throw PreconditionError("linear_gf2: entries must be 0 or 1");
      }
      if (col[r]) w |= std::uint64_t{1} << r;
    }
    packed.push_back(w);
  }
  std::vector<Mask> family;
  Mask full = e.full_mask();
  for (Mask m = 0;; ++m) {
    std::vector<std::uint64_t> chosen;
    for (int i = 0; i < e.size(); ++i) {
      if (m & (Mask{1} << i)) chosen.push_back(packed[i]);
    }
    if (gf2_rank(chosen) == popcount(m)) family.push_back(m);
    if (m == full) break;
  }
  return Matroid(e, std::move(family));
}

Matroid linear_gf2(const std::vector<std::vector<int>>& columns) {
  GroundSet e = GroundSet::indexed(static_cast<int>(columns.size()));
  return linear_gf2(e, columns);
}

Matroid restrict(const Matroid& m, Mask a) {
  m.ground().validate(a);
  std::vector<std::string> labels;
  for (int i = 0; i < m.size(); ++i) {
    if (a & (Mask{1} << i)) labels.push_back(m.ground().label(i));
  }
  std::vector<Mask> family;
  for (Mask i : m.independents()) {
    if (subset_of(i, a)) family.push_back(compress_mask(i, a));
  }
  return Matroid(GroundSet(std::move(labels)), std::move(family));
}

Matroid contract(const Matroid& m, Mask x) {
  m.ground().validate(x);
  Mask rest = m.ground().full_mask() & ~x;
  Mask j = m.max_independent_extension(0, x);
  std::vector<std::string> labels;
  for (int i = 0; i < m.size(); ++i) {
    if (rest & (Mask{1} << i)) labels.push_back(m.ground().label(i));
  }
  std::vector<Mask> family;
  int k = popcount(rest);
  Mask sub_full = mask_bits(k);
  for (Mask s = 0;; ++s) {
    if (m.is_independent(expand_mask(s, rest) | j)) family.push_back(s);
    if (s == sub_full) break;
  }
  return Matroid(GroundSet(std::move(labels)), std::move(family));
}

Matroid dual(const Matroid& m) {
  Mask full = m.ground().full_mask();
  int r = m.rank(full);
  std::set<Mask> fam;
  for (Mask b : m.independents()) {
    if (popcount(b) != r) continue;
    Mask cob = full & ~b;
    // downward closure of the cobasis
    for (Mask s = cob;; s = (s - 1) & cob) {
      fam.insert(s);
      if (s == 0) break;
    }
  }
  if (fam.empty()) fam.insert(0);
  FamilyCheck check =
      from_explicit_family(m.ground(), std::vector<Mask>(fam.begin(), fam.end()));
  if (!check.ok()) throw std::logic_error("dual family failed axiom check");
  return *std::move(check.matroid);
}

}  // namespace relrank
