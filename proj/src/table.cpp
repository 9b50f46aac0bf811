#include "relrank/table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace relrank {
namespace {

constexpr int kTableGroundCap = 12;     // 3^12 entries
constexpr std::size_t kWitnessCap = 4;  // stored per axiom; counts are exact

int resolve_threads(int requested) {
  int n = requested;
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("RELRANK_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0 && cap < n) n = cap;
  }
  return n;
}

}  // namespace

RelRankTable::RelRankTable(GroundSet ground) : ground_(std::move(ground)) {
  if (ground_.size() > kTableGroundCap) {
    throw PreconditionError("ground set too large for an explicit rank table");
  }
  offset_.resize((std::size_t{1} << ground_.size()) + 1, 0);
  std::size_t total = 0;
  Mask full = ground_.full_mask();
  for (Mask a = 0;; ++a) {
    offset_[a] = total;
    total += std::size_t{1} << popcount(a);
    if (a == full) break;
  }
  offset_[std::size_t{full} + 1] = total;
  values_.assign(total, ExtendedNat(0));
}

std::size_t RelRankTable::index(Mask a, Mask b) const {
  ground_.validate(a);
  if (!subset_of(b, a)) throw PreconditionError("table lookup needs B subset A");
  // submask iteration order is descending in compressed value
  Mask pos = (mask_bits(popcount(a))) - compress_mask(b, a);
  return offset_[a] + pos;
}

ExtendedNat RelRankTable::at(Mask a, Mask b) const { return values_[index(a, b)]; }

void RelRankTable::set(Mask a, Mask b, ExtendedNat v) { values_[index(a, b)] = v; }

std::optional<std::pair<Mask, Mask>> RelRankTable::first_difference(
    const RelRankTable& o) const {
  if (!(ground_ == o.ground_)) {
    throw GroundMismatchError("tables over different ground sets");
  }
  std::optional<std::pair<Mask, Mask>> out;
  for_each_nested_pair(size(), [&](Mask a, Mask b) {
    if (!out && at(a, b) != o.at(a, b)) out = {{a, b}};
  });
  return out;
}

RelRankTable table_from_matroid(const Matroid& m) {
  if (m.size() > kTableGroundCap) {
    throw PreconditionError("ground set too large for an explicit rank table");
  }
  RelRankTable t(m.ground());
  for_each_nested_pair(m.size(), [&](Mask a, Mask b) {
    t.set(a, b, ExtendedNat(m.relative_rank(a, b)));
  });
  return t;
}

const char* axiom_name(RankAxiom a) {
  switch (a) {
    case RankAxiom::R1: return "R1";
    case RankAxiom::R2: return "R2";
    case RankAxiom::R3: return "R3";
    case RankAxiom::R4: return "R4";
    case RankAxiom::R5: return "R5";
  }
  return "?";
}

bool RelRankReport::passed() const {
  for (std::size_t c : counts) {
    if (c) return false;
  }
  return true;
}

std::size_t RelRankReport::total() const {
  std::size_t s = 0;
  for (std::size_t c : counts) s += c;
  return s;
}

const RelRankViolation* RelRankReport::first(RankAxiom a) const {
  for (const auto& w : witnesses) {
    if (w.axiom == a) return &w;
  }
  return nullptr;
}

std::vector<Mask> r_independents(const RelRankTable& t) {
  std::vector<Mask> out;
  Mask full = t.ground().full_mask();
  for (Mask i = 0;; ++i) {
    bool indep = true;
    for (Mask s = i; s != 0 && indep; s &= s - 1) {
      Mask x = s & -s;
      if (!(t.at(i, i & ~x) > ExtendedNat(0))) indep = false;
    }
    if (indep) out.push_back(i);
    if (i == full) break;
  }
  return out;
}

namespace {

struct ChunkResult {
  std::array<std::size_t, 5> counts = {};
  std::vector<RelRankViolation> witnesses;

  void record(RankAxiom ax, std::vector<Mask> sets, std::string observed,
              std::string required) {
    std::size_t i = static_cast<std::size_t>(ax);
    if (counts[i]++ < kWitnessCap) {
      witnesses.push_back({ax, std::move(sets), std::move(observed), std::move(required)});
    }
  }
};

// R5 instance: exists I in indep, I subset A, r(A|I)=0 and r(B|B∩I)=0.
bool r5_holds(const RelRankTable& t, const std::vector<Mask>& indep, Mask a, Mask b) {
  for (Mask i : indep) {
    if (!subset_of(i, a)) continue;
    if (t.at(a, i) == ExtendedNat(0) && t.at(b, b & i) == ExtendedNat(0)) return true;
  }
  return false;
}

void check_chunk(const RelRankTable& t, const std::vector<Mask>& indep,
                 Mask a_begin, Mask a_end, ChunkResult& out) {
  const Mask full = t.ground().full_mask();
  for (Mask a = a_begin; a < a_end; ++a) {
    // R1, R3, R4, R5 walk the nested pairs under a.
    for (Mask b = a;; b = (b - 1) & a) {
      ExtendedNat rab = t.at(a, b);
      if (!(rab <= ExtendedNat(diff_size(a, b)))) {
        out.record(RankAxiom::R1, {a, b}, rab.str(),
                   "<= " + std::to_string(diff_size(a, b)));
      }
      for (Mask c = b;; c = (c - 1) & b) {
        ExtendedNat sum = rab + t.at(b, c);
        if (t.at(a, c) != sum) {
          out.record(RankAxiom::R3, {a, b, c}, t.at(a, c).str(), sum.str());
        }
        if (c == 0) break;
      }
      bool all_zero_steps = true;
      for (Mask s = a & ~b; s != 0; s &= s - 1) {
        if (t.at(b | (s & -s), b) != ExtendedNat(0)) {
          all_zero_steps = false;
          break;
        }
      }
      if (all_zero_steps && rab != ExtendedNat(0)) {
        out.record(RankAxiom::R4, {a, b}, rab.str(), "0");
      }
      if (!r5_holds(t, indep, a, b)) {
        out.record(RankAxiom::R5, {a, b}, "no spanning I in I_r", "exists I");
      }
      if (b == 0) break;
    }
    // R2 ranges over arbitrary B.
    for (Mask b = 0;; ++b) {
      if (t.at(a, a & b) < t.at(a | b, b)) {
        out.record(RankAxiom::R2, {a, b}, t.at(a, a & b).str(),
                   ">= " + t.at(a | b, b).str());
      }
      if (b == full) break;
    }
  }
}

}  // namespace

RelRankReport check_axioms(const RelRankTable& t, int thread_count) {
  const std::vector<Mask> indep = r_independents(t);
  const std::size_t n_masks = std::size_t{1} << t.size();
  const std::size_t n_chunks = std::min<std::size_t>(64, n_masks);
  std::vector<ChunkResult> chunks(n_chunks);

  auto run_chunk = [&](std::size_t ci) {
    Mask begin = static_cast<Mask>(ci * n_masks / n_chunks);
    Mask end = static_cast<Mask>((ci + 1) * n_masks / n_chunks);
    check_chunk(t, indep, begin, end, chunks[ci]);
  };

  int threads = std::min<int>(resolve_threads(thread_count),
                              static_cast<int>(n_chunks));
  if (threads <= 1) {
    for (std::size_t ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t ci = next++; ci < n_chunks; ci = next++) run_chunk(ci);
      });
    }
    for (auto& th : pool) th.join();
  }

  // merge in chunk order: witnesses come out in canonical (A ascending) order
  RelRankReport report;
  std::array<std::size_t, 5> kept = {};
  for (const auto& ch : chunks) {
    for (int i = 0; i < 5; ++i) report.counts[i] += ch.counts[i];
    for (const auto& w : ch.witnesses) {
      if (kept[static_cast<std::size_t>(w.axiom)]++ < kWitnessCap) {
        report.witnesses.push_back(w);
      }
    }
  }
  std::stable_sort(report.witnesses.begin(), report.witnesses.end(),
                   [](const RelRankViolation& x, const RelRankViolation& y) {
                     return x.axiom < y.axiom;
                   });
  return report;
}

bool violation_retriggers(const RelRankTable& t, const RelRankViolation& v) {
  switch (v.axiom) {
    case RankAxiom::R1: {
      Mask a = v.sets.at(0), b = v.sets.at(1);
      return !(t.at(a, b) <= ExtendedNat(diff_size(a, b)));
    }
    case RankAxiom::R2: {
      Mask a = v.sets.at(0), b = v.sets.at(1);
      return t.at(a, a & b) < t.at(a | b, b);
    }
    case RankAxiom::R3: {
      Mask a = v.sets.at(0), b = v.sets.at(1), c = v.sets.at(2);
      return t.at(a, c) != t.at(a, b) + t.at(b, c);
    }
    case RankAxiom::R4: {
      Mask a = v.sets.at(0), b = v.sets.at(1);
      for (Mask s = a & ~b; s != 0; s &= s - 1) {
        if (t.at(b | (s & -s), b) != ExtendedNat(0)) return false;
      }
      return t.at(a, b) != ExtendedNat(0);
    }
    case RankAxiom::R5: {
      Mask a = v.sets.at(0), b = v.sets.at(1);
      return !r5_holds(t, r_independents(t), a, b);
    }
  }
  return false;
}

ReconstructResult reconstruct(const RelRankTable& t) {
  ReconstructResult out;
  FamilyCheck fc = from_explicit_family(t.ground(), r_independents(t));
  out.family_report = fc.report;
  if (!fc.ok()) return out;
  out.matroid = std::move(fc.matroid);
  RelRankTable regen = table_from_matroid(*out.matroid);
  out.mismatch = t.first_difference(regen);
  out.roundtrip_ok = !out.mismatch.has_value();
  return out;
}

std::optional<DualityWitness> find_duality_violation(const Matroid& m,
                                                     const Matroid& m2) {
  if (!(m.ground() == m2.ground())) {
    throw GroundMismatchError("duality check needs a common ground set");
  }
  Mask full = m.ground().full_mask();
  std::optional<DualityWitness> out;
  for_each_nested_pair(m.size(), [&](Mask a, Mask b) {
    if (out) return;
    ExtendedNat lhs = ExtendedNat(m.relative_rank(a, b)) +
                      ExtendedNat(m2.relative_rank(full & ~b, full & ~a));
    int rhs = diff_size(a, b);
    if (lhs != ExtendedNat(rhs)) out = DualityWitness{a, b, lhs, rhs};
  });
  return out;
}

bool duality_identity(const Matroid& m, const Matroid& m2) {
  return !find_duality_violation(m, m2).has_value();
}

bool zoom_identity(const Matroid& m, Mask x, Mask y) {
  m.ground().validate(x);
  m.ground().validate(y);
  if ((x & y) != 0) throw PreconditionError("zoom: X and Y must be disjoint");
  Matroid contracted = contract(m, x);
  Mask rest = m.ground().full_mask() & ~x;
  Matroid n = restrict(contracted, compress_mask(y, rest));
  // pairs X subset B subset A subset X∪Y
  bool ok = true;
  for (Mask s = y;; s = (s - 1) & y) {     // s = A \ X
    for (Mask u = s;; u = (u - 1) & s) {   // u = B \ X
      Mask a = x | s, b = x | u;
      if (m.relative_rank(a, b) !=
          n.relative_rank(compress_mask(s, y), compress_mask(u, y))) {
        ok = false;
      }
      if (u == 0) break;
    }
    if (!ok || s == 0) break;
  }
  return ok;
}

namespace {

void require_axioms(const RelRankTable& t, std::initializer_list<RankAxiom> axioms,
                    const char* who) {
  RelRankReport rep = check_axioms(t);
  for (RankAxiom a : axioms) {
    if (!rep.axiom_passed(a)) {
      throw PreconditionError(std::string(who) + " requires the table to satisfy " +
                              axiom_name(a));
    }
  }
}

}  // namespace

bool plus_criterion(const RelRankTable& t, Mask i, int x) {
  t.ground().validate(i);
  Mask bit = Mask{1} << x;
  t.ground().validate(bit);
  if (i & bit) throw PreconditionError("plus criterion: x already in I");
  std::vector<Mask> indep = r_independents(t);
  if (!std::binary_search(indep.begin(), indep.end(), i)) {
    throw PreconditionError("plus criterion: I is not r-independent");
  }
  require_axioms(t, {RankAxiom::R1, RankAxiom::R3}, "plus criterion");
  return t.at(i | bit, i) > ExtendedNat(0);
}

bool span_criterion(const RelRankTable& t, Mask i, Mask f) {
  t.ground().validate(f);
  if (!subset_of(i, f)) throw PreconditionError("span criterion: I not inside F");
  std::vector<Mask> indep = r_independents(t);
  if (!std::binary_search(indep.begin(), indep.end(), i)) {
    throw PreconditionError("span criterion: I is not r-independent");
  }
  require_axioms(t, {RankAxiom::R1, RankAxiom::R3, RankAxiom::R4}, "span criterion");
  return t.at(f, i) == ExtendedNat(0);
}

RedundancyReport redundancy_report(const RelRankTable& t) {
  RelRankReport rep = check_axioms(t);
  RedundancyReport out;
  out.r1r2r3 = rep.axiom_passed(RankAxiom::R1) && rep.axiom_passed(RankAxiom::R2) &&
               rep.axiom_passed(RankAxiom::R3);
  out.all_finite = true;
  for_each_nested_pair(t.size(), [&](Mask a, Mask b) {
    if (t.at(a, b).is_infinite()) out.all_finite = false;
  });
  out.r4 = rep.axiom_passed(RankAxiom::R4);
  out.r5 = rep.axiom_passed(RankAxiom::R5);
  out.contradiction_r4 = out.r1r2r3 && !out.r4;
  out.contradiction_r5 = out.r1r2r3 && out.all_finite && !out.r5;
  return out;
}

}  // namespace relrank
