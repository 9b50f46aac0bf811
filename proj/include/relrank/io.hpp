#ifndef RELRANK_IO_HPP
#define RELRANK_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "relrank/matroid.hpp"
#include "relrank/table.hpp"

namespace relrank {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed matroid spec: a name plus exactly one constructor call. The
/// family always passes through the (I1)-(I3) checker; explicit families
/// may fail, in which case `check` carries the report.
struct MatroidSpec {
  std::string name;
  GroundSet ground;
  FamilyCheck check;

  bool ok() const { return check.ok(); }
  /// The validated matroid; throws when the family failed the axioms.
  const Matroid& matroid() const;
};

/// Line-oriented matroid spec:
///   name: triangle
///   elements: e0 e1 e2
///   representation: graphic        # or explicit | uniform | linear_gf2
///   vertices: 3
///   edges: 0-1 1-2 2-0
/// explicit uses `independent: {} {e0} {e0,e1}` lines, uniform uses `k: 2`,
/// linear_gf2 uses `columns: 10 01 11` (one 0/1 string per element).
MatroidSpec parse_matroid_spec(std::istream& in);
MatroidSpec parse_matroid_spec_file(const std::string& path);

/// Table spec:
///   elements: a b
///   entry: {a,b} {a} 1
/// One `entry` line per nested pair, value a natural or "inf".
RelRankTable parse_table_spec(std::istream& in);
RelRankTable parse_table_spec_file(const std::string& path);

/// Sniffs `representation:` vs `entry:` lines.
bool looks_like_table_spec(const std::string& path);

/// "{a,b}" with labels in ascending index order.
std::string format_subset(const GroundSet& e, Mask m);

/// Parses "{a,b}" (or "{}") against the ground set; throws UnknownLabelError.
Mask parse_subset(const GroundSet& e, const std::string& text);

std::string format_violation(const GroundSet& e, const RelRankViolation& v);
std::string format_violation(const GroundSet& e, const AxiomViolation& v);

void write_table_spec(std::ostream& out, const RelRankTable& t);

}  // namespace relrank

#endif  // RELRANK_IO_HPP
