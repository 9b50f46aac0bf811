#include "relrank/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace relrank {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// key/value lines; '#' starts a comment; repeated keys collect in order.
std::vector<std::pair<std::string, std::string>> read_kv_lines(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected `key: value`");
    }
    out.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return out;
}

std::string single_value(const std::vector<std::pair<std::string, std::string>>& kv,
                         const std::string& key) {
  std::optional<std::string> found;
  for (const auto& [k, v] : kv) {
    if (k == key) {
      if (found) throw ParseError("duplicate `" + key + ":` line");
      found = v;
    }
  }
  if (!found) throw ParseError("missing `" + key + ":` line");
  return *found;
}

int parse_nat(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + ": `" + s + "`");
  }
}

}  // namespace

std::string format_subset(const GroundSet& e, Mask m) {
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

Mask parse_subset(const GroundSet& e, const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("subset must be brace-enclosed: `" + text + "`");
  }
  s = s.substr(1, s.size() - 2);
  Mask m = 0;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    int idx = e.index_of(item);
    if (idx < 0) throw UnknownLabelError("unknown label: " + item);
    m |= Mask{1} << idx;
  }
  return m;
}

const Matroid& MatroidSpec::matroid() const {
  if (!check.ok()) {
    std::string msg = "family fails independence axioms";
    for (const auto& viol : check.report.violations) msg += "\n" + viol.message;
    throw PreconditionError(msg);
  }
  return *check.matroid;
}

namespace {

MatroidSpec make_spec(std::string name, const Matroid& m) {
  MatroidSpec out;
  out.name = std::move(name);
  out.ground = m.ground();
  out.check = from_explicit_family(m.ground(), m.independents());
  return out;
}

}  // namespace

MatroidSpec parse_matroid_spec(std::istream& in) {
  auto kv = read_kv_lines(in);
  std::string name = "unnamed";
  for (const auto& [k, v] : kv) {
    if (k == "name") name = v;
  }
  std::vector<std::string> labels = split_ws(single_value(kv, "elements"));
  GroundSet e(labels);
  std::string repr = single_value(kv, "representation");

  if (repr == "explicit") {
    std::vector<Mask> family;
    for (const auto& [k, v] : kv) {
      if (k != "independent") continue;
      std::istringstream sets(v);
      std::string tok;
      while (sets >> tok) family.push_back(parse_subset(e, tok));
    }
    MatroidSpec out;
    out.name = name;
    out.ground = e;
    out.check = from_explicit_family(e, family);
    return out;
  }
  if (repr == "uniform") {
    int k = parse_nat(single_value(kv, "k"), "k");
    return make_spec(name, uniform(e, k));
  }
  if (repr == "graphic") {
    int vertices = parse_nat(single_value(kv, "vertices"), "vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const std::string& tok : split_ws(single_value(kv, "edges"))) {
      std::size_t dash = tok.find('-');
      if (dash == std::string::npos) {
        throw ParseError("edge must look like `u-v`: `" + tok + "`");
      }
      edges.emplace_back(parse_nat(tok.substr(0, dash), "edge endpoint"),
                         parse_nat(tok.substr(dash + 1), "edge endpoint"));
    }
    return make_spec(name, graphic(e, vertices, edges));
  }
  if (repr == "linear_gf2") {
    std::vector<std::vector<int>> columns;
    for (const std::string& tok : split_ws(single_value(kv, "columns"))) {
      std::vector<int> col;
      for (char c : tok) {
        if (c != '0' && c != '1') throw ParseError("column entries must be 0/1");
        col.push_back(c - '0');
      }
      columns.push_back(std::move(col));
    }
    return make_spec(name, linear_gf2(e, columns));
  }
  throw ParseError("unknown representation: `" + repr + "`");
}

MatroidSpec parse_matroid_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_matroid_spec(in);
}

RelRankTable parse_table_spec(std::istream& in) {
  auto kv = read_kv_lines(in);
  GroundSet e(split_ws(single_value(kv, "elements")));
  RelRankTable t(e);
  std::map<std::pair<Mask, Mask>, bool> seen;
  for (const auto& [k, v] : kv) {
    if (k != "entry") continue;
    std::vector<std::string> parts = split_ws(v);
    if (parts.size() != 3) {
      throw ParseError("entry needs `A B value`: `" + v + "`");
    }
    Mask a = parse_subset(e, parts[0]);
    Mask b = parse_subset(e, parts[1]);
    if (!subset_of(b, a)) {
      throw ParseError("entry has B not a subset of A: `" + v + "`");
    }
    if (seen.count({a, b})) {
      throw ParseError("duplicate entry for pair `" + v + "`");
    }
    seen[{a, b}] = true;
    ExtendedNat value = parts[2] == "inf"
                            ? ExtendedNat::infinity()
                            : ExtendedNat(parse_nat(parts[2], "entry value"));
    t.set(a, b, value);
  }
  std::size_t expected = 1;
  for (int i = 0; i < e.size(); ++i) expected *= 3;
  if (seen.size() != expected) {
    throw ParseError("table has " + std::to_string(seen.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  return t;
}

RelRankTable parse_table_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_table_spec(in);
}

bool looks_like_table_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.rfind("entry:", 0) == 0) return true;
    if (line.rfind("representation:", 0) == 0) return false;
  }
  throw ParseError("file has neither `representation:` nor `entry:` lines: " + path);
}

std::string format_violation(const GroundSet& e, const RelRankViolation& v) {
  std::string out = std::string(axiom_name(v.axiom)) + " violation:";
  const char* tags[] = {" A=", " B=", " C="};
  for (std::size_t i = 0; i < v.sets.size() && i < 3; ++i) {
    out += tags[i] + format_subset(e, v.sets[i]);
  }
  out += " observed " + v.observed + " required " + v.required;
  return out;
}

std::string format_violation(const GroundSet& /*e*/, const AxiomViolation& v) {
  return v.message;
}

void write_table_spec(std::ostream& out, const RelRankTable& t) {
  out << "elements:";
  for (const auto& l : t.ground().labels()) out << " " << l;
  out << "\n";
  for_each_nested_pair(t.size(), [&](Mask a, Mask b) {
    out << "entry: " << format_subset(t.ground(), a) << " "
        << format_subset(t.ground(), b) << " " << t.at(a, b).str() << "\n";
  });
}

}  // namespace relrank
