#include "lcagabor/parse.hpp"

#include "lcagabor/errors.hpp"
#include "lcagabor/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace lcagabor {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long parse_long(std::string_view s, std::string_view what) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw InvalidInput("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

/// Splits on `sep` at parenthesis/bracket depth zero.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw InvalidInput("unbalanced brackets in '" + std::string(s) + "'");
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw InvalidInput("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(cur);
  return out;
}

bool wrapped(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close) return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == open) ++depth;
    if (s[i] == close) --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

std::vector<std::size_t> element_indices(const FiniteLcaGroup& group, const std::vector<std::vector<int>>& tuples) {
  std::vector<std::size_t> out;
  for (auto t : tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const int n = group.orders()[i];
      t[i] = ((t[i] % n) + n) % n;
    }
    out.push_back(group.index(t));
  }
  return out;
}

std::string format_tuple(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

}  // namespace

FiniteLcaGroup parse_group(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw InvalidInput("empty group specification");
  std::vector<int> orders;
  for (const auto& factor : split_top(s, 'x')) {
    if (factor.size() < 2 || factor[0] != 'Z') throw InvalidInput("group factor must look like Z<n>, got '" + factor + "'");
    const long n = parse_long(std::string_view(factor).substr(1), "cyclic order");
    if (n < 1 || n > static_cast<long>(kDefaultCardinalityCap)) throw InvalidInput("cyclic order out of range in '" + factor + "'");
    orders.push_back(static_cast<int>(n));
  }
  return FiniteLcaGroup(std::move(orders));
}

std::vector<std::vector<int>> parse_tuple_list(std::string_view text, std::size_t width) {
  std::string s = strip(text);
  if (s.empty()) throw InvalidInput("empty generator list");
  // Outer wrapper around a list of tuples: ((1,0),(0,1)).
  if (wrapped(s, '(', ')') && s.size() > 2 && s[1] == '(') s = s.substr(1, s.size() - 2);
  std::vector<std::vector<int>> out;
  for (const auto& item : split_top(s, ',')) {
    if (item.empty()) throw InvalidInput("empty tuple in '" + std::string(text) + "'");
    std::string body = item;
    if (wrapped(body, '(', ')')) body = body.substr(1, body.size() - 2);
    std::vector<int> t;
    for (const auto& c : split_top(body, ',')) t.push_back(static_cast<int>(parse_long(c, "coordinate")));
    out.push_back(std::move(t));
  }
  // Bare integers "1,2" for width 1 arrive as separate items; tuples like "(1,2)" as one item.
  for (const auto& t : out)
    if (t.size() != width)
      throw InvalidInput("tuple has " + std::to_string(t.size()) + " entries, expected " + std::to_string(width));
  return out;
}

Subgroup parse_subgroup(const FiniteLcaGroup& group, std::string_view text) {
  std::string s = strip(text);
  if (s.rfind("gens=", 0) == 0) s = s.substr(5);
  if (s == "trivial") return Subgroup::generated_by(group, {});
  if (s == "all") {
    std::vector<std::size_t> all(group.cardinality());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup::from_elements(group, std::move(all));
  }
  const auto gens = element_indices(group, parse_tuple_list(s, group.rank()));
  return Subgroup::generated_by(group, gens);
}

std::string format_subgroup(const Subgroup& subgroup) {
  if (subgroup.generators().empty()) return "gens=trivial";
  std::string out = "gens=";
  bool first = true;
  for (auto g : subgroup.generators()) {
    out += (first ? "" : ",") + format_tuple(subgroup.parent().coords(g));
    first = false;
  }
  return out;
}

TfLattice parse_lattice(const FiniteLcaGroup& group, std::string_view text) {
  const std::string s = strip(text);
  const std::size_t k = group.rank();
  if (s == "full-time") return TfLattice::full_time(group);
  if (s == "full-plane") return TfLattice::full_plane(group);
  if (s.rfind("critical=", 0) == 0) return TfLattice::critical(parse_subgroup(group, s.substr(9)));
  if (s.rfind("plane-gens=", 0) == 0) {
    const std::string body = s.substr(11);
    const auto halves = split_top(body, 'x');
    if (halves.size() == 2) {
      return TfLattice::separable(parse_subgroup(group, halves[0]), parse_subgroup(group, halves[1]));
    }
    if (halves.size() != 1) throw InvalidInput("plane-gens takes one list or two lists joined by 'x'");
    if (body == "trivial" || body == "()") return TfLattice::generated_by(group, {});
    std::vector<TfPoint> gens;
    for (auto t : parse_tuple_list(body, 2 * k)) {
      std::vector<int> x(t.begin(), t.begin() + static_cast<long>(k));
      std::vector<int> w(t.begin() + static_cast<long>(k), t.end());
      const auto xi = element_indices(group, {x});
      const auto wi = element_indices(group, {w});
      gens.push_back({xi[0], wi[0]});
    }
    return TfLattice::generated_by(group, gens);
  }
  throw InvalidInput("unknown lattice literal '" + s + "'");
}

std::string format_lattice(const TfLattice& lattice) {
  const auto& group = lattice.group();
  const auto gens = lattice.subgroup().generators();
  if (gens.empty()) return "plane-gens=trivial";
  std::string out = "plane-gens=(";
  bool first = true;
  for (auto idx : gens) {
    const TfPoint z = plane_point(group, idx);
    std::vector<int> t = group.coords(z.x);
    const auto w = group.coords(z.omega);
    t.insert(t.end(), w.begin(), w.end());
    out += (first ? "" : ",") + format_tuple(t);
    first = false;
  }
  return out + ")";
}

Window parse_window(const FiniteLcaGroup& group, std::string_view text, Rng& rng) {
  const std::string s = strip(text);
  if (s == "const") return Window::constant(group);
  if (s == "random") return Window::random(group, rng);
  if (s.rfind("delta", 0) == 0) {
    const long at = s.size() == 5 ? 0 : parse_long(std::string_view(s).substr(5), "delta position");
    if (at < 0 || static_cast<std::size_t>(at) >= group.cardinality()) throw InvalidInput("delta position out of range");
    return Window::delta(group, static_cast<std::size_t>(at));
  }
  if (s == "gauss") {
    Window g = periodized_gaussian(group.orders()[0]);
    for (std::size_t i = 1; i < group.rank(); ++i) g = tensor(g, periodized_gaussian(group.orders()[i]));
    if (!(g.group() == group)) throw InvalidInput("gauss needs every cyclic order >= 2");
    return g;
  }
  if (!s.empty() && s.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("malformed window literal: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("window literal must be an array");
    std::vector<Complex> values;
    for (const auto& v : j) {
      if (v.is_number()) {
        values.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        values.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        throw InvalidInput("window entries must be numbers or [re,im] pairs");
      }
    }
    return Window(group, std::move(values));
  }
  throw InvalidInput("unknown window literal '" + s + "'");
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  const std::string s = strip(text);
  if (!wrapped(s, '[', ']')) throw InvalidInput("matrix must be written [[..],[..]]");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : split_top(std::string_view(s).substr(1, s.size() - 2), ',')) {
    if (!wrapped(row, '[', ']')) throw InvalidInput("matrix row must be written [..]");
    std::vector<Rational> entries;
    for (const auto& e : split_top(std::string_view(row).substr(1, row.size() - 2), ','))
      entries.push_back(parse_rational(e));
    rows.push_back(std::move(entries));
  }
  RationalMatrix m(std::move(rows));
  if (!m.is_square()) throw ShapeMismatch("matrix must be square");
  return m;
}

std::vector<int64_t> parse_prime_list(std::string_view text) {
  const std::string s = strip(text);
  std::vector<int64_t> out;
  if (s.empty()) return out;
  for (const auto& p : split_top(s, ',')) out.push_back(parse_long(p, "prime"));
  return out;
}

AdeleAutomorphism parse_automorphism(std::string_view document) {
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(document)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (!fields.emplace(key, trim(std::string_view(line).substr(eq + 1))).second)
      throw InvalidInput("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  if (!fields.count("Ainf")) throw InvalidInput("automorphism file needs Ainf");
  const PlaceSet places(fields.count("S") ? parse_prime_list(fields["S"]) : std::vector<int64_t>{});
  RationalMatrix inf = parse_rational_matrix(fields["Ainf"]);
  if (fields.count("n") && parse_long(strip(fields["n"]), "n") != static_cast<long>(inf.rows()))
    throw ShapeMismatch("n does not match the size of Ainf");
  std::map<std::int64_t, RationalMatrix> finite;
  for (const auto& [key, value] : fields) {
    if (key == "n" || key == "S" || key == "Ainf") continue;
    if (key.size() < 2 || key[0] != 'A') throw InvalidInput("unknown key '" + key + "'");
    const long p = parse_long(std::string_view(key).substr(1), "prime in key");
    finite.emplace(p, parse_rational_matrix(value));
  }
  return AdeleAutomorphism(places, std::move(inf), std::move(finite));
}

AdeleVector parse_adele_vector(std::string_view text, const PlaceSet& places) {
  const std::string s = strip(text);
  auto parse_vec = [](std::string_view v) {
    std::string body(v);
    if (!wrapped(body, '(', ')')) throw InvalidInput("adele component must be written (q1,...)");
    std::vector<Rational> out;
    for (const auto& e : split_top(std::string_view(body).substr(1, body.size() - 2), ','))
      out.push_back(parse_rational(e));
    return out;
  };
  if (s.rfind("diag=", 0) == 0) return AdeleVector::diagonal(places, parse_vec(std::string_view(s).substr(5)));
  AdeleVector x;
  bool have_inf = false;
  for (const auto& item : split_top(s, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("adele component must be place=(..)");
    const std::string place = item.substr(0, eq);
    auto v = parse_vec(std::string_view(item).substr(eq + 1));
    if (place == "inf") {
      x.infinite = std::move(v);
      have_inf = true;
    } else {
      x.finite[parse_long(place, "prime")] = std::move(v);
    }
  }
  if (!have_inf) throw InvalidInput("adele vector needs an inf component");
  return x;
}

}  // namespace lcagabor
