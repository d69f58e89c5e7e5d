#include "lcagabor/adeles.hpp"

#include "lcagabor/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace lcagabor {

// ---------------------------------------------------------------------------
// PlaceSet

PlaceSet::PlaceSet(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
    throw InvalidInput("place set lists a prime twice");
  for (auto p : primes_) Prime{p};
}

bool PlaceSet::contains(std::int64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

bool PlaceSet::is_s_integer(const Rational& q) const {
  if (q == 0) return true;
  Integer den = boost::multiprecision::denominator(q);
  for (auto p : primes_)
    while (den % p == 0) den /= p;
  return den == 1;
}

bool PlaceSet::is_s_unit(const Rational& q) const { return q != 0 && is_s_integer(q) && is_s_integer(1 / q); }

// ---------------------------------------------------------------------------
// AdeleAutomorphism

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = to_double(m(r, c));
  return out;
}

void validate_finite(const PlaceSet& places, std::size_t n, const std::map<std::int64_t, RationalMatrix>& finite) {
  for (const auto& [p, m] : finite) {
    if (!places.contains(p)) throw InvalidInput("component at p = " + std::to_string(p) + " outside S");
    if (m.rows() != n || m.cols() != n) throw ShapeMismatch("component at p = " + std::to_string(p) + " has wrong size");
    if (m.determinant() == 0) throw SingularMatrix("component at p = " + std::to_string(p) + " is singular");
  }
}

}  // namespace

AdeleAutomorphism::AdeleAutomorphism(PlaceSet places, RationalMatrix infinite,
                                     std::map<std::int64_t, RationalMatrix> finite)
    : places_(std::move(places)), dimension_(infinite.rows()), finite_(std::move(finite)) {
  if (!infinite.is_square() || dimension_ == 0) throw ShapeMismatch("A_inf must be a nonempty square matrix");
  if (infinite.determinant() == 0) throw SingularMatrix("A_inf is singular");
  validate_finite(places_, dimension_, finite_);
  infinite_ = to_eigen(infinite);
  infinite_exact_ = std::move(infinite);
}

AdeleAutomorphism::AdeleAutomorphism(PlaceSet places, Eigen::MatrixXd infinite,
                                     std::map<std::int64_t, RationalMatrix> finite)
    : places_(std::move(places)),
      dimension_(static_cast<std::size_t>(infinite.rows())),
      infinite_(std::move(infinite)),
      finite_(std::move(finite)) {
  if (infinite_.rows() != infinite_.cols() || dimension_ == 0)
    throw ShapeMismatch("A_inf must be a nonempty square matrix");
  if (!infinite_.allFinite()) throw InvalidInput("A_inf has non-finite entries");
  if (infinite_.fullPivLu().rank() < infinite_.rows()) throw SingularMatrix("A_inf is singular");
  validate_finite(places_, dimension_, finite_);
}

AdeleAutomorphism AdeleAutomorphism::identity(PlaceSet places, std::size_t dimension) {
  return AdeleAutomorphism(std::move(places), RationalMatrix::identity(dimension));
}

AdeleAutomorphism AdeleAutomorphism::diagonal_scalar(PlaceSet places, std::size_t dimension, const Rational& q) {
  const RationalMatrix m = RationalMatrix::diagonal(std::vector<Rational>(dimension, q));
  std::map<std::int64_t, RationalMatrix> finite;
  for (auto p : places.primes()) finite.emplace(p, m);
  return AdeleAutomorphism(std::move(places), m, std::move(finite));
}

RationalMatrix AdeleAutomorphism::at_prime(std::int64_t p) const {
  if (auto it = finite_.find(p); it != finite_.end()) return it->second;
  return RationalMatrix::identity(dimension_);
}

AdeleAutomorphism AdeleAutomorphism::compose(const AdeleAutomorphism& other) const {
  if (places_ != other.places_) throw ShapeMismatch("automorphisms over different place sets");
  if (dimension_ != other.dimension_) throw ShapeMismatch("automorphisms of different dimension");
  std::map<std::int64_t, RationalMatrix> finite;
  for (auto p : places_.primes()) {
    const bool mine = finite_.count(p) > 0;
    const bool theirs = other.finite_.count(p) > 0;
    if (mine || theirs) finite.emplace(p, at_prime(p) * other.at_prime(p));
  }
  if (infinite_exact_ && other.infinite_exact_)
    return AdeleAutomorphism(places_, *infinite_exact_ * *other.infinite_exact_, std::move(finite));
  return AdeleAutomorphism(places_, Eigen::MatrixXd(infinite_ * other.infinite_), std::move(finite));
}

AdeleAutomorphism AdeleAutomorphism::inverse() const {
  std::map<std::int64_t, RationalMatrix> finite;
  for (const auto& [p, m] : finite_) finite.emplace(p, m.inverse());
  if (infinite_exact_) return AdeleAutomorphism(places_, infinite_exact_->inverse(), std::move(finite));
  return AdeleAutomorphism(places_, Eigen::MatrixXd(infinite_.inverse()), std::move(finite));
}

AdeleAutomorphism AdeleAutomorphism::scale_infinite(double factor) const {
  return AdeleAutomorphism(places_, Eigen::MatrixXd(factor * infinite_), finite_);
}

ModularValue global_modular(const AdeleAutomorphism& a) {
  ModularValue out;
  out.finite_part = 1;
  for (const auto& [p, m] : a.finite()) out.finite_part *= local_modular(m, Place::finite(Prime(p)));
  if (a.infinite_exact()) {
    out.exact_value = local_modular(*a.infinite_exact(), Place::infinite()) * out.finite_part;
    out.value = to_double(*out.exact_value);
  } else {
    out.value = std::abs(a.infinite().determinant()) * to_double(out.finite_part);
  }
  return out;
}

ModularValue lattice_volume(const AdeleLattice& lattice) { return global_modular(lattice.automorphism()); }

AdeleVector AdeleVector::diagonal(const PlaceSet& places, const std::vector<Rational>& q) {
  AdeleVector x;
  x.infinite = q;
  for (auto p : places.primes()) x.finite.emplace(p, q);
  return x;
}

// ---------------------------------------------------------------------------
// Membership and equality

Membership lattice_membership(const AdeleVector& x, const AdeleLattice& lattice) {
  const AdeleAutomorphism& a = lattice.automorphism();
  const PlaceSet& places = a.places();
  const std::size_t n = a.dimension();
  if (!a.infinite_exact()) throw InvalidInput("membership needs a rational A_inf");
  if (x.infinite.size() != n) throw ShapeMismatch("x_inf has the wrong dimension");
  for (const auto& [p, v] : x.finite) {
    if (!places.contains(p)) throw InvalidInput("x has a component at p = " + std::to_string(p) + " outside S");
    if (v.size() != n) throw ShapeMismatch("x_" + std::to_string(p) + " has the wrong dimension");
  }
  for (auto p : places.primes())
    if (!x.finite.count(p)) throw InvalidInput("x has no component at p = " + std::to_string(p));

  std::vector<Rational> q = a.infinite_exact()->solve(x.infinite);
  for (auto p : places.primes())
    if (a.at_prime(p).apply(q) != x.finite.at(p)) return {};
  for (const auto& entry : q)
    if (!places.is_s_integer(entry)) return {};
  return {true, std::move(q)};
}

bool lattice_equality(const AdeleLattice& first, const AdeleLattice& second) {
  if (first.dimension() != second.dimension()) throw ShapeMismatch("lattices of different dimension");
  if (first.places() != second.places()) throw ShapeMismatch("lattices over different place sets");
  const AdeleAutomorphism& a1 = first.automorphism();
  const AdeleAutomorphism& a2 = second.automorphism();
  if (!a1.infinite_exact() || !a2.infinite_exact()) throw InvalidInput("equality needs rational A_inf");

  const RationalMatrix r = a1.infinite_exact()->inverse() * *a2.infinite_exact();
  for (auto p : first.places().primes())
    if (a1.at_prime(p).inverse() * a2.at_prime(p) != r) return false;
  const PlaceSet& places = first.places();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!places.is_s_integer(r(i, j))) return false;
  return places.is_s_unit(r.determinant());
}

namespace {

bool generators_inside(const AdeleLattice& from, const AdeleLattice& into) {
  const AdeleAutomorphism& a = from.automorphism();
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    AdeleVector x;
    x.infinite = a.infinite_exact()->apply(e);
    for (auto p : from.places().primes()) x.finite.emplace(p, a.at_prime(p).apply(e));
    if (!lattice_membership(x, into).member) return false;
  }
  return true;
}

}  // namespace

bool lattice_equality_by_generators(const AdeleLattice& first, const AdeleLattice& second) {
  if (first.dimension() != second.dimension()) throw ShapeMismatch("lattices of different dimension");
  if (first.places() != second.places()) throw ShapeMismatch("lattices over different place sets");
  if (!first.automorphism().infinite_exact() || !second.automorphism().infinite_exact())
    throw InvalidInput("equality needs rational A_inf");
  return generators_inside(first, second) && generators_inside(second, first);
}

// ---------------------------------------------------------------------------
// Deformation margin

namespace {

/// Exact k-th root of a nonnegative integer, if there is one.
std::optional<Integer> integer_root(const Integer& value, unsigned k) {
  if (value < 2) return value;
  Integer lo = 1;
  Integer hi = value;
  while (lo <= hi) {
    const Integer mid = (lo + hi) / 2;
    const Integer pw = boost::multiprecision::pow(mid, k);
    if (pw == value) return mid;
    if (pw < value) lo = mid + 1;
    else hi = mid - 1;
  }
  return std::nullopt;
}

}  // namespace

DeformationMargin deformation_margin(const Rational& volume, std::size_t half_dimension) {
  if (half_dimension == 0) throw InvalidInput("plane dimension must be positive");
  if (volume <= 0) throw InvalidInput("volume must be positive");
  if (volume > 1) throw InvalidInput("volume " + to_string(volume) + " exceeds 1: no frame to deform");
  if (volume == 1) return {0.0, Rational(0)};
  const unsigned k = static_cast<unsigned>(2 * half_dimension);
  DeformationMargin out;
  out.value = std::pow(1.0 / to_double(volume), 1.0 / k) - 1.0;
  const auto num = integer_root(boost::multiprecision::denominator(volume), k);
  const auto den = integer_root(boost::multiprecision::numerator(volume), k);
  if (num && den) {
    out.exact = Rational(*num, *den) - 1;
    out.value = to_double(*out.exact);
  }
  return out;
}

DeformationMargin deformation_margin(double volume, std::size_t half_dimension) {
  if (half_dimension == 0) throw InvalidInput("plane dimension must be positive");
  if (!(volume > 0) || !std::isfinite(volume)) throw InvalidInput("volume must be positive");
  if (volume > 1) throw InvalidInput("volume exceeds 1: no frame to deform");
  if (volume == 1) return {0.0, Rational(0)};
  return {std::pow(1.0 / volume, 1.0 / static_cast<double>(2 * half_dimension)) - 1.0, std::nullopt};
}

DeformationMargin deformation_margin(const AdeleLattice& lattice) {
  if (lattice.dimension() % 2 != 0) throw InvalidInput("deformation margin needs a lattice in an even-dimensional plane");
  const ModularValue vol = lattice_volume(lattice);
  if (vol.exact_value) return deformation_margin(*vol.exact_value, lattice.dimension() / 2);
  return deformation_margin(vol.value, lattice.dimension() / 2);
}

// ---------------------------------------------------------------------------
// Group specifications

std::size_t GroupSpec::real_dimension() const {
  std::size_t d = 0;
  for (const auto& f : factors) d += f.real_dimension;
  return d;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long parse_positive(std::string_view digits, std::string_view what) {
  const std::string t = trim(digits);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidInput("expected a positive integer for " + std::string(what) + ", got '" + t + "'");
  if (t.size() > 9) throw InvalidInput(std::string(what) + " is too large");
  const long v = std::stol(t);
  if (v <= 0) throw InvalidInput(std::string(what) + " must be positive");
  return v;
}

/// Parses "key=value; key=value" into a map, validating the key set.
std::map<std::string, std::string> parse_fields(std::string_view body, std::initializer_list<std::string_view> keys,
                                                std::string_view factor) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string_view::npos) end = body.size();
    const std::string item = trim(body.substr(start, end - start));
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidInput("expected key=value in '" + std::string(factor) + "'");
      const std::string key = trim(std::string_view(item).substr(0, eq));
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw InvalidInput("unknown field '" + key + "' in '" + std::string(factor) + "'");
      if (!out.emplace(key, trim(std::string_view(item).substr(eq + 1))).second)
        throw InvalidInput("field '" + key + "' repeated in '" + std::string(factor) + "'");
    }
    start = end + 1;
  }
  for (auto k : keys)
    if (!out.count(std::string(k)))
      throw InvalidInput("missing field '" + std::string(k) + "' in '" + std::string(factor) + "'");
  return out;
}

void validate_prime_list(std::string_view list) {
  std::vector<std::int64_t> primes;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    primes.push_back(parse_positive(list.substr(start, end - start), "prime"));
    start = end + 1;
  }
  PlaceSet{primes};
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

GroupFactor parse_factor(const std::string& text) {
  using Kind = GroupFactor::Kind;
  if (text.empty()) throw InvalidInput("empty factor in group specification");
  const auto brace = text.find('{');
  if (brace != std::string::npos) {
    if (text.back() != '}') throw InvalidInput("unterminated '{' in '" + text + "'");
    const std::string head = trim(std::string_view(text).substr(0, brace));
    const std::string_view body = std::string_view(text).substr(brace + 1, text.size() - brace - 2);
    if (head == "A_Q") {
      auto f = parse_fields(body, {"S", "n"}, text);
      validate_prime_list(f["S"]);
      const auto n = static_cast<std::size_t>(parse_positive(f["n"], "n"));
      return {Kind::adeles, n, text};
    }
    if (head == "Q_S") {
      auto f = parse_fields(body, {"S", "n"}, text);
      validate_prime_list(f["S"]);
      parse_positive(f["n"], "n");
      return {Kind::s_adic, 0, text};
    }
    if (head == "Q_p") {
      auto f = parse_fields(body, {"p", "n"}, text);
      Prime{parse_positive(f["p"], "p")};
      parse_positive(f["n"], "n");
      return {Kind::p_adic, 0, text};
    }
    if (head == "A_Fq") {
      auto f = parse_fields(body, {"q", "n"}, text);
      if (!is_prime_power(parse_positive(f["q"], "q"))) throw InvalidInput("q must be a prime power in '" + text + "'");
      parse_positive(f["n"], "n");
      return {Kind::function_field_adeles, 0, text};
    }
    throw InvalidInput("unknown factor '" + head + "'");
  }
  if (text == "R") return {Kind::real, 1, text};
  if (text.rfind("R^", 0) == 0)
    return {Kind::real, static_cast<std::size_t>(parse_positive(std::string_view(text).substr(2), "R^d")), text};
  if (text == "Z") return {Kind::integers, 0, text};
  if (text == "T") return {Kind::torus, 0, text};
  if (text.size() > 1 && text[0] == 'Z') {
    parse_positive(std::string_view(text).substr(1), "cyclic order");
    return {Kind::finite, 0, text};
  }
  throw InvalidInput("unknown factor '" + text + "'");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}' && --depth < 0) throw InvalidInput("unbalanced '}' in group specification");
    if (c == 'x' && depth == 0) {
      spec.factors.push_back(parse_factor(trim(current)));
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw InvalidInput("unbalanced '{' in group specification");
  spec.factors.push_back(parse_factor(trim(current)));
  return spec;
}

BalianLowVerdict balian_low_classifier(const GroupSpec& spec) {
  BalianLowVerdict v;
  v.real_dimension = spec.real_dimension();
  v.blt_holds = v.real_dimension >= 1;
  v.message = v.blt_holds ? "noncompact identity component: BLT holds, no S0 frame at volume 1"
                          : "compact identity component: BLT fails, ONB exists over Lambda x Lambda^perp";
  return v;
}

BalianLowVerdict balian_low_classifier(std::string_view spec) { return balian_low_classifier(parse_group_spec(spec)); }

// ---------------------------------------------------------------------------
// Transference

namespace {

Subgroup multiples(const FiniteLcaGroup& cyclic, int step) {
  const std::size_t gen = static_cast<std::size_t>(step % cyclic.orders()[0]);
  return Subgroup::generated_by(cyclic, std::span<const std::size_t>(&gen, 1));
}

void check_step(int modulus, int step) {
  if (modulus < 1) throw InvalidInput("modulus must be positive");
  if (step < 1 || modulus % step != 0) throw InvalidInput("step must be a positive divisor of the modulus");
}

}  // namespace

Window compact_open_indicator(int modulus, int step) {
  check_step(modulus, step);
  const FiniteLcaGroup h({modulus});
  const Subgroup k = multiples(h, step);
  std::vector<Complex> values(h.cardinality());
  const double c = 1.0 / std::sqrt(static_cast<double>(k.size()));
  for (auto e : k.elements()) values[e] = c;
  return Window(h, std::move(values));
}

std::vector<Complex> compact_open_inner_products(int modulus, int step) {
  const Window u = compact_open_indicator(modulus, step);
  const auto& h = u.group();
  std::vector<TfPoint> points;
  points.reserve(h.cardinality() * h.cardinality());
  for (std::size_t x = 0; x < h.cardinality(); ++x)
    for (std::size_t w = 0; w < h.cardinality(); ++w) points.push_back({x, w});
  return kernels::tf_inner_products(u, u, points);
}

TransferenceResult finite_transference_check(const Window& g, const Window& h, const TfLattice& lattice,
                                             int modulus, int step) {
  check_step(modulus, step);
  require_same_group(g.group(), h.group());
  require_same_group(g.group(), lattice.group());

  const Window u = compact_open_indicator(modulus, step);
  const Subgroup k = multiples(u.group(), step);
  const TfLattice local = TfLattice::separable(k, annihilator(k));
  TfLattice lifted = product_lattice(lattice, local);
  Window gt = tensor(g, u);
  Window ht = tensor(h, u);

  const WexlerRazResult base = wexler_raz_check(g, h, lattice);
  const WexlerRazResult top = wexler_raz_check(gt, ht, lifted);

  // <g~, pi(z) h~> = <g, pi(z1) h> <u, pi(z2) u> on the lifted adjoint.
  const TfLattice adjoint = adjoint_lattice(lifted);
  const FiniteLcaGroup& g1 = g.group();
  const FiniteLcaGroup& g2 = u.group();
  const FiniteLcaGroup& gp = gt.group();
  const auto full = kernels::tf_inner_products(gt, ht, adjoint.points());
  std::vector<TfPoint> first;
  std::vector<TfPoint> second;
  for (const TfPoint& z : adjoint.points()) {
    const auto x = gp.coords(z.x);
    const auto w = gp.coords(z.omega);
    const std::size_t r = g1.rank();
    first.push_back({g1.index(std::span<const int>(x.data(), r)), g1.index(std::span<const int>(w.data(), r))});
    second.push_back({g2.index(std::span<const int>(x.data() + r, 1)), g2.index(std::span<const int>(w.data() + r, 1))});
  }
  const auto left = kernels::tf_inner_products(g, h, first);
  const auto right = kernels::tf_inner_products(u, u, second);
  double factorization = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i)
    factorization = std::max(factorization, std::abs(full[i] - left[i] * right[i]));

  return {base.holds, top.holds, base.residual, top.residual, factorization,
          std::move(lifted), std::move(gt), std::move(ht)};
}

}  // namespace lcagabor
