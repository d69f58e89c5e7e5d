#include "lcagabor/finite_lca.hpp"

#include "lcagabor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_set>

namespace lcagabor {

FiniteLcaGroup::FiniteLcaGroup(std::vector<int> orders, std::size_t cap) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidInput("a group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 1) throw InvalidInput("cyclic factor orders must be >= 1");
    if (cardinality_ > cap / static_cast<std::size_t>(n))
      throw CapacityExceeded("group cardinality exceeds cap " + std::to_string(cap));
    cardinality_ *= static_cast<std::size_t>(n);
    exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(n));
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * static_cast<std::size_t>(orders_[i]);
  phase_weights_.reserve(orders_.size());
  for (int n : orders_) phase_weights_.push_back(exponent_ / n);

  auto roots = std::make_shared<std::vector<Complex>>(static_cast<std::size_t>(exponent_));
  for (std::int64_t k = 0; k < exponent_; ++k) {
    // Exact values on the real and imaginary axes.
    if ((4 * k) % exponent_ == 0) {
      static constexpr Complex axis[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      (*roots)[k] = axis[(4 * k) / exponent_];
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(exponent_);
      (*roots)[k] = {std::cos(angle), std::sin(angle)};
    }
  }
  roots_ = std::move(roots);
}

FiniteLcaGroup FiniteLcaGroup::product(const FiniteLcaGroup& first, const FiniteLcaGroup& second) {
  std::vector<int> orders(first.orders_);
  orders.insert(orders.end(), second.orders_.begin(), second.orders_.end());
  return FiniteLcaGroup(std::move(orders), first.cardinality() * second.cardinality());
}

FiniteLcaGroup FiniteLcaGroup::plane(const FiniteLcaGroup& group) { return product(group, group); }

std::size_t FiniteLcaGroup::index(std::span<const int> coords) const {
  if (coords.size() != orders_.size())
    throw ShapeMismatch("element has " + std::to_string(coords.size()) + " coordinates, group " + to_string() +
                        " has rank " + std::to_string(orders_.size()));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int n = orders_[i];
    const int c = ((coords[i] % n) + n) % n;
    idx += static_cast<std::size_t>(c) * strides_[i];
  }
  return idx;
}

std::vector<int> FiniteLcaGroup::coords(std::size_t index) const {
  std::vector<int> out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = static_cast<int>((index / strides_[i]) % static_cast<std::size_t>(orders_[i]));
  }
  return out;
}

std::size_t FiniteLcaGroup::add(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    const std::size_t ca = (a / strides_[i]) % n;
    const std::size_t cb = (b / strides_[i]) % n;
    idx += ((ca + cb) % n) * strides_[i];
  }
  return idx;
}

std::size_t FiniteLcaGroup::sub(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    const std::size_t ca = (a / strides_[i]) % n;
    const std::size_t cb = (b / strides_[i]) % n;
    idx += ((ca + n - cb) % n) * strides_[i];
  }
  return idx;
}

std::size_t FiniteLcaGroup::neg(std::size_t a) const { return sub(0, a); }

std::int64_t FiniteLcaGroup::phase(std::size_t omega, std::size_t x) const {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    const auto cw = static_cast<std::int64_t>((omega / strides_[i]) % n);
    const auto cx = static_cast<std::int64_t>((x / strides_[i]) % n);
    k = (k + ((cw * cx) % orders_[i]) * phase_weights_[i]) % exponent_;
  }
  return k;
}

Complex FiniteLcaGroup::root_of_unity(std::int64_t k) const {
  k %= exponent_;
  if (k < 0) k += exponent_;
  return (*roots_)[static_cast<std::size_t>(k)];
}

std::string FiniteLcaGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(orders_[i]);
  }
  return out;
}

Complex pairing(const FiniteLcaGroup& group, const DualElement& omega, const GroupElement& x) {
  return group.pairing(group.index(omega), group.index(x));
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

// Join <H, g>: union of the cosets H + k g until k g falls back into H.
void join_element(const FiniteLcaGroup& group, std::vector<bool>& member, std::vector<std::size_t>& elems,
                  std::size_t g) {
  if (member[g]) return;
  const std::vector<std::size_t> base = elems;
  std::size_t shift = g;
  while (!member[shift]) {
    for (std::size_t h : base) {
      const std::size_t e = group.add(h, shift);
      if (!member[e]) {
        member[e] = true;
        elems.push_back(e);
      }
    }
    shift = group.add(shift, g);
  }
}

}  // namespace

Subgroup::Subgroup(FiniteLcaGroup parent, std::vector<std::size_t> generators, std::vector<bool> member)
    : parent_(std::move(parent)), generators_(std::move(generators)), member_(std::move(member)) {
  for (std::size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) elements_.push_back(i);
}

Subgroup Subgroup::generated_by(const FiniteLcaGroup& parent, std::span<const std::size_t> generators) {
  std::vector<bool> member(parent.cardinality(), false);
  std::vector<std::size_t> elems{0};
  member[0] = true;
  std::vector<std::size_t> kept;
  for (std::size_t g : generators) {
    if (g >= parent.cardinality()) throw ShapeMismatch("generator outside the group");
    if (member[g]) continue;
    kept.push_back(g);
    join_element(parent, member, elems, g);
  }
  return Subgroup(parent, std::move(kept), std::move(member));
}

Subgroup Subgroup::from_elements(const FiniteLcaGroup& parent, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw InvalidInput("subgroup must contain the identity");
  if (elements.back() >= parent.cardinality()) throw ShapeMismatch("element outside the group");
  Subgroup sub = generated_by(parent, elements);
  if (sub.elements_ != elements) throw InvalidInput("element list is not closed under the group operation");
  // Greedy generating set in ascending order.
  std::vector<bool> member(parent.cardinality(), false);
  std::vector<std::size_t> span{0};
  member[0] = true;
  std::vector<std::size_t> gens;
  for (std::size_t e : elements) {
    if (member[e]) continue;
    gens.push_back(e);
    join_element(parent, member, span, e);
  }
  sub.generators_ = std::move(gens);
  return sub;
}

Subgroup enumerate_subgroup(const FiniteLcaGroup& group, std::span<const GroupElement> generators) {
  std::vector<std::size_t> idx;
  idx.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.coords.size() != group.rank()) throw ShapeMismatch("generator rank does not match " + group.to_string());
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
      if (g.coords[i] < 0 || g.coords[i] >= group.orders()[i])
        throw InvalidInput("generator coordinate out of range for " + group.to_string());
    }
    idx.push_back(group.index(g));
  }
  return Subgroup::generated_by(group, idx);
}

Subgroup annihilator(const Subgroup& lattice) {
  const FiniteLcaGroup& group = lattice.parent();
  std::vector<std::size_t> elems;
  for (std::size_t w = 0; w < group.cardinality(); ++w) {
    bool trivial = true;
    for (std::size_t g : lattice.generators()) {
      if (group.phase(w, g) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) elems.push_back(w);
  }
  return Subgroup::from_elements(group, std::move(elems));
}

namespace {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

std::vector<std::uint64_t> to_bits(const std::vector<bool>& member) {
  std::vector<std::uint64_t> words((member.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  return words;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteLcaGroup& group, std::size_t cap) {
  const std::size_t n = group.cardinality();
  std::vector<Subgroup> found;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> seen;
  std::vector<std::vector<std::size_t>> gens_of;

  auto trivial = Subgroup::generated_by(group, std::span<const std::size_t>{});
  {
    std::vector<bool> member(n, false);
    member[0] = true;
    seen.insert(to_bits(member));
  }
  found.push_back(trivial);

  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::vector<std::size_t> base(found[i].elements().begin(), found[i].elements().end());
    std::vector<bool> base_member(n, false);
    for (auto e : base) base_member[e] = true;
    std::vector<bool> covered = base_member;  // elements whose join we already know
    for (std::size_t e = 1; e < n; ++e) {
      if (covered[e]) continue;
      std::vector<bool> member = base_member;
      std::vector<std::size_t> elems = base;
      join_element(group, member, elems, e);
      // h + k e with gcd(k, m) = 1 generates the same join over H; skip those.
      std::size_t order = 1;
      for (std::size_t m = e; !base_member[m]; m = group.add(m, e)) ++order;
      std::size_t multiple = e;
      for (std::size_t k = 1; k < order; ++k, multiple = group.add(multiple, e)) {
        if (std::gcd(k, order) != 1) continue;
        for (std::size_t h : base) covered[group.add(h, multiple)] = true;
      }
      auto key = to_bits(member);
      if (seen.insert(std::move(key)).second) {
        if (found.size() >= cap)
          throw CapacityExceeded("more than " + std::to_string(cap) + " subgroups in " + group.to_string());
        std::vector<std::size_t> gens(found[i].generators().begin(), found[i].generators().end());
        gens.push_back(e);
        found.push_back(Subgroup::generated_by(group, gens));
      }
    }
  }
  return found;
}

std::vector<std::size_t> coset_representatives(const Subgroup& subgroup) {
  const FiniteLcaGroup& group = subgroup.parent();
  std::vector<bool> seen(group.cardinality(), false);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < group.cardinality(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (std::size_t h : subgroup.elements()) seen[group.add(x, h)] = true;
  }
  return reps;
}

HaarNormalization haar(const FiniteLcaGroup& group) {
  return {Rational(1), Rational(1, static_cast<long long>(group.cardinality()))};
}

Rational lattice_volume(const Subgroup& lattice, Ambient ambient) {
  const auto size = static_cast<long long>(lattice.size());
  const auto card = static_cast<long long>(lattice.parent().cardinality());
  switch (ambient) {
    case Ambient::group:
      return Rational(card, size);
    case Ambient::dual:
      return Rational(1, size);
    case Ambient::plane: {
      const auto orders = lattice.parent().orders();
      const std::size_t half = orders.size() / 2;
      if (orders.size() % 2 != 0 || !std::equal(orders.begin(), orders.begin() + half, orders.begin() + half))
        throw ShapeMismatch("plane volume needs a subgroup of G x G^");
      long long n = 1;
      for (std::size_t i = 0; i < half; ++i) n *= orders[i];
      return Rational(n, size);
    }
  }
  throw InvalidInput("unknown ambient");
}

}  // namespace lcagabor
