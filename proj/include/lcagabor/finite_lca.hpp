#pragma once

// Finite abelian groups G = Z/n_1 x ... x Z/n_k, their duals, subgroups and
// volumes. Elements are addressed by a mixed-radix index (first coordinate
// most significant); the dual has the same shape and pairs with G through
// <w, x> = exp(2 pi i sum_i w_i x_i / n_i).

#include "lcagabor/rational.hpp"

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lcagabor {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultCardinalityCap = 4096;

struct GroupElement {
  std::vector<int> coords;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct DualElement {
  std::vector<int> coords;
  friend auto operator<=>(const DualElement&, const DualElement&) = default;
};

class FiniteLcaGroup {
 public:
  explicit FiniteLcaGroup(std::vector<int> orders, std::size_t cap = kDefaultCardinalityCap);

  /// G1 x G2 with the coordinates of G1 first.
  static FiniteLcaGroup product(const FiniteLcaGroup& first, const FiniteLcaGroup& second);
  /// The time-frequency plane G x G^ as a group in its own right.
  static FiniteLcaGroup plane(const FiniteLcaGroup& group);

  std::span<const int> orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t cardinality() const { return cardinality_; }
  /// lcm of the orders; every pairing value is a root of unity of this order.
  std::int64_t exponent() const { return exponent_; }

  std::size_t index(std::span<const int> coords) const;
  std::size_t index(const GroupElement& x) const { return index(x.coords); }
  std::size_t index(const DualElement& w) const { return index(w.coords); }
  std::vector<int> coords(std::size_t index) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t sub(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;

  /// Pairing <w, x> as k / exponent() turns, k in [0, exponent()).
  std::int64_t phase(std::size_t omega, std::size_t x) const;
  /// exp(2 pi i k / exponent()); exact at quarter turns.
  Complex root_of_unity(std::int64_t k) const;
  Complex pairing(std::size_t omega, std::size_t x) const { return root_of_unity(phase(omega, x)); }

  /// "Z4xZ2"
  std::string to_string() const;

  friend bool operator==(const FiniteLcaGroup& a, const FiniteLcaGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> phase_weights_;  // exponent / n_i
  std::size_t cardinality_ = 1;
  std::int64_t exponent_ = 1;
  std::shared_ptr<const std::vector<Complex>> roots_;
};

/// <w, x> for explicit coordinates.
Complex pairing(const FiniteLcaGroup& group, const DualElement& omega, const GroupElement& x);

/// A point (x, w) of the time-frequency plane, stored as indices into G and G^.
struct TfPoint {
  std::size_t x = 0;
  std::size_t omega = 0;
  friend auto operator<=>(const TfPoint&, const TfPoint&) = default;
};

/// Subgroup of a finite group, stored as the full sorted element list.
class Subgroup {
 public:
  /// Smallest subgroup containing the generators.
  static Subgroup generated_by(const FiniteLcaGroup& parent, std::span<const std::size_t> generators);
  /// Validates closure; a small generating set is recomputed.
  static Subgroup from_elements(const FiniteLcaGroup& parent, std::vector<std::size_t> elements);

  const FiniteLcaGroup& parent() const { return parent_; }
  std::span<const std::size_t> elements() const { return elements_; }
  std::span<const std::size_t> generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::size_t index) const { return index < member_.size() && member_[index]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(FiniteLcaGroup parent, std::vector<std::size_t> generators, std::vector<bool> member);

  FiniteLcaGroup parent_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> elements_;
  std::vector<bool> member_;
};

/// Closure of explicit generators.
Subgroup enumerate_subgroup(const FiniteLcaGroup& group, std::span<const GroupElement> generators);

/// {w in G^ : w(x) = 1 for all x in the subgroup}, as a subgroup of the same-shaped dual.
Subgroup annihilator(const Subgroup& lattice);

/// Every subgroup of the group, trivial first. Throws CapacityExceeded past `cap` subgroups.
std::vector<Subgroup> all_subgroups(const FiniteLcaGroup& group, std::size_t cap = 20000);

/// Smallest element of each coset of H, ascending; these index G/H.
std::vector<std::size_t> coset_representatives(const Subgroup& subgroup);

enum class Ambient { group, dual, plane };

/// Haar measure: counting on G, 1/|G| per point of G^, product on G x G^.
struct HaarNormalization {
  Rational group_weight;
  Rational dual_weight;
};

HaarNormalization haar(const FiniteLcaGroup& group);

/// Covolume (total Haar mass of the ambient) / |subgroup|.
Rational lattice_volume(const Subgroup& lattice, Ambient ambient);

}  // namespace lcagabor
