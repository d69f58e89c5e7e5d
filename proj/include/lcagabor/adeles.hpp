#pragma once

// S-adeles over Q: R^n x prod_{p in S} Q_p^n with Z(S)^n = Z[1/p : p in S]^n
// embedded diagonally. Only the places in S are materialized; every other
// component of an automorphism is the identity by construction.
//
// Haar measure is normalized so that vol(Z(S)^n) = 1.

#include "lcagabor/finite_lca.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/padic.hpp"
#include "lcagabor/rational.hpp"
#include "lcagabor/window.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcagabor {

/// Sorted distinct certified primes. Places outside the set are integral.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<std::int64_t> primes);

  const std::vector<std::int64_t>& primes() const { return primes_; }
  bool contains(std::int64_t p) const;
  std::size_t size() const { return primes_.size(); }
  /// True iff every prime dividing the denominator of q lies in the set.
  bool is_s_integer(const Rational& q) const;
  /// q is a unit of Z(S): nonzero and supported on S.
  bool is_s_unit(const Rational& q) const;

  friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

 private:
  std::vector<std::int64_t> primes_;
};

class AdeleAutomorphism {
 public:
  /// Exact real component; usable for membership and equality.
  AdeleAutomorphism(PlaceSet places, RationalMatrix infinite, std::map<std::int64_t, RationalMatrix> finite = {});
  /// Floating real component; volume arithmetic only.
  AdeleAutomorphism(PlaceSet places, Eigen::MatrixXd infinite, std::map<std::int64_t, RationalMatrix> finite = {});

  static AdeleAutomorphism identity(PlaceSet places, std::size_t dimension);
  /// Scalar q at infinity and at every place of S.
  static AdeleAutomorphism diagonal_scalar(PlaceSet places, std::size_t dimension, const Rational& q);

  std::size_t dimension() const { return dimension_; }
  const PlaceSet& places() const { return places_; }
  const Eigen::MatrixXd& infinite() const { return infinite_; }
  const std::optional<RationalMatrix>& infinite_exact() const { return infinite_exact_; }
  /// Stored components only; absent primes act as the identity.
  const std::map<std::int64_t, RationalMatrix>& finite() const { return finite_; }
  /// A_p, the identity when not stored.
  RationalMatrix at_prime(std::int64_t p) const;

  /// Componentwise product (*this) o other.
  AdeleAutomorphism compose(const AdeleAutomorphism& other) const;
  /// Componentwise inverse. Throws SingularMatrix.
  AdeleAutomorphism inverse() const;
  /// Same automorphism with the real component multiplied by `factor`.
  AdeleAutomorphism scale_infinite(double factor) const;

 private:
  PlaceSet places_;
  std::size_t dimension_ = 0;
  Eigen::MatrixXd infinite_;
  std::optional<RationalMatrix> infinite_exact_;
  std::map<std::int64_t, RationalMatrix> finite_;
};

struct ModularValue {
  double value = 0.0;                   ///< |det A_inf| * finite_part
  Rational finite_part;                 ///< prod_p |det A_p|_p, exact
  std::optional<Rational> exact_value;  ///< present when A_inf is rational
};

/// mod(A) = |det A_inf| prod_{p in S} |det A_p|_p.
ModularValue global_modular(const AdeleAutomorphism& a);

/// { (A_inf q, (A_p q)_p) : q in Z(S)^n }.
class AdeleLattice {
 public:
  explicit AdeleLattice(AdeleAutomorphism automorphism) : automorphism_(std::move(automorphism)) {}

  static AdeleLattice base(PlaceSet places, std::size_t dimension) {
    return AdeleLattice(AdeleAutomorphism::identity(std::move(places), dimension));
  }

  const AdeleAutomorphism& automorphism() const { return automorphism_; }
  std::size_t dimension() const { return automorphism_.dimension(); }
  const PlaceSet& places() const { return automorphism_.places(); }

  /// alpha(L), represented by alpha o A.
  AdeleLattice image(const AdeleAutomorphism& alpha) const { return AdeleLattice(alpha.compose(automorphism_)); }

 private:
  AdeleAutomorphism automorphism_;
};

/// Rational data at infinity and at each place of S.
struct AdeleVector {
  std::vector<Rational> infinite;
  std::map<std::int64_t, std::vector<Rational>> finite;

  /// Same rational vector at every place.
  static AdeleVector diagonal(const PlaceSet& places, const std::vector<Rational>& q);
};

ModularValue lattice_volume(const AdeleLattice& lattice);

struct Membership {
  bool member = false;
  std::optional<std::vector<Rational>> witness;  ///< q with x = A q, when member
};

/// Requires a rational A_inf; throws InvalidInput otherwise or when x lacks a
/// place of S or carries a prime outside S.
Membership lattice_membership(const AdeleVector& x, const AdeleLattice& lattice);

/// Semantic equality: A1^{-1} A2 is one matrix R at every place and R is in GL_n(Z(S)).
bool lattice_equality(const AdeleLattice& first, const AdeleLattice& second);

/// Independent route: every generator A2 e_i lies in L1 and every A1 e_i lies in L2.
bool lattice_equality_by_generators(const AdeleLattice& first, const AdeleLattice& second);

struct DeformationMargin {
  double value = 0.0;
  std::optional<Rational> exact;  ///< when vol^{-1/(2n)} is rational
};

/// Largest eps with vol((1+eps) A_inf, A_p) <= 1 for a lattice in the
/// 2n-dimensional plane: eps = vol^{-1/(2n)} - 1. Throws InvalidInput for
/// vol > 1 or odd dimension.
DeformationMargin deformation_margin(const AdeleLattice& lattice);
DeformationMargin deformation_margin(const Rational& volume, std::size_t half_dimension);
DeformationMargin deformation_margin(double volume, std::size_t half_dimension);

// ---------------------------------------------------------------------------
// Balian-Low classification

/// One factor of a group specification.
struct GroupFactor {
  enum class Kind { real, adeles, s_adic, p_adic, function_field_adeles, finite, integers, torus };
  Kind kind;
  std::size_t real_dimension = 0;
  std::string text;
};

struct GroupSpec {
  std::vector<GroupFactor> factors;
  std::size_t real_dimension() const;
};

/// Factors joined by 'x' at top level:
///   R, R^d, A_Q{S=2,3; n=2}, Q_S{S=2; n=1}, Q_p{p=5; n=1}, A_Fq{q=4; n=1},
///   Zk such as Z12 (finite cyclic), Z (integers), T (circle).
GroupSpec parse_group_spec(std::string_view text);

struct BalianLowVerdict {
  std::size_t real_dimension = 0;
  bool blt_holds = false;
  std::string message;
};

BalianLowVerdict balian_low_classifier(const GroupSpec& spec);
BalianLowVerdict balian_low_classifier(std::string_view spec);

// ---------------------------------------------------------------------------
// Transference at finite scale. H = Z/M stands in for Q_p^n and K = d Z/M for
// its compact open subgroup.

/// 1_K / sqrt(|K|) on Z/M with K = step * Z/M.
Window compact_open_indicator(int modulus, int step);

/// <u, pi(x,w) u> for u = compact_open_indicator, over the plane of Z/M.
std::vector<Complex> compact_open_inner_products(int modulus, int step);

struct TransferenceResult {
  bool base_dual = false;         ///< Wexler-Raz for (g, h) over D1 on Z/L
  bool lifted_dual = false;       ///< Wexler-Raz for (g~, h~) over D1 x (K x K^perp)
  double base_residual = 0.0;
  double lifted_residual = 0.0;
  /// max |<g~, pi(z) h~> - <g, pi(z1) h> <u, pi(z2) u>| over the lifted adjoint.
  double factorization_residual = 0.0;
  TfLattice lifted_lattice;
  Window lifted_g;
  Window lifted_h;

  bool equivalent() const { return base_dual == lifted_dual; }
};

/// Throws InvalidInput unless step divides modulus.
TransferenceResult finite_transference_check(const Window& g, const Window& h, const TfLattice& lattice,
                                             int modulus, int step);

}  // namespace lcagabor
