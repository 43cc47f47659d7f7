#ifndef LATDIFF_OPERATORS_HPP_
#define LATDIFF_OPERATORS_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "latdiff/lattice.hpp"

namespace latdiff {

/// A total self-map on the elements of a lattice, stored as an image array.
/// Bound to a lattice by size only; immutable and freely shareable.
class Operator {
 public:
  Operator() = default;
  explicit Operator(std::vector<Elem> image);

  static Operator identity(int n);
  static Operator constant(int n, Elem value);

  int size() const { return static_cast<int>(image_.size()); }
  Elem operator()(Elem x) const { return image_.at(static_cast<size_t>(x)); }
  const std::vector<Elem>& image() const { return image_; }

  // "d(0) d(1) ... d(n-1)" with entries space-separated.
  std::string to_string() const;

  auto operator<=>(const Operator&) const = default;

 private:
  std::vector<Elem> image_;
};

// The weight selects which defining identity is checked:
//   0:  d(x/\y) = (d(x)/\y) \/ (x/\d(y))                      (derivation)
//   1:  d(x/\y) = (d(x)/\y) \/ (x/\d(y)) \/ (d(x)/\d(y))      (difference operator)
//  -1:  d(x/\y) \/ (d(x)/\d(y)) = (d(x)/\y) \/ (x/\d(y))
enum class Weight : int { zero = 0, plus_one = 1, minus_one = -1 };

// Accepts exactly 0, 1, -1.
Weight weight_from_int(int value);
int weight_to_int(Weight w);

/// True iff the weight identity holds for every pair of elements.
///
/// Both sides of each identity are symmetric in (x, y), so only unordered
/// pairs are examined. The diagonal x = y is skipped for weight +1, where
/// absorption makes the identity automatic; for weights 0 and -1 the
/// diagonal is a genuine constraint (it forces d(x) <= x) and is checked.
bool check_weight(const Lattice& l, const Operator& d, Weight w);
bool check_weight(const Lattice& l, std::span<const Elem> image, Weight w);

enum class OpProperty {
  decreasing,         // d(x) <= x for all x
  increasing,         // x <= d(x) for all x
  isotone,            // x <= y implies d(x) <= d(y)
  meet_homomorphism,  // d(x/\y) = d(x)/\d(y)
  join_homomorphism,  // d(x\/y) = d(x)\/d(y)
  idempotent,         // d(d(x)) = d(x)
  lattice_homomorphism  // meet- and join-homomorphism
};

bool check_property(const Lattice& l, const Operator& d, OpProperty p);

// Named operator families. Parameter arity and side conditions:
//   constant   value a; any lattice
//   tau        a; top and size >= 2: maps everything to the top except
//              the top itself, which goes to a
//   psi        a; any lattice: x -> x \/ a
//   lambda_a   a an atom of a quasi-antichain: a and the top go to the
//              bottom, everything else to a
//   eta        b, u, v on a quasi-antichain: b, u, v non-extremal,
//              u != b, v != u; top -> b, u -> v, rest -> top
//   beta       b, u on a quasi-antichain, u != b non-extremal: the eta
//              instance with v = b
//   gamma      b, u, v mutually distinct non-extremal elements of a
//              quasi-antichain of size >= 5: top -> b, u <-> v swapped,
//              rest -> top
//   theta      u, v distinct non-extremal: top -> bottom, u -> v, rest -> top
//   alpha      u, v distinct non-extremal: top -> bottom, u <-> v swapped,
//              rest -> top
//   phi_a, phi_b            the two involutive maps on the 4-element
//                           quasi-antichain that swap one atom with an
//                           extreme
//   theta_m2_counterexample the near-miss of phi_a on the 4-element
//                           quasi-antichain (not a difference operator)
enum class FamilyKind {
  constant,
  tau,
  psi,
  lambda_a,
  eta,
  beta,
  gamma,
  theta,
  alpha,
  phi_a,
  phi_b,
  theta_m2_counterexample
};

struct OperatorFamily {
  FamilyKind kind;
  std::vector<Elem> params;
};

// Materializes a family instance, transcribing its case definition.
// Throws InvalidInput naming the violated side condition.
Operator make_named(const Lattice& l, const OperatorFamily& fam);

// d^u: agrees with d except that the top is sent to u.
Operator modify_at_top(const Lattice& l, const Operator& d, Elem u);

// On a chain, keeps d below d(top) and saturates to the top above it:
//   D(x) = d(x) if x <= d(top), else top.
// Requires d to be a difference operator; the result is one as well.
// Throws UnsupportedShape off chains, where the construction fails.
Operator chain_saturate(const Lattice& l, const Operator& d);

// On a chain, floors d at d(top) below it and keeps d above:
//   result(x) = d(top) if x <= d(top), else d(x).
// Same preconditions and guarantees as chain_saturate.
Operator chain_floor(const Lattice& l, const Operator& d);

}  // namespace latdiff

#endif  // LATDIFF_OPERATORS_HPP_
