#pragma once

// The cubic family f(x, y) = x^3 + p(y) x + q(y).
//
// The coefficient of x enters with a plus sign so that the discriminant
// -4p^3 - 27q^2 and the Cardano radical expression hold verbatim. A family
// written x^3 - p(y) x + q(y) is obtained by negating p.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubicdio/intarith.hpp"
#include "cubicdio/polyring.hpp"

namespace cubicdio {

/// D = -4p^3 - 27q^2.
Poly discriminant_poly(const Poly& p, const Poly& q);

class CubicFamily {
 public:
  CubicFamily(Poly p, Poly q);

  const Poly& p() const noexcept { return p_; }
  const Poly& q() const noexcept { return q_; }
  const Poly& disc() const noexcept { return disc_; }

 private:
  Poly p_;
  Poly q_;
  Poly disc_;
};

struct Mod3Class {
  enum class Kind { IdenticallyZero, NowhereZero, SometimesZero };
  Kind kind;
  /// Residues r in {0, 1, 2} with p(r) = 0 mod 3; filled for SometimesZero.
  std::vector<unsigned> vanishing_residues;

  friend bool operator==(const Mod3Class&, const Mod3Class&) = default;
};

const char* to_string(Mod3Class::Kind kind) noexcept;

Mod3Class mod3_classify(const Poly& p);

/// The integer cubic x^3 + p0 x + q0 obtained at y = y0.
struct SpecializedCubic {
  Integer y0;
  Integer p0;
  Integer q0;
  Integer d0;

  /// Builds a specialization directly from integer coefficients (y0 = 0).
  static SpecializedCubic from_coefficients(const Integer& p0, const Integer& q0);
  Integer value_at(const Integer& x) const { return x * x * x + p0 * x + q0; }
};

SpecializedCubic specialize(const CubicFamily& fam, const Integer& y0);

/// w0 >= 0 with w0^2 = -3 d0, when it exists.
std::optional<Integer> w_filter(const SpecializedCubic& spec);

/// All integer roots, ascending. Rational roots of a monic cubic are integers
/// dividing q0.
std::vector<Integer> integer_roots(const SpecializedCubic& spec, const DivisorBudget& budget = {});

enum class RootClass { RepeatedRoots, Reducible, IrreducibleMetacyclic, IrreducibleCyclicQ };

const char* to_string(RootClass c) noexcept;

struct RootClassification {
  RootClass kind;
  std::vector<Integer> roots;  // Reducible / RepeatedRoots
  /// C with d0 = -3 C^2; set for IrreducibleMetacyclic when -3 d0 is a square.
  /// The splitting field is then cyclic over Q(i sqrt 3).
  std::optional<Integer> c;
  bool cyclic_over_q_i_sqrt3() const { return kind == RootClass::IrreducibleMetacyclic && c.has_value(); }
};

/// Galois-type classification of a specialization from its integer roots.
/// Throws InconsistentInput when `roots` is not the root set of `spec`.
RootClassification classify_specialization(const SpecializedCubic& spec, const std::vector<Integer>& roots);

struct CardanoResult {
  long double value;
  long double residual;  // |x^3 + p0 x + q0|
  bool polished;         // Newton refinement was needed to meet the tolerance
};

/// Real root by Cardano's radicals
///   ( cbrt((-27 q0 + 3 sqrt(-3 d0)) / 2) + cbrt((-27 q0 - 3 sqrt(-3 d0)) / 2) ) / 3.
/// Requires d0 <= 0; d0 > 0 throws CasusIrreducibilis. The result satisfies
/// residual <= tol * (1 + |x|)^3.
CardanoResult cardano_real_root(const SpecializedCubic& spec, double tol = 1e-12);

/// Factorization x^3 + p0 x + q0 = (x - x0) (x^2 + x0 x + (p0 + x0^2)) and the
/// field discriminant of the quadratic cofactor.
struct CofactorReport {
  Integer x0;
  std::vector<Integer> cofactor;  // ascending: {p0 + x0^2, x0, 1}
  Integer quad_disc;
  bool totally_reducible = false;
  std::optional<Integer> field_disc;
  std::optional<Integer> r;
  std::optional<bool> comment_holds;
};

CofactorReport cofactor_field_disc(const SpecializedCubic& spec, const Integer& x0,
                                   const DivisorBudget& budget = {});

/// True iff field_disc = -3 r with r > 0 squarefree and not divisible by 3.
bool comment_form_check(const Integer& field_disc);

/// Field discriminant of Q(sqrt n) for a non-square n.
Integer quadratic_field_discriminant(const Integer& n, const DivisorBudget& budget = {});

}  // namespace cubicdio
