#ifndef HOPFQ_STRUCTURES_HPP
#define HOPFQ_STRUCTURES_HPP

#include <optional>
#include <vector>

#include "hopfq/report.hpp"

namespace hopfq {

/// Structure constants of a candidate, prior to validation. Layouts:
///   mu[(i*n + j)*n + k]    coefficient of e_k in e_i e_j
///   delta[(k*n + i)*n + j] coefficient of e_i (x) e_j in coproduct(e_k)
///   antipode[i*n + j]      coefficient of e_i in S(e_j)
struct RawStructure {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<Scalar> mu;
  std::vector<Scalar> unit;
  std::vector<Scalar> delta;
  std::vector<Scalar> counit;
  std::optional<std::vector<Scalar>> antipode;

  static RawStructure zeros(const Field& f, std::size_t dim, bool with_antipode);

  Scalar& mu_at(std::size_t i, std::size_t j, std::size_t k);
  Scalar& delta_at(std::size_t k, std::size_t i, std::size_t j);
  Scalar& antipode_at(std::size_t i, std::size_t j);
};

/// A unital algebra with a compatible counital coalgebra structure, in a
/// fixed basis, with an optional antipode. Construction validates, over all
/// basis tuples: unitality, counitality, and that the coproduct and counit
/// are algebra maps. Instances are immutable; no invalid instance exists.
class HopfLike {
 public:
  /// Throws ConstructionError naming the first failed axiom and witness.
  static HopfLike build(const RawStructure& raw);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }

  const LinMap& mu() const { return mu_; }            // [n,n] -> [n]
  const LinMap& delta() const { return delta_; }      // [n] -> [n,n]
  const LinMap& unit() const { return unit_; }        // [] -> [n]
  const LinMap& counit() const { return counit_; }    // [n] -> []
  const std::optional<LinMap>& antipode() const { return antipode_; }
  const LinMap& antipode_or_throw() const;

  LinMap id() const { return LinMap::identity(field_, {dim_}); }

  RawStructure raw() const;
  HopfLike with_antipode(LinMap s) const;
  HopfLike without_antipode() const;

 private:
  HopfLike(Field f, std::size_t n, LinMap mu, LinMap unit, LinMap delta,
           LinMap counit, std::optional<LinMap> antipode);

  Field field_;
  std::size_t dim_;
  LinMap mu_, unit_, delta_, counit_;
  std::optional<LinMap> antipode_;
};

/// The construction-time invariants, runnable standalone on raw data.
AxiomReport preamble_report(const RawStructure& raw);

AxiomReport check_associativity(const HopfLike& h);
AxiomReport check_coassociativity(const HopfLike& h);

/// The four division laws an antipode must satisfy on a coassociative
/// structure -- Sg1 (g2 h), g1 (Sg2 h), (g h1) Sh2, (g Sh1) h2 -- plus the
/// classical antipode property Sh1 h2 = eps(h) 1 = h1 Sh2.
AxiomReport check_quasigroup_axioms(const HopfLike& h);

/// The dual codivision laws an antipode must satisfy on an associative
/// structure, plus the antipode property.
AxiomReport check_coquasigroup_axioms(const HopfLike& h);

/// S is antimultiplicative and anticomultiplicative. Derived, not assumed:
/// asserted on examples rather than required at construction.
AxiomReport antipode_antihom_report(const HopfLike& h);

/// Opposite product and opposite coproduct, same unit/counit/antipode.
HopfLike mirror(const HopfLike& h);

}  // namespace hopfq

#endif
