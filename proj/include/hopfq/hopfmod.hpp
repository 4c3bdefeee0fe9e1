#ifndef HOPFQ_HOPFMOD_HPP
#define HOPFQ_HOPFMOD_HPP

#include "hopfq/structures.hpp"

namespace hopfq {

/// Which compatibility regime a module lives in: over a coassociative base
/// (quasigroup flavor) the action laws are compensated by the antipode;
/// over an associative base (coquasigroup flavor) the coaction laws are.
enum class Flavor { Quasigroup, Coquasigroup };

/// A vector space with an H-action [m,n]->[m] and H-coaction [m]->[m,n],
/// validated exhaustively at construction against its flavor's laws.
class HopfModule {
 public:
  /// Throws ConstructionError naming the failed law and witness.
  static HopfModule build(HopfLike base, Flavor flavor, LinMap action,
                          LinMap coaction);
  /// Perturbation-testing entry point: accepts raw tensors unvalidated.
  static HopfModule unvalidated(HopfLike base, Flavor flavor, LinMap action,
                                LinMap coaction);

  const HopfLike& base() const { return base_; }
  Flavor flavor() const { return flavor_; }
  std::size_t dim() const { return dim_; }
  const LinMap& action() const { return action_; }
  const LinMap& coaction() const { return coaction_; }

 private:
  HopfModule(HopfLike base, Flavor flavor, LinMap action, LinMap coaction);
  HopfLike base_;
  Flavor flavor_;
  std::size_t dim_;
  LinMap action_, coaction_;
};

/// The flavor's module laws, runnable standalone on raw maps.
AxiomReport hopf_module_report(const HopfLike& base, Flavor flavor,
                               const LinMap& action, const LinMap& coaction);

/// H as a module over itself: multiplication as action, coproduct as coaction.
HopfModule regular_module(const HopfLike& base, Flavor flavor);
/// F(V) = V (x) H with action V (x) mu and coaction V (x) delta.
HopfModule free_module(const HopfLike& base, Flavor flavor, std::size_t dim_v);
/// M (x) H: for quasigroup flavor the coaction is M (x) delta and the action
/// is diagonal ((m (x) h) g = m g1 (x) h g2); for coquasigroup flavor the
/// action is M (x) mu and the coaction diagonal. Validation failure is an
/// internal inconsistency, not an input property.
HopfModule tensor_module(const HopfModule& m);

/// The induced action (m0 . S m1) . (m2 h) as a matrix, without revalidation.
LinMap induced_action_map(const HopfModule& m);
/// The dual composite ((m00 . S m01) . (m1)1) (x) (m1)2, without revalidation.
LinMap induced_coaction_map(const HopfModule& m);

/// Quasigroup flavor: same coaction, induced action; the result revalidates.
HopfModule induced_action(const HopfModule& m);
/// Coquasigroup flavor: same action, induced coaction.
HopfModule induced_coaction(const HopfModule& m);

/// f (x) H after coaction of M equals coaction of N after f.
AxiomReport check_colinear(const LinMap& f, const HopfModule& m,
                           const HopfModule& n);
/// Colinearity first, then H-linearity with respect to the induced actions.
AxiomReport check_quasilinear(const LinMap& f, const HopfModule& m,
                              const HopfModule& n);
/// f after action of M equals action of N after f (x) H.
AxiomReport check_linear(const LinMap& f, const HopfModule& m,
                         const HopfModule& n);
/// Linearity first, then H-colinearity with respect to induced coactions.
AxiomReport check_quasicolinear(const LinMap& f, const HopfModule& m,
                                const HopfModule& n);

/// A morphism of Hopf modules; construction validates the flavor's two
/// conditions (colinear + quasilinear, or linear + quasicolinear).
class HopfModuleMap {
 public:
  static HopfModuleMap build(HopfModule source, HopfModule target, LinMap matrix);
  const HopfModule& source() const { return source_; }
  const HopfModule& target() const { return target_; }
  const LinMap& matrix() const { return matrix_; }

 private:
  HopfModuleMap(HopfModule s, HopfModule t, LinMap f);
  HopfModule source_, target_;
  LinMap matrix_;
};

/// Elements with trivial coaction: kernel of (coaction - (- (x) 1)).
Subspace coinvariants(const HopfModule& m);
/// Coequalizer of the action against M (x) eps: quotient by the image of
/// their difference.
QuotientMaps invariants(const HopfModule& m);

struct FundamentalQuasi {
  Subspace coinv;
  LinMap sigma;      // coinv coords (x) H -> M,  b (x) h |-> b . h
  LinMap sigma_inv;  // m |-> (m0 . S m1) (x) m2 in coinv coordinates
};

/// The mutually inverse pair realizing M ~ M^coH (x) H. Verifies that
/// sigma_inv lands in the coinvariants, that the two maps compose to
/// identities, and that sigma is a morphism of Hopf modules; any failure is
/// an internal inconsistency.
FundamentalQuasi fundamental_iso_quasi(const HopfModule& m);

struct FundamentalCoquasi {
  QuotientMaps quot;
  LinMap eta;      // m |-> pi(m0) (x) m1
  LinMap eta_inv;  // pi(m) (x) h |-> m0 . ((S m1) h)
  LinMap lift;     // on representatives: m (x) h |-> m0 . ((S m1) h)
};

/// The dual pair realizing M ~ M^H (x) H. eta_inv is checked to vanish on
/// the quotient relations before use.
FundamentalCoquasi fundamental_iso_coquasi(const HopfModule& m);

struct UnitIso {  // V ~ (V (x) H)^coH,  v |-> v (x) 1
  Subspace coinv;
  LinMap eta;
  LinMap eta_inv;
};
UnitIso unit_iso_quasi(const HopfLike& base, std::size_t dim_v);

struct CounitIso {  // (V (x) H)^H ~ V,  pi(v (x) h) |-> v eps(h)
  QuotientMaps quot;
  LinMap sigma_v;
  LinMap sigma_v_inv;
};
CounitIso counit_iso_coquasi(const HopfLike& base, std::size_t dim_v);

struct CoinvInvIso {
  LinMap fwd;  // M^coH -> M^H, n |-> pi(n)
  LinMap bwd;  // M^H -> M^coH, pi(m) |-> m0 . S m1
};

/// Over a base passing both axiom suites (an ordinary Hopf algebra), the
/// coinvariants and invariants of a module agree; returns the mutually
/// inverse pair. Throws when the base is not a Hopf algebra.
CoinvInvIso coinv_inv_iso(const HopfModule& m);

/// The retraction w: m |-> m0 . S m1 and its interaction with the
/// (co)action: quasigroup flavor checks coaction(w m) = w m (x) 1 and
/// coaction((w m) . h) = (w m) . h1 (x) h2; coquasigroup flavor checks
/// w(m . h) = w(m) eps(h).
AxiomReport lemma_retraction_suite(const HopfModule& m);

/// Triangle law sigma_F(V) o F(eta_V) = id on V (x) H.
AxiomReport triangle_free(const HopfLike& base, std::size_t dim_v);
/// Triangle law G(sigma_M) o eta_G(M) = id on M^coH. The second form reuses
/// an already computed decomposition of m.
AxiomReport triangle_module(const HopfModule& m);
AxiomReport triangle_module(const HopfModule& m, const FundamentalQuasi& fq);

/// Naturality squares of sigma and sigma^-1 at a concrete morphism.
AxiomReport naturality_quasi(const HopfModuleMap& f);
/// Naturality squares of the invariants functor and eta at a morphism.
AxiomReport naturality_coquasi(const HopfModuleMap& f);

}  // namespace hopfq

#endif
