#ifndef HOPFQ_GALOIS_HPP
#define HOPFQ_GALOIS_HPP

#include "hopfq/structures.hpp"

namespace hopfq {

/// The two canonical maps on H (x) H and, when bijective, their exact
/// inverses: beta: g (x) h |-> g h1 (x) h2, gamma: g (x) h |-> g1 (x) g2 h.
struct GaloisPair {
  LinMap beta;
  LinMap gamma;
  std::optional<LinMap> beta_inv;
  std::optional<LinMap> gamma_inv;
  std::size_t beta_rank = 0;
  std::size_t gamma_rank = 0;
};

LinMap build_beta(const HopfLike& h);   // (mu (x) H) o (H (x) delta)
LinMap build_gamma(const HopfLike& h);  // (H (x) mu) o (delta (x) H)

/// Builds both maps and attempts exact inversion of each.
GaloisPair galois_pair(const HopfLike& h);

/// phi(g (x) h) = (g (x) 1) phi(1 (x) h), exhaustively over basis pairs.
AxiomReport almost_left_linear(const LinMap& phi, const HopfLike& h);
/// phi(g (x) h) = phi(g (x) 1) (1 (x) h).
AxiomReport almost_right_linear(const LinMap& phi, const HopfLike& h);
/// phi = (H (x) eps (x) H) o (H (x) phi) o (delta (x) H).
AxiomReport almost_left_colinear(const LinMap& phi, const HopfLike& h);
/// phi = (H (x) eps (x) H) o (phi (x) H) o (H (x) delta).
AxiomReport almost_right_colinear(const LinMap& phi, const HopfLike& h);

/// The compatibility every structure's canonical maps satisfy: beta is
/// almost left linear and almost right colinear, gamma almost right linear
/// and almost left colinear.
AxiomReport galois_canonical_suite(const HopfLike& h);

/// S from the beta inverse, S-bar from the gamma inverse:
/// S = (H (x) eps) o beta^-1 o (1 (x) H), S-bar = (eps (x) H) o gamma^-1 o (H (x) 1).
std::pair<LinMap, LinMap> reconstruct_antipodes(const HopfLike& h,
                                                const GaloisPair& g);

enum class StructureClass { HopfQuasigroup, HopfCoquasigroup, Neither };

const char* structure_class_name(StructureClass c);

struct DecisionStep {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  std::string detail;  // e.g. the rank of a singular Galois map
};

/// Outcome of the decision procedure. `trail` lists every test run, in
/// order, including per-side results that did not decide the outcome.
struct DecisionVerdict {
  StructureClass classification = StructureClass::Neither;
  /// Set when the structure is simultaneously a Hopf quasigroup and a Hopf
  /// coquasigroup, i.e. an ordinary Hopf algebra.
  bool also_hopf_algebra = false;
  std::vector<DecisionStep> trail;
  std::optional<LinMap> antipode;  // reconstructed
  /// A derived identity the theorems guarantee failed to hold: a bug
  /// indicator, never a property of the input.
  std::optional<std::string> internal_inconsistency;
  /// Name of the decisive failed test; empty on success.
  std::string reason;
};

/// Full decision procedure; any stored antipode on h is ignored.
/// Quasigroup branch: coassociativity, bijectivity of both canonical maps,
/// almost-left-linearity of beta^-1 and almost-right-linearity of gamma^-1,
/// reconstruction, S = S-bar cross-check, re-verification of the division
/// laws. Coquasigroup branch: the dual tests. Cheap tests run first.
DecisionVerdict decide(const HopfLike& h);

}  // namespace hopfq

#endif
