#include "hopfq/galois.hpp"

namespace hopfq {

namespace {

void require_endo_shape(const LinMap& phi, const HopfLike& h) {
  std::size_t n2 = h.dim() * h.dim();
  if (phi.rows() != n2 || phi.cols() != n2)
    throw ShapeMismatch("map is not an endomorphism of H (x) H");
}

/// Componentwise product on H (x) H: (mu (x) mu) after swapping middle legs.
LinMap pair_product(const HopfLike& h) {
  LinMap id = h.id();
  LinMap tau = LinMap::flip(h.field(), h.dim(), h.dim());
  return compose(tensor(h.mu(), h.mu()), tensor(tensor(id, tau), id));
}

DecisionStep step_from_check(const AxiomCheck& check, std::string name) {
  DecisionStep s;
  s.name = std::move(name);
  s.passed = check.passed;
  s.witness = check.witness;
  return s;
}

}  // namespace

LinMap build_beta(const HopfLike& h) {
  LinMap id = h.id();
  return compose(tensor(h.mu(), id), tensor(id, h.delta()));
}

LinMap build_gamma(const HopfLike& h) {
  LinMap id = h.id();
  return compose(tensor(id, h.mu()), tensor(h.delta(), id));
}

GaloisPair galois_pair(const HopfLike& h) {
  GaloisPair g{build_beta(h), build_gamma(h), {}, {}, 0, 0};
  InvertResult b = invert(g.beta);
  InvertResult c = invert(g.gamma);
  g.beta_rank = b.rank;
  g.gamma_rank = c.rank;
  g.beta_inv = std::move(b.inverse);
  g.gamma_inv = std::move(c.inverse);
  return g;
}

AxiomReport almost_left_linear(const LinMap& phi, const HopfLike& h) {
  require_endo_shape(phi, h);
  LinMap id = h.id();
  LinMap left = tensor(id, h.unit());                   // g |-> g (x) 1
  LinMap right = compose(phi, tensor(h.unit(), id));    // h |-> phi(1 (x) h)
  AxiomReport report;
  report.add(compare_maps("almost-left-linear", phi,
                          compose(pair_product(h), tensor(left, right))));
  return report;
}

AxiomReport almost_right_linear(const LinMap& phi, const HopfLike& h) {
  require_endo_shape(phi, h);
  LinMap id = h.id();
  LinMap left = compose(phi, tensor(id, h.unit()));     // g |-> phi(g (x) 1)
  LinMap right = tensor(h.unit(), id);                  // h |-> 1 (x) h
  AxiomReport report;
  report.add(compare_maps("almost-right-linear", phi,
                          compose(pair_product(h), tensor(left, right))));
  return report;
}

AxiomReport almost_left_colinear(const LinMap& phi, const HopfLike& h) {
  require_endo_shape(phi, h);
  LinMap id = h.id();
  LinMap trim = tensor(tensor(id, h.counit()), id);     // H (x) eps (x) H
  AxiomReport report;
  report.add(compare_maps(
      "almost-left-colinear", phi,
      compose(trim, compose(tensor(id, phi), tensor(h.delta(), id)))));
  return report;
}

AxiomReport almost_right_colinear(const LinMap& phi, const HopfLike& h) {
  require_endo_shape(phi, h);
  LinMap id = h.id();
  LinMap trim = tensor(tensor(id, h.counit()), id);
  AxiomReport report;
  report.add(compare_maps(
      "almost-right-colinear", phi,
      compose(trim, compose(tensor(phi, id), tensor(id, h.delta())))));
  return report;
}

AxiomReport galois_canonical_suite(const HopfLike& h) {
  LinMap beta = build_beta(h);
  LinMap gamma = build_gamma(h);
  AxiomReport report;
  auto renamed = [](AxiomReport r, const std::string& name) {
    AxiomCheck c = r.checks().front();
    c.name = name;
    AxiomReport out;
    out.add(std::move(c));
    return out;
  };
  report.append(renamed(almost_left_linear(beta, h), "beta-almost-left-linear"));
  report.append(renamed(almost_right_colinear(beta, h), "beta-almost-right-colinear"));
  report.append(renamed(almost_right_linear(gamma, h), "gamma-almost-right-linear"));
  report.append(renamed(almost_left_colinear(gamma, h), "gamma-almost-left-colinear"));
  return report;
}

std::pair<LinMap, LinMap> reconstruct_antipodes(const HopfLike& h,
                                                const GaloisPair& g) {
  if (!g.beta_inv || !g.gamma_inv)
    throw Error("antipode reconstruction needs both Galois inverses");
  LinMap id = h.id();
  LinMap s = compose(tensor(id, h.counit()),
                     compose(*g.beta_inv, tensor(h.unit(), id)));
  LinMap s_bar = compose(tensor(h.counit(), id),
                         compose(*g.gamma_inv, tensor(id, h.unit())));
  return {std::move(s), std::move(s_bar)};
}

const char* structure_class_name(StructureClass c) {
  switch (c) {
    case StructureClass::HopfQuasigroup: return "HopfQuasigroup";
    case StructureClass::HopfCoquasigroup: return "HopfCoquasigroup";
    case StructureClass::Neither: return "Neither";
  }
  return "?";
}

DecisionVerdict decide(const HopfLike& input) {
  HopfLike h = input.without_antipode();
  DecisionVerdict verdict;

  AxiomReport coassoc = check_coassociativity(h);
  verdict.trail.push_back(
      step_from_check(coassoc.checks().front(), "coassociativity"));
  AxiomReport assoc = check_associativity(h);
  verdict.trail.push_back(
      step_from_check(assoc.checks().front(), "associativity"));

  bool quasi_open = coassoc.all_passed();
  bool coquasi_open = assoc.all_passed();
  if (!quasi_open && !coquasi_open) {
    verdict.reason = "coassociativity";
    return verdict;
  }

  GaloisPair galois = galois_pair(h);
  {
    DecisionStep b{"beta-bijective", galois.beta_inv.has_value(), {}, {}};
    if (!b.passed)
      b.detail = "rank " + std::to_string(galois.beta_rank) + " of " +
                 std::to_string(galois.beta.rows());
    verdict.trail.push_back(b);
    DecisionStep c{"gamma-bijective", galois.gamma_inv.has_value(), {}, {}};
    if (!c.passed)
      c.detail = "rank " + std::to_string(galois.gamma_rank) + " of " +
                 std::to_string(galois.gamma.rows());
    verdict.trail.push_back(c);
  }
  bool bijective = galois.beta_inv && galois.gamma_inv;

  std::string quasi_reason, coquasi_reason;
  std::optional<LinMap> quasi_s, coquasi_s;

  auto run_branch = [&](bool quasigroup_side) -> std::string {
    if (!bijective)
      return galois.beta_inv ? "gamma-bijective" : "beta-bijective";
    const char* beta_name = quasigroup_side ? "beta-inverse-almost-left-linear"
                                            : "beta-inverse-almost-right-colinear";
    const char* gamma_name = quasigroup_side
                                 ? "gamma-inverse-almost-right-linear"
                                 : "gamma-inverse-almost-left-colinear";
    // run both sides even after a failure, so one-sided passes are on record
    AxiomReport beta_side = quasigroup_side
                                ? almost_left_linear(*galois.beta_inv, h)
                                : almost_right_colinear(*galois.beta_inv, h);
    verdict.trail.push_back(step_from_check(beta_side.checks().front(), beta_name));
    AxiomReport gamma_side = quasigroup_side
                                 ? almost_right_linear(*galois.gamma_inv, h)
                                 : almost_left_colinear(*galois.gamma_inv, h);
    verdict.trail.push_back(step_from_check(gamma_side.checks().front(), gamma_name));
    if (!beta_side.all_passed()) return beta_name;
    if (!gamma_side.all_passed()) return gamma_name;

    auto [s, s_bar] = reconstruct_antipodes(h, galois);
    const char* cross = quasigroup_side ? "antipode-cross-check"
                                        : "antipode-cross-check-dual";
    AxiomCheck cross_check = compare_maps(cross, s, s_bar);
    verdict.trail.push_back(step_from_check(cross_check, cross));
    if (!cross_check.passed) {
      verdict.internal_inconsistency =
          "S and S-bar disagree after both almost-linearity checks passed;"
          " S =\n" + s.to_text() + "S-bar =\n" + s_bar.to_text();
      return cross;
    }

    HopfLike candidate = h.with_antipode(s);
    AxiomReport axioms = quasigroup_side ? check_quasigroup_axioms(candidate)
                                         : check_coquasigroup_axioms(candidate);
    const char* verify_name = quasigroup_side
                                  ? "reconstructed-antipode-division-laws"
                                  : "reconstructed-antipode-codivision-laws";
    DecisionStep vs{verify_name, axioms.all_passed(), {}, {}};
    if (const AxiomCheck* f = axioms.first_failure()) {
      vs.witness = f->witness;
      vs.detail = f->name;
    }
    verdict.trail.push_back(vs);
    if (!axioms.all_passed()) {
      verdict.internal_inconsistency =
          "reconstructed antipode fails the laws the reconstruction "
          "theorem guarantees (" + std::string(verify_name) + ")";
      return verify_name;
    }
    (quasigroup_side ? quasi_s : coquasi_s) = std::move(s);
    return {};
  };

  if (quasi_open) quasi_reason = run_branch(true);
  if (coquasi_open) coquasi_reason = run_branch(false);

  bool quasi_ok = quasi_open && quasi_reason.empty();
  bool coquasi_ok = coquasi_open && coquasi_reason.empty();

  if (quasi_ok) {
    verdict.classification = StructureClass::HopfQuasigroup;
    verdict.also_hopf_algebra = coquasi_ok;
    verdict.antipode = std::move(quasi_s);
  } else if (coquasi_ok) {
    verdict.classification = StructureClass::HopfCoquasigroup;
    verdict.antipode = std::move(coquasi_s);
  } else {
    verdict.classification = StructureClass::Neither;
    verdict.reason = quasi_open ? quasi_reason : coquasi_reason;
  }
  return verdict;
}

}  // namespace hopfq
