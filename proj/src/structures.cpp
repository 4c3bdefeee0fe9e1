#include "hopfq/structures.hpp"

namespace hopfq {

namespace {

void require_fields(const std::vector<Scalar>& v, const Field& f,
                    const char* what) {
  for (const Scalar& s : v)
    if (!(s.field() == f))
      throw FieldMismatch(std::string(what) + " holds entries of a different field");
}

LinMap mu_map(const RawStructure& raw) {
  std::size_t n = raw.dim;
  LinMap m(raw.field, Shape{n, n}, Shape{n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = raw.mu[(i * n + j) * n + k];
        if (!v.is_zero()) m.set(k, i * n + j, v);
      }
  return m;
}

LinMap delta_map(const RawStructure& raw) {
  std::size_t n = raw.dim;
  LinMap m(raw.field, Shape{n}, Shape{n, n});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& v = raw.delta[(k * n + i) * n + j];
        if (!v.is_zero()) m.set(i * n + j, k, v);
      }
  return m;
}

LinMap unit_map(const RawStructure& raw) {
  LinMap m(raw.field, Shape{}, Shape{raw.dim});
  for (std::size_t i = 0; i < raw.dim; ++i)
    if (!raw.unit[i].is_zero()) m.set(i, 0, raw.unit[i]);
  return m;
}

LinMap counit_map(const RawStructure& raw) {
  LinMap m(raw.field, Shape{raw.dim}, Shape{});
  for (std::size_t i = 0; i < raw.dim; ++i)
    if (!raw.counit[i].is_zero()) m.set(0, i, raw.counit[i]);
  return m;
}

LinMap antipode_map(const RawStructure& raw) {
  std::size_t n = raw.dim;
  LinMap m(raw.field, Shape{n}, Shape{n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& v = (*raw.antipode)[i * n + j];
      if (!v.is_zero()) m.set(i, j, v);
    }
  return m;
}

}  // namespace

RawStructure RawStructure::zeros(const Field& f, std::size_t dim,
                                 bool with_antipode) {
  RawStructure raw;
  raw.field = f;
  raw.dim = dim;
  raw.mu.assign(dim * dim * dim, Scalar::zero(f));
  raw.unit.assign(dim, Scalar::zero(f));
  raw.delta.assign(dim * dim * dim, Scalar::zero(f));
  raw.counit.assign(dim, Scalar::zero(f));
  if (with_antipode) raw.antipode = std::vector<Scalar>(dim * dim, Scalar::zero(f));
  return raw;
}

Scalar& RawStructure::mu_at(std::size_t i, std::size_t j, std::size_t k) {
  return mu[(i * dim + j) * dim + k];
}

Scalar& RawStructure::delta_at(std::size_t k, std::size_t i, std::size_t j) {
  return delta[(k * dim + i) * dim + j];
}

Scalar& RawStructure::antipode_at(std::size_t i, std::size_t j) {
  return (*antipode)[i * dim + j];
}

HopfLike::HopfLike(Field f, std::size_t n, LinMap mu, LinMap unit, LinMap delta,
                   LinMap counit, std::optional<LinMap> antipode)
    : field_(f),
      dim_(n),
      mu_(std::move(mu)),
      unit_(std::move(unit)),
      delta_(std::move(delta)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {}

const LinMap& HopfLike::antipode_or_throw() const {
  if (!antipode_) throw Error("structure carries no antipode");
  return *antipode_;
}

AxiomReport preamble_report(const RawStructure& raw) {
  std::size_t n = raw.dim;
  LinMap mu = mu_map(raw), delta = delta_map(raw);
  LinMap unit = unit_map(raw), counit = counit_map(raw);
  LinMap id = LinMap::identity(raw.field, {n});
  LinMap tau = LinMap::flip(raw.field, n, n);

  AxiomReport report;
  report.add(compare_maps("unitality-left", compose(mu, tensor(unit, id)), id));
  report.add(compare_maps("unitality-right", compose(mu, tensor(id, unit)), id));
  report.add(compare_maps("counitality-left", compose(tensor(counit, id), delta), id));
  report.add(compare_maps("counitality-right", compose(tensor(id, counit), delta), id));

  // product on H (x) H is (mu (x) mu) after swapping the middle legs
  LinMap mult2 = compose(tensor(mu, mu), tensor(tensor(id, tau), id));
  report.add(compare_maps("coproduct-multiplicative", compose(delta, mu),
                          compose(mult2, tensor(delta, delta))));
  report.add(compare_maps("coproduct-of-unit", compose(delta, unit),
                          tensor(unit, unit)));
  report.add(compare_maps("counit-multiplicative", compose(counit, mu),
                          tensor(counit, counit)));
  report.add(compare_maps("counit-of-unit", compose(counit, unit),
                          LinMap::identity(raw.field, {})));
  return report;
}

HopfLike HopfLike::build(const RawStructure& raw) {
  std::size_t n = raw.dim;
  if (n == 0) throw Error("dimension must be positive");
  if (raw.mu.size() != n * n * n || raw.delta.size() != n * n * n ||
      raw.unit.size() != n || raw.counit.size() != n ||
      (raw.antipode && raw.antipode->size() != n * n))
    throw ShapeMismatch("structure tensor sizes do not match the dimension");
  require_fields(raw.mu, raw.field, "mu");
  require_fields(raw.delta, raw.field, "delta");
  require_fields(raw.unit, raw.field, "unit");
  require_fields(raw.counit, raw.field, "counit");
  if (raw.antipode) require_fields(*raw.antipode, raw.field, "antipode");

  AxiomReport report = preamble_report(raw);
  if (!report.all_passed())
    throw ConstructionError("structure rejected", std::move(report));

  std::optional<LinMap> s;
  if (raw.antipode) s = antipode_map(raw);
  return HopfLike(raw.field, n, mu_map(raw), unit_map(raw), delta_map(raw),
                  counit_map(raw), std::move(s));
}

RawStructure HopfLike::raw() const {
  RawStructure out = RawStructure::zeros(field_, dim_, antipode_.has_value());
  std::size_t n = dim_;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [col, v] : mu_.row(k)) out.mu[col * n + k] = v;
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (const auto& [k, v] : delta_.row(ij)) out.delta[k * n * n + ij] = v;
  for (std::size_t i = 0; i < n; ++i) {
    out.unit[i] = unit_.at(i, 0);
    out.counit[i] = counit_.at(0, i);
  }
  if (antipode_)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [j, v] : antipode_->row(i)) (*out.antipode)[i * n + j] = v;
  return out;
}

HopfLike HopfLike::with_antipode(LinMap s) const {
  if (s.rows() != dim_ || s.cols() != dim_)
    throw ShapeMismatch("antipode matrix does not match the dimension");
  if (!(s.field() == field_)) throw FieldMismatch("antipode over a different field");
  HopfLike out = *this;
  out.antipode_ = std::move(s);
  return out;
}

HopfLike HopfLike::without_antipode() const {
  HopfLike out = *this;
  out.antipode_.reset();
  return out;
}

AxiomReport check_associativity(const HopfLike& h) {
  LinMap id = h.id();
  AxiomReport report;
  report.add(compare_maps("associativity",
                          compose(h.mu(), tensor(h.mu(), id)),
                          compose(h.mu(), tensor(id, h.mu()))));
  return report;
}

AxiomReport check_coassociativity(const HopfLike& h) {
  LinMap id = h.id();
  AxiomReport report;
  report.add(compare_maps("coassociativity",
                          compose(tensor(h.delta(), id), h.delta()),
                          compose(tensor(id, h.delta()), h.delta())));
  return report;
}

AxiomReport check_quasigroup_axioms(const HopfLike& h) {
  const LinMap& s = h.antipode_or_throw();
  LinMap id = h.id();
  LinMap id2 = LinMap::identity(h.field(), {h.dim(), h.dim()});
  LinMap delta_left = tensor(h.delta(), id);   // [n,n] -> [n,n,n]
  LinMap delta_right = tensor(id, h.delta());
  LinMap eps_h = tensor(h.counit(), id);       // g (x) h |-> eps(g) h
  LinMap h_eps = tensor(id, h.counit());

  AxiomReport report;
  report.add(compare_maps(
      "left-division-outer",
      compose(h.mu(), compose(tensor(id, h.mu()),
                              compose(tensor(s, id2), delta_left))),
      eps_h));
  report.add(compare_maps(
      "left-division-inner",
      compose(h.mu(), compose(tensor(id, h.mu()),
                              compose(tensor(tensor(id, s), id), delta_left))),
      eps_h));
  report.add(compare_maps(
      "right-division-outer",
      compose(h.mu(), compose(tensor(h.mu(), id),
                              compose(tensor(id2, s), delta_right))),
      h_eps));
  report.add(compare_maps(
      "right-division-inner",
      compose(h.mu(), compose(tensor(h.mu(), id),
                              compose(tensor(tensor(id, s), id), delta_right))),
      h_eps));

  LinMap unit_counit = compose(h.unit(), h.counit());
  report.add(compare_maps("antipode-left",
                          compose(h.mu(), compose(tensor(s, id), h.delta())),
                          unit_counit));
  report.add(compare_maps("antipode-right",
                          compose(h.mu(), compose(tensor(id, s), h.delta())),
                          unit_counit));
  return report;
}

AxiomReport check_coquasigroup_axioms(const HopfLike& h) {
  const LinMap& s = h.antipode_or_throw();
  LinMap id = h.id();
  LinMap id2 = LinMap::identity(h.field(), {h.dim(), h.dim()});
  LinMap split_right = compose(tensor(id, h.delta()), h.delta());  // [n] -> [n,n,n]
  LinMap split_left = compose(tensor(h.delta(), id), h.delta());
  LinMap one_h = tensor(h.unit(), id);  // h |-> 1 (x) h
  LinMap h_one = tensor(id, h.unit());

  AxiomReport report;
  report.add(compare_maps(
      "left-codivision-outer",
      compose(tensor(h.mu(), id), compose(tensor(s, id2), split_right)),
      one_h));
  report.add(compare_maps(
      "left-codivision-inner",
      compose(tensor(h.mu(), id), compose(tensor(tensor(id, s), id), split_right)),
      one_h));
  report.add(compare_maps(
      "right-codivision-outer",
      compose(tensor(id, h.mu()), compose(tensor(id2, s), split_left)),
      h_one));
  report.add(compare_maps(
      "right-codivision-inner",
      compose(tensor(id, h.mu()), compose(tensor(tensor(id, s), id), split_left)),
      h_one));

  LinMap unit_counit = compose(h.unit(), h.counit());
  report.add(compare_maps("antipode-left",
                          compose(h.mu(), compose(tensor(s, id), h.delta())),
                          unit_counit));
  report.add(compare_maps("antipode-right",
                          compose(h.mu(), compose(tensor(id, s), h.delta())),
                          unit_counit));
  return report;
}

AxiomReport antipode_antihom_report(const HopfLike& h) {
  const LinMap& s = h.antipode_or_throw();
  LinMap tau = LinMap::flip(h.field(), h.dim(), h.dim());
  AxiomReport report;
  report.add(compare_maps("antipode-antimultiplicative", compose(s, h.mu()),
                          compose(h.mu(), compose(tau, tensor(s, s)))));
  report.add(compare_maps("antipode-anticomultiplicative", compose(h.delta(), s),
                          compose(tau, compose(tensor(s, s), h.delta()))));
  return report;
}

HopfLike mirror(const HopfLike& h) {
  LinMap tau = LinMap::flip(h.field(), h.dim(), h.dim());
  RawStructure raw = h.raw();
  std::size_t n = h.dim();
  LinMap op_mu = compose(h.mu(), tau);
  LinMap op_delta = compose(tau, h.delta());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        raw.mu_at(i, j, k) = op_mu.at(k, i * n + j);
        raw.delta_at(k, i, j) = op_delta.at(i * n + j, k);
      }
  return HopfLike::build(raw);
}

}  // namespace hopfq
