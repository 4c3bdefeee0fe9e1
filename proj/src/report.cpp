#include "hopfq/report.hpp"

#include <sstream>

namespace hopfq {

namespace {

std::string vector_str(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + v[i].to_literal();
  return out + "]";
}

}  // namespace

std::string Witness::to_string() const {
  std::string out = "basis (";
  for (std::size_t i = 0; i < basis_index.size(); ++i)
    out += (i ? "," : "") + std::to_string(basis_index[i]);
  out += "): lhs = " + vector_str(lhs) + ", rhs = " + vector_str(rhs);
  return out;
}

void AxiomReport::append(const AxiomReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << "axiom " << c.name << ": " << (c.passed ? "PASS" : "FAIL");
    if (c.witness) out << " at " << c.witness->to_string();
    out << '\n';
  }
  return out.str();
}

AxiomCheck compare_maps(std::string name, const LinMap& lhs, const LinMap& rhs) {
  AxiomCheck check{std::move(name), false, std::nullopt};
  auto col = LinMap::first_differing_column(lhs, rhs);
  if (!col) {
    check.passed = true;
    return check;
  }
  Witness w;
  w.basis_index = unflatten_index(*col, lhs.domain_shape());
  w.lhs = lhs.column(*col);
  w.rhs = rhs.column(*col);
  check.witness = std::move(w);
  return check;
}

ConstructionError::ConstructionError(const std::string& what_prefix,
                                     AxiomReport report)
    : Error(what_prefix + ": " +
            (report.first_failure()
                 ? report.first_failure()->name +
                       (report.first_failure()->witness
                            ? " at " + report.first_failure()->witness->to_string()
                            : std::string())
                 : std::string("unspecified"))),
      report_(std::move(report)) {}

}  // namespace hopfq
