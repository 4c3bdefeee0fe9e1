#ifndef HOPFQ_REPORT_HPP
#define HOPFQ_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfq/linmap.hpp"

namespace hopfq {

/// Concrete counterexample to an identity: the first basis tuple (in
/// lexicographic order) where the two sides disagree, with both results.
struct Witness {
  std::vector<std::size_t> basis_index;
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;

  std::string to_string() const;
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;  // present exactly when failed
};

/// Per-axiom verdicts from an exhaustive checker run.
class AxiomReport {
 public:
  void add(AxiomCheck check) { checks_.push_back(std::move(check)); }
  void append(const AxiomReport& other);

  const std::vector<AxiomCheck>& checks() const { return checks_; }
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(const std::string& name) const;

  std::string to_string() const;

 private:
  std::vector<AxiomCheck> checks_;
};

/// Verdict on `lhs == rhs` as matrices; equality of the two composites is
/// equality of the maps on every basis tuple, so one comparison is an
/// exhaustive check.
AxiomCheck compare_maps(std::string name, const LinMap& lhs, const LinMap& rhs);

/// Construction rejected: the report names the failed axiom and witness.
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what_prefix, AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

}  // namespace hopfq

#endif
