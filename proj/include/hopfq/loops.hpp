#ifndef HOPFQ_LOOPS_HPP
#define HOPFQ_LOOPS_HPP

#include <array>
#include <optional>
#include <vector>

#include "hopfq/structures.hpp"

namespace hopfq {

/// A finite loop: a Latin square with a two-sided identity. The inverse
/// table is present exactly when the loop has the inverse property
/// (x^-1 (x y) = y = (y x) x^-1 for all pairs); it is computed at
/// construction, never asserted.
struct LoopTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> table;
  std::optional<std::vector<std::size_t>> inverses;

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
  bool is_ip() const { return inverses.has_value(); }
};

/// Validates Latin property and two-sided identity, computes the IP flag.
LoopTable make_loop_table(std::vector<std::vector<std::size_t>> rows);

enum class LoopClass { Group, MoufangNonassoc, IpNonmoufang, NonIp };

/// Exhaustive check of associativity, the Moufang identity
/// (x y)(z x) = (x (y z)) x, and the inverse property.
LoopClass classify_loop(const LoopTable& t);

const char* loop_class_name(LoopClass c);

LoopTable cyclic_group_table(std::size_t n);
/// Symmetric group on k symbols; permutations in lexicographic order, so the
/// identity permutation sits at index 0.
LoopTable symmetric_group_table(std::size_t k);
/// Chein double M(G,2) of a group: elements G and Gu with
/// g(hu) = (hg)u, (gu)h = (gh^-1)u, (gu)(hu) = h^-1 g.
LoopTable chein_double(const LoopTable& group);
/// The 16-element loop of signed octonion basis units, built by two
/// Cayley-Dickson doubling steps from the quaternion units.
LoopTable octonion_loop();
/// First (lexicographic, row-major) normalized Latin square of the given
/// order that fails the inverse property. Exhaustive, deterministic.
LoopTable first_non_ip_loop(std::size_t order);

/// Loop algebra: basis products from the table, group-like coproduct,
/// counit constantly one, antipode = linearized inversion when IP.
HopfLike loop_algebra(const LoopTable& t, const Field& f);

/// Transpose structure: product and coproduct tensors swap roles, unit and
/// counit trade places, the antipode transposes.
HopfLike dualize(const HopfLike& h);

enum class PerturbTarget { Mu, Delta, Antipode };

/// Unvalidated copy of h's structure constants with one entry shifted by
/// `value`. Negative-test generator; feed to HopfLike::build or the
/// unvalidated module entry points. For Antipode the index is (i, j, 0).
RawStructure perturb(const HopfLike& h, PerturbTarget target,
                     std::array<std::size_t, 3> index, const Scalar& value);

namespace fixtures {
HopfLike kZ2(const Field& f);
HopfLike kS3(const Field& f);
HopfLike kM12(const Field& f);   // loop algebra of M(S3,2), order 12
HopfLike kO16(const Field& f);   // loop algebra of the octonion unit loop
HopfLike kL5(const Field& f);    // loop algebra of the searched non-IP loop
}  // namespace fixtures

}  // namespace hopfq

#endif
