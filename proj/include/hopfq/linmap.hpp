#ifndef HOPFQ_LINMAP_HPP
#define HOPFQ_LINMAP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfq/scalar.hpp"

namespace hopfq {

/// Factor dimensions of a tensor-power space, e.g. {n, n} for H (x) H.
/// An empty shape is the ground field (a single scalar leg).
using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& s);
/// Row-major multi-index <-> flat index, left factor most significant.
std::size_t flatten_index(const std::vector<std::size_t>& multi, const Shape& s);
std::vector<std::size_t> unflatten_index(std::size_t flat, const Shape& s);

class Subspace;

/// A linear map between tensor-power spaces, held as exact structure
/// constants. Entries are stored sparsely per row; semantics are those of a
/// dense matrix (absent entries are zero, equality is entrywise).
class LinMap {
 public:
  using Entry = std::pair<std::size_t, Scalar>;
  using Row = std::vector<Entry>;

  LinMap(Field field, Shape domain, Shape codomain);

  static LinMap identity(const Field& f, Shape shape);
  /// Transposition V_a (x) V_b -> V_b (x) V_a, e_i (x) e_j |-> e_j (x) e_i.
  static LinMap flip(const Field& f, std::size_t a, std::size_t b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Shape& domain_shape() const { return dom_; }
  const Shape& codomain_shape() const { return cod_; }
  const Field& field() const { return field_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  const Row& row(std::size_t r) const { return data_[r]; }

  std::size_t nonzero_count() const;
  bool is_zero() const;

  /// Same linear map with reinterpreted leg structure. Loud and explicit:
  /// products must match; compose() itself never reshapes.
  LinMap reshaped(Shape domain, Shape codomain) const;

  LinMap transpose() const;
  LinMap operator+(const LinMap& rhs) const;
  LinMap operator-(const LinMap& rhs) const;
  LinMap operator-() const;

  /// Entrywise equality of matrices; leg metadata does not participate.
  bool operator==(const LinMap& rhs) const;
  bool operator!=(const LinMap& rhs) const { return !(*this == rhs); }

  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Column index of the first entrywise difference, in basis order.
  static std::optional<std::size_t> first_differing_column(const LinMap& a,
                                                           const LinMap& b);

  /// Aligned text grid, one matrix row per line.
  std::string to_text() const;

 private:
  Field field_;
  Shape dom_, cod_;
  std::size_t rows_, cols_;
  std::vector<Row> data_;

  friend LinMap compose(const LinMap& f, const LinMap& g);
  friend LinMap tensor(const LinMap& f, const LinMap& g);
};

/// f after g (matrix product f * g). Domain legs of f must equal codomain
/// legs of g as sequences; silent reshape is forbidden.
LinMap compose(const LinMap& f, const LinMap& g);

/// Kronecker product with concatenated leg shapes; factor order matches
/// left-to-right tensor notation.
LinMap tensor(const LinMap& f, const LinMap& g);

/// A subspace of a coordinate space, held as a canonical reduced-echelon
/// basis (pivot entries 1, pivot columns otherwise clear). Equal subspaces
/// have identical representations.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace from_vectors(const Field& f, std::size_t ambient,
                               const std::vector<std::vector<Scalar>>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Scalar>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Field& field() const { return field_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool operator==(const Subspace& rhs) const;

  /// ambient x dim matrix whose columns are the basis vectors.
  LinMap embedding() const;
  /// dim x ambient matrix reading off basis coordinates (valid on the span:
  /// coordinates of a spanned vector are its pivot components).
  LinMap coordinates() const;

 private:
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  Field field_;
  std::size_t ambient_;
  std::vector<std::vector<Scalar>> basis_;  // canonical echelon rows
  std::vector<std::size_t> pivots_;
};

struct InvertResult {
  std::optional<LinMap> inverse;  // present iff the map is bijective
  std::size_t rank = 0;
  bool invertible() const { return inverse.has_value(); }
};

/// Exact Gauss-Jordan inverse of a square map, or the rank when singular.
InvertResult invert(const LinMap& f);

std::size_t rank(const LinMap& f);

/// Canonical echelon basis of the null space of f.
Subspace kernel(const LinMap& f);

/// Canonical echelon basis of the column space of f.
Subspace image(const LinMap& f);

struct QuotientMaps {
  LinMap projection;  // full row rank, kernel exactly the relations
  LinMap section;     // projection o section = identity on the quotient
};

/// Quotient of a coordinate space by a subspace of relations. The quotient
/// basis is the non-pivot coordinates of the relation echelon form.
QuotientMaps quotient(const Field& f, std::size_t ambient_dim,
                      const Subspace& relations);

}  // namespace hopfq

#endif
