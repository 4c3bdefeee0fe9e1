#include "hopfq/linmap.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace hopfq {

std::size_t shape_size(const Shape& s) {
  std::size_t p = 1;
  for (std::size_t d : s) p *= d;
  return p;
}

std::size_t flatten_index(const std::vector<std::size_t>& multi, const Shape& s) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < s.size(); ++k) flat = flat * s[k] + multi[k];
  return flat;
}

std::vector<std::size_t> unflatten_index(std::size_t flat, const Shape& s) {
  std::vector<std::size_t> multi(s.size());
  for (std::size_t k = s.size(); k-- > 0;) {
    multi[k] = flat % s[k];
    flat /= s[k];
  }
  return multi;
}

namespace {

std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k)
    out += (k ? "," : "") + std::to_string(s[k]);
  return out + "]";
}

/// Worker count for row-parallel products: HOPFQ_THREADS caps it, default 1.
std::size_t suite_threads() {
  static const std::size_t n = [] {
    const char* env = std::getenv("HOPFQ_THREADS");
    if (!env) return std::size_t{1};
    long v = std::atol(env);
    if (v < 1) return std::size_t{1};
    std::size_t hw = std::thread::hardware_concurrency();
    return std::min<std::size_t>(static_cast<std::size_t>(v), hw ? hw : 1);
  }();
  return n;
}

template <typename Fn>
void parallel_rows(std::size_t count, Fn&& body) {
  std::size_t workers = std::min(suite_threads(), count);
  if (workers <= 1 || count < 256) {
    for (std::size_t r = 0; r < count; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t r = lo; r < hi; ++r) body(r);
    });
  }
  for (auto& t : pool) t.join();
}

using Row = LinMap::Row;

/// out += c * row, merging sorted sparse rows; drops exact zeros.
Row row_axpy(const Row& a, const Scalar& c, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Scalar v = c * b[j].second;
    if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
  }
  return out;
}

Row row_scale(const Row& a, const Scalar& c) {
  Row out;
  out.reserve(a.size());
  for (const auto& [col, v] : a) {
    Scalar w = c * v;
    if (!w.is_zero()) out.emplace_back(col, std::move(w));
  }
  return out;
}

struct RrefResult {
  std::vector<Row> rows;            // reduced echelon rows, sorted by pivot
  std::vector<std::size_t> pivots;  // pivot column per row
};

/// Incremental Gauss-Jordan on sparse rows; pivots are restricted to columns
/// below pivot_col_limit (rows reducing to a lead beyond the limit are
/// dropped). The result is the unique reduced echelon form.
RrefResult rref_rows(const std::vector<Row>& input, std::size_t pivot_col_limit) {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;

  for (const Row& raw : input) {
    Row r = raw;
    // clear entries sitting at existing pivot columns
    bool changed = true;
    while (changed && !r.empty()) {
      changed = false;
      for (const auto& [col, v] : r) {
        auto it = std::find(pivots.begin(), pivots.end(), col);
        if (it != pivots.end()) {
          r = row_axpy(r, -v, rows[static_cast<std::size_t>(it - pivots.begin())]);
          changed = true;
          break;
        }
      }
    }
    if (r.empty() || r.front().first >= pivot_col_limit) continue;

    std::size_t lead = r.front().first;
    r = row_scale(r, r.front().second.inv());
    // clear the new pivot column from every earlier row
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto hit = std::lower_bound(
          rows[i].begin(), rows[i].end(), lead,
          [](const LinMap::Entry& e, std::size_t c) { return e.first < c; });
      if (hit != rows[i].end() && hit->first == lead)
        rows[i] = row_axpy(rows[i], -hit->second, r);
    }
    rows.push_back(std::move(r));
    pivots.push_back(lead);
  }

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  RrefResult out;
  out.rows.reserve(rows.size());
  out.pivots.reserve(rows.size());
  for (std::size_t i : order) {
    out.rows.push_back(std::move(rows[i]));
    out.pivots.push_back(pivots[i]);
  }
  return out;
}

Row dense_to_row(const std::vector<Scalar>& v) {
  Row r;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) r.emplace_back(c, v[c]);
  return r;
}

std::vector<Scalar> row_to_dense(const Row& r, std::size_t width, const Field& f) {
  std::vector<Scalar> v(width, Scalar::zero(f));
  for (const auto& [col, s] : r) v[col] = s;
  return v;
}

}  // namespace

LinMap::LinMap(Field field, Shape domain, Shape codomain)
    : field_(field),
      dom_(std::move(domain)),
      cod_(std::move(codomain)),
      rows_(shape_size(cod_)),
      cols_(shape_size(dom_)),
      data_(rows_) {}

LinMap LinMap::identity(const Field& f, Shape shape) {
  LinMap m(f, shape, shape);
  for (std::size_t i = 0; i < m.rows_; ++i)
    m.data_[i].emplace_back(i, Scalar::one(f));
  return m;
}

LinMap LinMap::flip(const Field& f, std::size_t a, std::size_t b) {
  LinMap m(f, Shape{a, b}, Shape{b, a});
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      m.data_[j * a + i].emplace_back(i * b + j, Scalar::one(f));
  for (auto& row : m.data_)
    std::sort(row.begin(), row.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return m;
}

Scalar LinMap::at(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Scalar::zero(field_);
}

void LinMap::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw ShapeMismatch("entry index out of range");
  if (!(v.field() == field_)) throw FieldMismatch("entry field differs from matrix field");
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    row.insert(it, {c, v});
  }
}

void LinMap::add(std::size_t r, std::size_t c, const Scalar& v) {
  set(r, c, at(r, c) + v);
}

std::size_t LinMap::nonzero_count() const {
  std::size_t n = 0;
  for (const Row& r : data_) n += r.size();
  return n;
}

bool LinMap::is_zero() const { return nonzero_count() == 0; }

LinMap LinMap::reshaped(Shape domain, Shape codomain) const {
  if (shape_size(domain) != cols_ || shape_size(codomain) != rows_)
    throw ShapeMismatch("reshape " + shape_str(dom_) + "->" + shape_str(cod_) +
                        " to " + shape_str(domain) + "->" + shape_str(codomain) +
                        " changes total dimensions");
  LinMap out = *this;
  out.dom_ = std::move(domain);
  out.cod_ = std::move(codomain);
  return out;
}

LinMap LinMap::transpose() const {
  LinMap out(field_, cod_, dom_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
  for (auto& row : out.data_)
    std::sort(row.begin(), row.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return out;
}

LinMap LinMap::operator+(const LinMap& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeMismatch("sum of maps with different dimensions");
  LinMap out(field_, dom_, cod_);
  Scalar one = Scalar::one(field_);
  for (std::size_t r = 0; r < rows_; ++r)
    out.data_[r] = row_axpy(data_[r], one, rhs.data_[r]);
  return out;
}

LinMap LinMap::operator-() const {
  LinMap out(field_, dom_, cod_);
  for (std::size_t r = 0; r < rows_; ++r)
    out.data_[r] = row_scale(data_[r], -Scalar::one(field_));
  return out;
}

LinMap LinMap::operator-(const LinMap& rhs) const { return *this + (-rhs); }

bool LinMap::operator==(const LinMap& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  return data_ == rhs.data_;
}

std::vector<Scalar> LinMap::column(std::size_t c) const {
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar v = at(r, c);
    if (!v.is_zero()) out[r] = std::move(v);
  }
  return out;
}

std::vector<Scalar> LinMap::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw ShapeMismatch("vector length does not match map domain");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, s] : data_[r]) out[r] += s * v[c];
  return out;
}

std::optional<std::size_t> LinMap::first_differing_column(const LinMap& a,
                                                          const LinMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeMismatch("comparing maps with different dimensions");
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const Row &x = a.data_[r], &y = b.data_[r];
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      std::size_t cx = i < x.size() ? x[i].first : a.cols_;
      std::size_t cy = j < y.size() ? y[j].first : a.cols_;
      std::size_t c;
      if (cx < cy) {
        c = cx;
        ++i;
      } else if (cy < cx) {
        c = cy;
        ++j;
      } else {
        c = cx;
        bool same = x[i].second == y[j].second;
        ++i;
        ++j;
        if (same) continue;
      }
      if (best && c >= *best) break;
      best = c;
      break;
    }
  }
  return best;
}

std::string LinMap::to_text() const {
  std::vector<std::vector<std::string>> cells(rows_);
  std::vector<std::size_t> width(cols_, 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    cells[r].reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      cells[r].push_back(at(r, c).to_literal());
      width[c] = std::max(width[c], cells[r][c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    }
    out << '\n';
  }
  return out.str();
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (!(f.field_ == g.field_))
    throw FieldMismatch("composing maps over different fields");
  if (f.dom_ != g.cod_)
    throw ShapeMismatch("compose: domain legs " + shape_str(f.dom_) +
                        " do not match codomain legs " + shape_str(g.cod_));
  LinMap out(f.field_, g.dom_, f.cod_);
  parallel_rows(f.rows_, [&](std::size_t r) {
    if (f.data_[r].size() == 1 && f.data_[r][0].second.is_one()) {
      out.data_[r] = g.data_[f.data_[r][0].first];
      return;
    }
    std::vector<LinMap::Entry> acc;
    for (const auto& [k, v] : f.data_[r])
      for (const auto& [c, w] : g.data_[k]) acc.emplace_back(c, v * w);
    std::sort(acc.begin(), acc.end(),
              [](const LinMap::Entry& a, const LinMap::Entry& b) {
                return a.first < b.first;
              });
    LinMap::Row merged;
    for (auto& e : acc) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const LinMap::Entry& e) { return e.second.is_zero(); });
    out.data_[r] = std::move(merged);
  });
  return out;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (!(f.field_ == g.field_))
    throw FieldMismatch("tensor of maps over different fields");
  Shape dom = f.dom_, cod = f.cod_;
  dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
  cod.insert(cod.end(), g.cod_.begin(), g.cod_.end());
  LinMap out(f.field_, std::move(dom), std::move(cod));
  for (std::size_t r1 = 0; r1 < f.rows_; ++r1) {
    if (f.data_[r1].empty()) continue;
    for (std::size_t r2 = 0; r2 < g.rows_; ++r2) {
      if (g.data_[r2].empty()) continue;
      LinMap::Row& row = out.data_[r1 * g.rows_ + r2];
      row.reserve(f.data_[r1].size() * g.data_[r2].size());
      for (const auto& [c1, v1] : f.data_[r1])
        for (const auto& [c2, v2] : g.data_[r2])
          row.emplace_back(c1 * g.cols_ + c2, v1 * v2);
    }
  }
  return out;
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(f, ambient);
}

Subspace Subspace::from_vectors(const Field& f, std::size_t ambient,
                                const std::vector<std::vector<Scalar>>& vectors) {
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient)
      throw ShapeMismatch("subspace vector length does not match ambient dimension");
    rows.push_back(dense_to_row(v));
  }
  RrefResult r = rref_rows(rows, ambient);
  Subspace out(f, ambient);
  out.pivots_ = std::move(r.pivots);
  out.basis_.reserve(r.rows.size());
  for (const Row& row : r.rows) out.basis_.push_back(row_to_dense(row, ambient, f));
  return out;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) return false;
  std::vector<Scalar> rem = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = rem[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) rem[j] += -(c * basis_[i][j]);
  }
  for (const Scalar& s : rem)
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return ambient_ == rhs.ambient_ && pivots_ == rhs.pivots_ && basis_ == rhs.basis_;
}

LinMap Subspace::embedding() const {
  LinMap m(field_, Shape{dim()}, Shape{ambient_});
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t r = 0; r < ambient_; ++r)
      if (!basis_[a][r].is_zero()) m.set(r, a, basis_[a][r]);
  return m;
}

LinMap Subspace::coordinates() const {
  LinMap m(field_, Shape{ambient_}, Shape{dim()});
  for (std::size_t a = 0; a < dim(); ++a)
    m.set(a, pivots_[a], Scalar::one(field_));
  return m;
}

InvertResult invert(const LinMap& f) {
  if (f.rows() != f.cols())
    throw ShapeMismatch("only square maps can be inverted");
  std::size_t n = f.rows();
  std::vector<LinMap::Row> aug(n);
  for (std::size_t r = 0; r < n; ++r) {
    aug[r] = f.row(r);
    aug[r].emplace_back(n + r, Scalar::one(f.field()));
  }
  RrefResult rr = rref_rows(aug, n);
  InvertResult out;
  out.rank = rr.rows.size();
  if (out.rank != n) return out;
  LinMap inv(f.field(), f.codomain_shape(), f.domain_shape());
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : rr.rows[r])
      if (c >= n) inv.set(r, c - n, v);
  out.inverse = std::move(inv);
  return out;
}

std::size_t rank(const LinMap& f) {
  std::vector<LinMap::Row> rows(f.rows());
  for (std::size_t r = 0; r < f.rows(); ++r) rows[r] = f.row(r);
  return rref_rows(rows, f.cols()).rows.size();
}

Subspace kernel(const LinMap& f) {
  std::vector<LinMap::Row> rows(f.rows());
  for (std::size_t r = 0; r < f.rows(); ++r) rows[r] = f.row(r);
  RrefResult rr = rref_rows(rows, f.cols());

  std::vector<bool> is_pivot(f.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(f.cols(), Scalar::zero(f.field()));
    v[j] = Scalar::one(f.field());
    for (std::size_t i = 0; i < rr.rows.size(); ++i) {
      auto it = std::lower_bound(
          rr.rows[i].begin(), rr.rows[i].end(), j,
          [](const LinMap::Entry& e, std::size_t c) { return e.first < c; });
      if (it != rr.rows[i].end() && it->first == j) v[rr.pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(f.field(), f.cols(), basis);
}

Subspace image(const LinMap& f) {
  LinMap t = f.transpose();
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(f.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.row(r).empty()) continue;
    cols.push_back(row_to_dense(t.row(r), f.rows(), f.field()));
  }
  return Subspace::from_vectors(f.field(), f.rows(), cols);
}

QuotientMaps quotient(const Field& f, std::size_t ambient_dim,
                      const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim)
    throw ShapeMismatch("relations do not live in the ambient space");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free.push_back(j);

  std::size_t q = free.size();
  LinMap projection(f, Shape{ambient_dim}, Shape{q});
  LinMap section(f, Shape{q}, Shape{ambient_dim});
  for (std::size_t j = 0; j < q; ++j) {
    projection.set(j, free[j], Scalar::one(f));
    section.set(free[j], j, Scalar::one(f));
    for (std::size_t a = 0; a < relations.dim(); ++a) {
      const Scalar& c = relations.basis()[a][free[j]];
      if (!c.is_zero()) projection.set(j, relations.pivots()[a], -c);
    }
  }
  return {std::move(projection), std::move(section)};
}

}  // namespace hopfq
