#include "hopfq/loops.hpp"

#include <algorithm>
#include <numeric>

namespace hopfq {

namespace {

void require_latin(const std::vector<std::vector<std::size_t>>& rows) {
  std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t v : rows[i])
      if (v >= n)
        throw Error("row " + std::to_string(i) + " holds the out-of-range entry " +
                    std::to_string(v));
  }
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[rows[i][j]])
        throw Error("not a Latin square: row " + std::to_string(i) +
                    " repeats entry " + std::to_string(rows[i][j]));
      seen[rows[i][j]] = true;
    }
    seen.assign(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[rows[j][i]])
        throw Error("not a Latin square: column " + std::to_string(i) +
                    " repeats entry " + std::to_string(rows[j][i]));
      seen[rows[j][i]] = true;
    }
  }
}

std::optional<std::vector<std::size_t>> ip_inverses(
    const std::vector<std::vector<std::size_t>>& t, std::size_t e) {
  std::size_t n = t.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::optional<std::size_t> two_sided;
    for (std::size_t y = 0; y < n; ++y)
      if (t[x][y] == e && t[y][x] == e) two_sided = y;
    if (!two_sided) return std::nullopt;
    inv[x] = *two_sided;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t[inv[x]][t[x][y]] != y || t[t[y][x]][inv[x]] != y) return std::nullopt;
  return inv;
}

bool is_associative(const LoopTable& t) {
  for (std::size_t x = 0; x < t.order; ++x)
    for (std::size_t y = 0; y < t.order; ++y)
      for (std::size_t z = 0; z < t.order; ++z)
        if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) return false;
  return true;
}

bool is_moufang(const LoopTable& t) {
  // (x y)(z x) = (x (y z)) x over all triples
  for (std::size_t x = 0; x < t.order; ++x)
    for (std::size_t y = 0; y < t.order; ++y)
      for (std::size_t z = 0; z < t.order; ++z)
        if (t.mul(t.mul(x, y), t.mul(z, x)) !=
            t.mul(t.mul(x, t.mul(y, z)), x))
          return false;
  return true;
}

// Signed product of hypercomplex basis units at the given doubling level
// (level 3 = octonions): (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)),
// with conj(e_0) = e_0 and conj(e_i) = -e_i otherwise.
std::pair<int, std::size_t> basis_product(std::size_t level, std::size_t i,
                                          std::size_t j) {
  if (level == 0) return {+1, 0};
  std::size_t h = std::size_t{1} << (level - 1);
  std::size_t ia = i % h, ib = i / h, ja = j % h, jb = j / h;
  auto conj_sign = [](std::size_t idx) { return idx == 0 ? +1 : -1; };
  if (ib == 0 && jb == 0) return basis_product(level - 1, ia, ja);
  if (ib == 0 && jb == 1) {
    auto [s, k] = basis_product(level - 1, ja, ia);
    return {s, k + h};
  }
  if (ib == 1 && jb == 0) {
    auto [s, k] = basis_product(level - 1, ia, ja);
    return {s * conj_sign(ja), k + h};
  }
  auto [s, k] = basis_product(level - 1, ja, ia);
  return {-s * conj_sign(ja), k};
}

}  // namespace

LoopTable make_loop_table(std::vector<std::vector<std::size_t>> rows) {
  std::size_t n = rows.size();
  if (n == 0) throw Error("empty loop table");
  require_latin(rows);
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (!identity) throw Error("table has no two-sided identity");
  LoopTable t;
  t.order = n;
  t.identity = *identity;
  t.table = std::move(rows);
  t.inverses = ip_inverses(t.table, t.identity);
  return t;
}

LoopClass classify_loop(const LoopTable& t) {
  if (is_associative(t)) return LoopClass::Group;
  if (is_moufang(t)) return LoopClass::MoufangNonassoc;
  if (t.is_ip()) return LoopClass::IpNonmoufang;
  return LoopClass::NonIp;
}

const char* loop_class_name(LoopClass c) {
  switch (c) {
    case LoopClass::Group: return "group";
    case LoopClass::MoufangNonassoc: return "moufang_nonassoc";
    case LoopClass::IpNonmoufang: return "ip_nonmoufang";
    case LoopClass::NonIp: return "non_ip";
  }
  return "?";
}

LoopTable cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return make_loop_table(std::move(rows));
}

LoopTable symmetric_group_table(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(
        std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> comp(k);  // (p_i o p_j)(x) = p_i[p_j[x]]
      for (std::size_t x = 0; x < k; ++x) comp[x] = perms[i][perms[j][x]];
      rows[i][j] = index_of(comp);
    }
  return make_loop_table(std::move(rows));
}

LoopTable chein_double(const LoopTable& group) {
  if (classify_loop(group) != LoopClass::Group)
    throw Error("Chein doubling needs a group");
  std::size_t m = group.order;
  const auto& inv = *group.inverses;
  std::vector<std::vector<std::size_t>> rows(2 * m, std::vector<std::size_t>(2 * m));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      rows[g][h] = group.mul(g, h);
      rows[g][m + h] = m + group.mul(h, g);
      rows[m + g][h] = m + group.mul(g, inv[h]);
      rows[m + g][m + h] = group.mul(inv[h], g);
    }
  return make_loop_table(std::move(rows));
}

LoopTable octonion_loop() {
  // elements: +e_0..+e_7 at 0..7, -e_0..-e_7 at 8..15; identity +e_0
  std::vector<std::vector<std::size_t>> rows(16, std::vector<std::size_t>(16));
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      auto [s, k] = basis_product(3, i % 8, j % 8);
      bool negative = ((i / 8) + (j / 8) + (s < 0 ? 1 : 0)) % 2 == 1;
      rows[i][j] = k + (negative ? 8 : 0);
    }
  return make_loop_table(std::move(rows));
}

LoopTable first_non_ip_loop(std::size_t order) {
  std::size_t n = order;
  // normalized: row 0 and column 0 are the identity arrangement
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) rows[0][j] = j;
  for (std::size_t i = 0; i < n; ++i) rows[i][0] = i;

  std::vector<std::size_t> cells;  // row-major free cells
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) cells.push_back(i * n + j);

  std::optional<LoopTable> found;
  auto fits = [&](std::size_t r, std::size_t c, std::size_t v) {
    for (std::size_t j = 0; j < c; ++j)
      if (rows[r][j] == v) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i][c] == v) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == cells.size()) {
      LoopTable t = make_loop_table(rows);
      if (!t.is_ip()) {
        found = std::move(t);
        return true;
      }
      return false;
    }
    std::size_t r = cells[pos] / n, c = cells[pos] % n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!fits(r, c, v)) continue;
      rows[r][c] = v;
      if (self(self, pos + 1)) return true;
    }
    rows[r][c] = 0;
    return false;
  };
  if (!search(search, 0))
    throw Error("no non-IP loop of order " + std::to_string(order));
  return *found;
}

HopfLike loop_algebra(const LoopTable& t, const Field& f) {
  std::size_t n = t.order;
  RawStructure raw = RawStructure::zeros(f, n, t.is_ip());
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) raw.mu_at(i, j, t.mul(i, j)) = one;
    raw.delta_at(i, i, i) = one;
    raw.counit[i] = one;
  }
  raw.unit[t.identity] = one;
  if (t.is_ip())
    for (std::size_t x = 0; x < n; ++x) raw.antipode_at((*t.inverses)[x], x) = one;
  return HopfLike::build(raw);
}

HopfLike dualize(const HopfLike& h) {
  RawStructure raw = h.raw();
  RawStructure dual = RawStructure::zeros(h.field(), h.dim(), raw.antipode.has_value());
  std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        dual.mu_at(i, j, k) = raw.delta_at(k, i, j);
        dual.delta_at(k, i, j) = raw.mu_at(i, j, k);
      }
  dual.unit = raw.counit;
  dual.counit = raw.unit;
  if (raw.antipode)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dual.antipode_at(i, j) = raw.antipode_at(j, i);
  return HopfLike::build(dual);
}

RawStructure perturb(const HopfLike& h, PerturbTarget target,
                     std::array<std::size_t, 3> index, const Scalar& value) {
  RawStructure raw = h.raw();
  std::size_t n = h.dim();
  auto in_range = [n](std::size_t i) { return i < n; };
  switch (target) {
    case PerturbTarget::Mu:
      if (!in_range(index[0]) || !in_range(index[1]) || !in_range(index[2]))
        throw Error("perturbation index out of range");
      raw.mu_at(index[0], index[1], index[2]) += value;
      break;
    case PerturbTarget::Delta:
      if (!in_range(index[0]) || !in_range(index[1]) || !in_range(index[2]))
        throw Error("perturbation index out of range");
      raw.delta_at(index[0], index[1], index[2]) += value;
      break;
    case PerturbTarget::Antipode:
      if (!raw.antipode) throw Error("no antipode to perturb");
      if (!in_range(index[0]) || !in_range(index[1]))
        throw Error("perturbation index out of range");
      raw.antipode_at(index[0], index[1]) += value;
      break;
  }
  return raw;
}

namespace fixtures {

HopfLike kZ2(const Field& f) { return loop_algebra(cyclic_group_table(2), f); }
HopfLike kS3(const Field& f) { return loop_algebra(symmetric_group_table(3), f); }
HopfLike kM12(const Field& f) {
  return loop_algebra(chein_double(symmetric_group_table(3)), f);
}
HopfLike kO16(const Field& f) { return loop_algebra(octonion_loop(), f); }
HopfLike kL5(const Field& f) { return loop_algebra(first_non_ip_loop(5), f); }

}  // namespace fixtures

}  // namespace hopfq
