#include "hopfrec/examples.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// zeta_e^k, kept rational when the value is +-1.
Scalar root_of_unity(std::size_t e, std::size_t k) {
  k %= e;
  if (k == 0) return Scalar(1);
  if (2 * k == e) return Scalar(-1);
  const Scalar z = Scalar::zeta(static_cast<int>(e));
  Scalar out(1);
  for (std::size_t i = 0; i < k; ++i) out = out * z;
  return out;
}

int parity(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Standard representation of S_n on sum x_i = 0, basis e_i - e_{n-1}.
Matrix standard_matrix(const std::vector<std::size_t>& p) {
  const std::size_t n = p.size();
  Matrix m(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (p[i] != n - 1) m(p[i], i) = m(p[i], i) + Scalar(1);
    if (p[n - 1] != n - 1) m(p[n - 1], i) = m(p[n - 1], i) - Scalar(1);
  }
  return m;
}

ModuleRep one_dimensional(const std::vector<Scalar>& values, std::string label) {
  ModuleRep v;
  v.dim = 1;
  v.label = std::move(label);
  for (const Scalar& s : values) v.action.push_back(Matrix{{s}});
  return v;
}

std::vector<ModuleRep> symmetric_irreps(std::size_t n) {
  const auto perms = permutations(n);
  std::vector<ModuleRep> out;
  std::vector<Scalar> triv, sgn;
  for (const auto& p : perms) {
    triv.emplace_back(1);
    sgn.emplace_back(parity(p));
  }
  out.push_back(one_dimensional(triv, "triv"));
  out.push_back(one_dimensional(sgn, "sgn"));
  if (n == 3) {
    ModuleRep std_rep{2, {}, "std"};
    for (const auto& p : perms) std_rep.action.push_back(standard_matrix(p));
    out.push_back(std::move(std_rep));
  } else if (n == 4) {
    // S4 permutes the three pair partitions {01|23}, {02|13}, {03|12};
    // partition k is identified by the partner of 0.
    ModuleRep two{2, {}, "two"};
    for (const auto& p : perms) {
      std::vector<std::size_t> q(3);
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t a = 0, b = k + 1;
        std::vector<std::size_t> rest;
        for (std::size_t x = 1; x < 4; ++x)
          if (x != b) rest.push_back(x);
        // Image pair {p[a], p[b]}; the class is the partner of 0 in the image.
        std::size_t partner;
        if (p[a] == 0) {
          partner = p[b];
        } else if (p[b] == 0) {
          partner = p[a];
        } else {
          partner = p[rest[0]] == 0 ? p[rest[1]] : p[rest[0]];
        }
        q[k] = partner - 1;
      }
      two.action.push_back(standard_matrix(q));
    }
    out.push_back(std::move(two));
    ModuleRep std3{3, {}, "std"};
    ModuleRep std3s{3, {}, "std_sgn"};
    for (const auto& p : perms) {
      Matrix m = standard_matrix(p);
      std3.action.push_back(m);
      std3s.action.push_back(Scalar(parity(p)) * m);
    }
    out.push_back(std::move(std3));
    out.push_back(std::move(std3s));
  }
  return out;
}

std::size_t element_order(const GroupTable& g, std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

void character_search(const GroupTable& g, std::size_t e, std::vector<long>& k,
                      std::size_t pos, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = g.order();
  if (pos == n) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::size_t>(k[i]);
    out.push_back(std::move(c));
    return;
  }
  const std::size_t lo = pos == g.identity() ? 0 : 0;
  const std::size_t hi = pos == g.identity() ? 1 : e;
  for (std::size_t v = lo; v < hi; ++v) {
    k[pos] = static_cast<long>(v);
    bool ok = true;
    for (std::size_t a = 0; a <= pos && ok; ++a)
      for (std::size_t b = 0; b <= pos && ok; ++b) {
        const std::size_t ab = g.mul(a, b);
        if (ab > pos) continue;
        if ((k[a] + k[b]) % static_cast<long>(e) != k[ab]) ok = false;
      }
    if (ok) character_search(g, e, k, pos + 1, out);
  }
  k[pos] = -1;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table,
                       std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error("group table is not square");
    for (std::size_t x : row)
      if (x >= n) throw Error("group table entry out of range");
  }
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  if (names_.size() != n) throw Error("group element names do not match the order");

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error("group table is not associative at " + tuple_string({a, b, c}));
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n) throw Error("element " + std::to_string(a) + " has no inverse");
  }
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

GroupTable trivial_group() { return GroupTable({{0}}, {"e"}); }

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable(std::move(t));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order(), m = h.order();
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      names.push_back(g.names()[a] + h.names()[b]);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < m; ++d)
          t[a * m + b][c * m + d] = g.mul(a, c) * m + h.mul(b, d);
    }
  return GroupTable(std::move(t), std::move(names));
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupTable symmetric_group(std::size_t n) {
  const auto perms = permutations(n);
  const std::size_t k = perms.size();
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) {
    std::string s;
    for (std::size_t x : perms[a]) s += std::to_string(x);
    names.push_back(s);
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(
          std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(std::move(t), std::move(names));
}

HopfPresentation gen_group_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfPresentation h = HopfPresentation::zeros(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.alg.m(a, b, g.mul(a, b)) = Scalar(1);
    h.delta(a, a, a) = Scalar(1);
    h.counit[a] = Scalar(1);
    h.antipode(g.inv(a), a) = Scalar(1);
  }
  h.alg.unit[g.identity()] = Scalar(1);
  return h;
}

HopfPresentation gen_function_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfPresentation h = HopfPresentation::zeros(n);
  for (std::size_t a = 0; a < n; ++a) {
    h.alg.m(a, a, a) = Scalar(1);
    h.alg.unit[a] = Scalar(1);
    for (std::size_t b = 0; b < n; ++b) h.delta(g.mul(a, b), a, b) = Scalar(1);
    h.antipode(g.inv(a), a) = Scalar(1);
  }
  h.counit[g.identity()] = Scalar(1);
  return h;
}

HopfPresentation gen_drinfeld_double(const GroupTable& g) {
  const std::size_t n = g.order();
  HopfPresentation d = HopfPresentation::zeros(n * n);
  auto idx = [n](std::size_t h, std::size_t x) { return h * n + x; };
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xinv = g.inv(x);
      for (std::size_t h2 = 0; h2 < n; ++h2) {
        if (h == g.mul(g.mul(x, h2), xinv))
          for (std::size_t x2 = 0; x2 < n; ++x2)
            d.alg.m(idx(h, x), idx(h2, x2), idx(h, g.mul(x, x2))) = Scalar(1);
        // h1 = h h2^{-1} so that h1 h2 = h.
        const std::size_t h1 = g.mul(h, g.inv(h2));
        d.delta(idx(h, x), idx(h1, x), idx(h2, x)) = Scalar(1);
      }
      if (h == g.identity()) d.counit[idx(h, x)] = Scalar(1);
      const std::size_t s = g.mul(g.mul(xinv, g.inv(h)), x);
      d.antipode(idx(s, xinv), idx(h, x)) = Scalar(1);
    }
  for (std::size_t h = 0; h < n; ++h) d.alg.unit[idx(h, g.identity())] = Scalar(1);
  return d;
}

std::vector<std::vector<Scalar>> abelian_characters(const GroupTable& g) {
  if (!g.is_abelian()) throw Error("character table requested for a non-abelian group");
  std::size_t e = 1;
  for (std::size_t x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  std::vector<long> k(g.order(), -1);
  std::vector<std::vector<std::size_t>> found;
  character_search(g, e, k, 0, found);
  std::vector<std::vector<Scalar>> out;
  for (const auto& c : found) {
    std::vector<Scalar> vals;
    for (std::size_t v : c) vals.push_back(root_of_unity(e, v));
    out.push_back(std::move(vals));
  }
  return out;
}

std::optional<std::vector<ModuleRep>> group_algebra_irreps(const GroupTable& g) {
  if (g.table() == symmetric_group(3).table()) return symmetric_irreps(3);
  if (g.table() == symmetric_group(4).table()) return symmetric_irreps(4);
  if (!g.is_abelian()) return std::nullopt;
  std::vector<ModuleRep> out;
  const auto chars = abelian_characters(g);
  for (std::size_t i = 0; i < chars.size(); ++i)
    out.push_back(one_dimensional(chars[i], "chi" + std::to_string(i)));
  return out;
}

std::vector<ModuleRep> function_algebra_irreps(const GroupTable& g) {
  std::vector<ModuleRep> out;
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Scalar> vals(n, Scalar(0));
    vals[x] = Scalar(1);
    out.push_back(one_dimensional(vals, "ev_" + g.names()[x]));
  }
  return out;
}

std::vector<ModuleRep> drinfeld_double_irreps(const GroupTable& g) {
  const auto chars = abelian_characters(g);
  const std::size_t n = g.order();
  std::vector<ModuleRep> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < chars.size(); ++c) {
      std::vector<Scalar> vals(n * n, Scalar(0));
      for (std::size_t x = 0; x < n; ++x) vals[a * n + x] = chars[c][x];
      out.push_back(one_dimensional(vals, g.names()[a] + "_chi" + std::to_string(c)));
    }
  return out;
}

std::optional<std::vector<std::size_t>> cocycle_violation(const GroupTable& g,
                                                          const ThreeCochain& omega) {
  const std::size_t n = g.order();
  auto w = [&](std::size_t a, std::size_t b, std::size_t c) {
    return omega[(a * n + b) * n + c];
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const int lhs = w(b, c, d) * w(a, g.mul(b, c), d) * w(a, b, c);
          const int rhs = w(g.mul(a, b), c, d) * w(a, b, g.mul(c, d));
          if (lhs != rhs) return std::vector<std::size_t>{a, b, c, d};
        }
  return std::nullopt;
}

PointedCategory gen_pointed_category(const GroupTable& g, const ThreeCochain& omega) {
  const std::size_t n = g.order();
  if (omega.size() != n * n * n)
    throw ShapeError("3-cochain has " + std::to_string(omega.size()) + " values, expected " +
                     std::to_string(n * n * n));
  for (int v : omega)
    if (v != 1 && v != -1) throw NotACocycle("3-cochain values must be +1 or -1");
  if (auto t = cocycle_violation(g, omega))
    throw NotACocycle("cocycle identity fails at " + tuple_string(*t));
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if ((a == e || b == e || c == e) && omega[(a * n + b) * n + c] != 1)
          throw NotACocycle("3-cocycle is not normalized at " + tuple_string({a, b, c}));

  PointedCategory out{FusionSkeleton::with_rank(n), std::nullopt};
  FusionSkeleton& k = out.skeleton;
  k.simples = g.names();
  k.unit = e;
  for (std::size_t a = 0; a < n; ++a) {
    k.dual[a] = g.inv(a);
    for (std::size_t b = 0; b < n; ++b) k.N(a, b, g.mul(a, b)) = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        k.F(a, b, c, g.mul(g.mul(a, b), c)) = Matrix{{Scalar(omega[(a * n + b) * n + c])}};

  if (std::all_of(omega.begin(), omega.end(), [](int v) { return v == 1; })) {
    FiberData f;
    f.dims.assign(n, 1);
    f.tensorator.assign(n * n, Matrix{{Scalar(1)}});
    f.iota = Scalar(1);
    f.ev_coeff.assign(n, {Scalar(1)});
    f.coev_coeff.assign(n, {Scalar(1)});
    out.fiber = std::move(f);
  }
  return out;
}

ThreeCochain z2_nontrivial_cocycle() {
  ThreeCochain w(8, 1);
  w[7] = -1;
  return w;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "kz2",    "kz2-modules",    "kz2xz2",      "kz2xz2-modules", "ks3",
      "ks3-modules", "ks4",       "ks4-modules", "funz2",          "funz2-modules",
      "funs3",  "funs3-modules",  "dz2",         "dz2-modules",    "ds3",
      "vecz2",  "vecz2-fiber",    "vecz2-omega", "z2",             "s3"};
  return names;
}

}  // namespace hopfrec
