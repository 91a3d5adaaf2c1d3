#include "galcov/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace galcov {

Caps &caps() {
  static Caps c;
  return c;
}

struct FiniteGroup::Cache {
  std::once_flag once;
  std::vector<Subgroup> subgroups;
};

bool Subgroup::contains(std::size_t g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

std::size_t parse_number(std::string_view s, std::string_view whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    fail(ErrorKind::SchemaError, "bad group spec '" + std::string(whole) + "'");
  return static_cast<std::size_t>(std::stoul(std::string(s)));
}

std::vector<std::size_t> parse_numbers(std::string_view s, std::string_view whole) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_number(s.substr(start, comma - start), whole));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::string cycle_label(const std::vector<std::size_t> &perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i)
      continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

void check_order_cap(std::size_t n) {
  if (n > caps().max_group_order)
    fail(ErrorKind::CapExceeded, "group order " + std::to_string(n) + " exceeds cap " +
                                     std::to_string(caps().max_group_order));
}

FiniteGroup permutation_group(std::size_t n, bool even_only, std::string name) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (p[i] > p[j])
            ++inversions;
      if (inversions % 2)
        continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  check_order_cap(perms.size());
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> mul(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i)
        c[i] = perms[a][perms[b][i]];
      mul[a][b] = index.at(c);
    }
  std::vector<std::string> labels;
  for (const auto &q : perms)
    labels.push_back(cycle_label(q));
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(name));
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> mul,
                                    std::vector<std::string> labels, std::string name) {
  const std::size_t n = mul.size();
  require(n >= 1, ErrorKind::InvalidTable, "empty multiplication table");
  check_order_cap(n);
  for (const auto &row : mul) {
    require(row.size() == n, ErrorKind::InvalidTable, "table is not square");
    std::vector<bool> seen(n, false);
    for (auto x : row) {
      require(x < n && !seen[x], ErrorKind::InvalidTable, "row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      require(!seen[mul[i][j]], ErrorKind::InvalidTable, "column is not a permutation");
      seen[mul[i][j]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        require(mul[mul[a][b]][c] == mul[a][mul[b][c]], ErrorKind::InvalidTable,
                "multiplication is not associative");
  FiniteGroup g;
  g.mul_ = std::move(mul);
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g.mul_[e][x] == x && g.mul_[x][e] == x;
    if (ok)
      id = e;
  }
  require(id < n, ErrorKind::InvalidTable, "no identity element");
  g.id_ = id;
  require(labels.empty() || labels.size() == n, ErrorKind::InvalidTable, "label count mismatch");
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul_[a][b] == id_)
        inv_[a] = b;
  cache_ = std::make_shared<Cache>();
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidTable, "cyclic group of order 0");
  check_order_cap(n);
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      mul[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  }
  return from_table(std::move(mul), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidTable, "dihedral group needs n >= 1");
  check_order_cap(2 * n);
  const std::size_t N = 2 * n;
  std::vector<std::vector<std::size_t>> mul(N, std::vector<std::size_t>(N));
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    const std::size_t i = x % n, j = x / n;
    std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[x] = (r.empty() && j == 0) ? "e" : r + (j ? "s" : "");
    for (std::size_t y = 0; y < N; ++y) {
      const std::size_t k = y % n, l = y / n;
      const std::size_t ii = j ? (i + n - k) % n : (i + k) % n;
      mul[x][y] = ((j + l) % 2) * n + ii;
    }
  }
  return from_table(std::move(mul), std::move(labels), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  return permutation_group(n, false, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(std::size_t n) {
  return permutation_group(n, true, "A" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion() {
  std::vector<std::vector<std::size_t>> mul(8, std::vector<std::size_t>(8));
  const char *names[8] = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      const std::size_t e = (a + (b ? 4 - c : c) + ((b && d) ? 2 : 0)) % 4;
      mul[x][y] = ((b + d) % 2) * 4 + e;
    }
  return from_table(std::move(mul), std::vector<std::string>(names, names + 8), "Q8");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup &g, const FiniteGroup &h) {
  const std::size_t m = h.order(), n = g.order() * m;
  check_order_cap(n);
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + g.label(x / m) + "," + h.label(x % m) + ")";
    for (std::size_t y = 0; y < n; ++y)
      mul[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  }
  return from_table(std::move(mul), std::move(labels), g.name() + "x" + h.name());
}

FiniteGroup FiniteGroup::semidirect(const FiniteGroup &N, const FiniteGroup &K,
                                    const std::vector<std::vector<std::size_t>> &action) {
  const std::size_t nn = N.order(), nk = K.order();
  require(action.size() == nk, ErrorKind::InvalidTable, "action needs one automorphism per element of K");
  for (std::size_t k = 0; k < nk; ++k) {
    const auto &phi = action[k];
    require(phi.size() == nn, ErrorKind::InvalidTable, "automorphism has wrong size");
    std::vector<bool> seen(nn, false);
    for (auto x : phi) {
      require(x < nn && !seen[x], ErrorKind::InvalidTable, "action is not a permutation");
      seen[x] = true;
    }
    for (std::size_t a = 0; a < nn; ++a)
      for (std::size_t b = 0; b < nn; ++b)
        require(phi[N.mul(a, b)] == N.mul(phi[a], phi[b]), ErrorKind::InvalidTable,
                "action is not by automorphisms");
  }
  for (std::size_t k1 = 0; k1 < nk; ++k1)
    for (std::size_t k2 = 0; k2 < nk; ++k2)
      for (std::size_t x = 0; x < nn; ++x)
        require(action[K.mul(k1, k2)][x] == action[k1][action[k2][x]], ErrorKind::InvalidTable,
                "action is not a homomorphism");
  const std::size_t n = nn * nk;
  check_order_cap(n);
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t n1 = x % nn, k1 = x / nn;
    labels[x] = "(" + N.label(n1) + "," + K.label(k1) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t n2 = y % nn, k2 = y / nn;
      mul[x][y] = K.mul(k1, k2) * nn + N.mul(n1, action[k1][n2]);
    }
  }
  return from_table(std::move(mul), std::move(labels), N.name() + ":" + K.name());
}

FiniteGroup FiniteGroup::metacyclic(std::size_t n, std::size_t m, std::size_t r) {
  require(n >= 1 && m >= 1, ErrorKind::InvalidTable, "metacyclic parameters must be positive");
  require(std::gcd(r, n) == 1 || n == 1, ErrorKind::InvalidTable, "r must be a unit mod n");
  std::size_t rm = 1 % n;
  for (std::size_t i = 0; i < m; ++i)
    rm = rm * r % n;
  require(rm == 1 % n, ErrorKind::InvalidTable, "r^m must be 1 mod n");
  FiniteGroup N = cyclic(n), K = cyclic(m);
  std::vector<std::vector<std::size_t>> action(m, std::vector<std::size_t>(n));
  std::size_t rk = 1 % n;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t x = 0; x < n; ++x)
      action[k][x] = x * rk % n;
    rk = rk * r % n;
  }
  FiniteGroup g = semidirect(N, K, action);
  g.name_ = "SD:" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r);
  return g;
}

FiniteGroup FiniteGroup::sl23() {
  FiniteGroup q = quaternion();
  // i -> j -> k -> i
  auto elem = [](std::size_t a, std::size_t b) { return b * 4 + a; };
  std::vector<std::size_t> phi(8);
  const std::size_t img_i = elem(0, 1), img_j = elem(1, 1);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t a = x % 4, b = x / 4;
    phi[x] = q.mul(q.pow(img_i, static_cast<long>(a)), q.pow(img_j, static_cast<long>(b)));
  }
  std::vector<std::vector<std::size_t>> action(3, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x) {
    action[0][x] = x;
    action[1][x] = phi[x];
    action[2][x] = phi[phi[x]];
  }
  FiniteGroup g = semidirect(q, cyclic(3), action);
  g.name_ = "SL23";
  return g;
}

FiniteGroup FiniteGroup::parse(std::string_view spec) {
  FiniteGroup g;
  // refuse before building a table beyond the cap
  auto capped = [&](std::size_t order) {
    if (order > caps().max_group_order)
      fail(ErrorKind::CapExceeded, "'" + std::string(spec) + "' has order " + std::to_string(order) +
                                       " above the cap " + std::to_string(caps().max_group_order));
  };
  if (spec == "S3")
    g = symmetric(3);
  else if (spec == "S4")
    g = symmetric(4);
  else if (spec == "A4")
    g = alternating(4);
  else if (spec == "Q8")
    g = quaternion();
  else if (spec == "SL23")
    g = sl23();
  else if (spec.rfind("CnxCm:", 0) == 0) {
    auto v = parse_numbers(spec.substr(6), spec);
    require(v.size() == 2 && v[0] >= 1 && v[1] >= 1, ErrorKind::SchemaError,
            "CnxCm needs two positive orders");
    capped(v[0] * v[1]);
    g = direct_product(cyclic(v[0]), cyclic(v[1]));
  } else if (spec.rfind("SD:", 0) == 0) {
    auto v = parse_numbers(spec.substr(3), spec);
    require(v.size() == 3, ErrorKind::SchemaError, "SD needs n,m,r");
    capped(v[0] * v[1]);
    g = metacyclic(v[0], v[1], v[2]);
  } else if (spec.size() >= 2 && spec[0] == 'C') {
    std::size_t n = parse_number(spec.substr(1), spec);
    require(n >= 1, ErrorKind::SchemaError, "cyclic order must be positive");
    capped(n);
    g = cyclic(n);
  } else if (spec.size() >= 2 && spec[0] == 'D') {
    std::size_t n = parse_number(spec.substr(1), spec);
    require(n >= 1, ErrorKind::SchemaError, "dihedral parameter must be positive");
    capped(2 * n);
    g = dihedral(n);
  } else if (spec.size() >= 2 && spec[0] == 'S') {
    const std::size_t n = parse_number(spec.substr(1), spec);
    std::size_t order = 1;
    for (std::size_t i = 2; i <= n && order <= caps().max_group_order; ++i)
      order *= i;
    capped(order);
    g = symmetric(n);
  } else {
    fail(ErrorKind::SchemaError, "unknown group spec '" + std::string(spec) + "'");
  }
  g.name_ = std::string(spec);
  return g;
}

std::string FiniteGroup::label(std::size_t g) const {
  return labels_.empty() ? std::to_string(g) : labels_[g];
}

std::size_t FiniteGroup::pow(std::size_t a, long k) const {
  std::size_t base = k < 0 ? inv(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  std::size_t r = id_;
  while (e) {
    if (e & 1)
      r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a)
    e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const { return is_abelian(whole()); }

bool FiniteGroup::is_abelian(const Subgroup &h) const {
  for (auto a : h.elements)
    for (auto b : h.elements)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

bool FiniteGroup::is_solvable() const {
  Subgroup cur = whole();
  while (cur.order() > 1) {
    Subgroup next = commutator_subgroup(cur);
    if (next.order() == cur.order())
      return false;
    cur = std::move(next);
  }
  return true;
}

Subgroup FiniteGroup::whole() const {
  Subgroup s;
  s.elements.resize(order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup FiniteGroup::trivial_subgroup() const { return Subgroup{{id_}}; }

bool FiniteGroup::is_subgroup(const std::vector<std::size_t> &sorted) const {
  if (sorted.empty() || !std::binary_search(sorted.begin(), sorted.end(), id_))
    return false;
  for (auto a : sorted) {
    if (a >= order())
      return false;
    for (auto b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), mul(a, b)))
        return false;
  }
  return true;
}

Subgroup FiniteGroup::subgroup(std::vector<std::size_t> elements) const {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup(elements))
    fail(ErrorKind::NotSubgroup, "element set is not closed under the group law");
  return Subgroup{std::move(elements)};
}

Subgroup FiniteGroup::generated(const std::vector<std::size_t> &gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> queue{id_};
  in[id_] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (auto g : gens) {
      std::size_t y = mul(queue[qi], g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return Subgroup{std::move(queue)};
}

std::vector<std::size_t> FiniteGroup::generators_of(const Subgroup &h) const {
  std::vector<std::size_t> cand = h.elements;
  std::stable_sort(cand.begin(), cand.end(),
                   [&](std::size_t a, std::size_t b) { return element_order(a) > element_order(b); });
  std::vector<std::size_t> gens;
  Subgroup cur = trivial_subgroup();
  for (auto g : cand) {
    if (cur.order() == h.order())
      break;
    if (cur.contains(g))
      continue;
    gens.push_back(g);
    cur = generated(gens);
  }
  return gens;
}

std::vector<std::size_t> FiniteGroup::generators() const { return generators_of(whole()); }

bool FiniteGroup::is_normal(const Subgroup &h) const {
  for (std::size_t g = 0; g < order(); ++g)
    for (auto x : h.elements)
      if (!h.contains(conj(g, x)))
        return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < order(); ++x) {
    if (seen[x])
      continue;
    std::set<std::size_t> cls;
    for (std::size_t g = 0; g < order(); ++g)
      cls.insert(conj(g, x));
    for (auto y : cls)
      seen[y] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

Subgroup FiniteGroup::center() const {
  std::vector<std::size_t> z;
  for (std::size_t x = 0; x < order(); ++x) {
    bool central = true;
    for (std::size_t g = 0; g < order() && central; ++g)
      central = mul(g, x) == mul(x, g);
    if (central)
      z.push_back(x);
  }
  return Subgroup{std::move(z)};
}

Subgroup FiniteGroup::commutator_subgroup(const Subgroup &h) const {
  std::set<std::size_t> comms;
  for (auto a : h.elements)
    for (auto b : h.elements)
      comms.insert(mul(mul(a, b), mul(inv(a), inv(b))));
  return generated(std::vector<std::size_t>(comms.begin(), comms.end()));
}

Subgroup FiniteGroup::commutator_subgroup() const { return commutator_subgroup(whole()); }

const std::vector<Subgroup> &FiniteGroup::subgroups() const {
  check_order_cap(order());
  std::call_once(cache_->once, [this] {
    std::set<std::vector<std::size_t>> found;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cyclics; // generator, elements
    for (std::size_t x = 0; x < order(); ++x) {
      auto c = generated({x}).elements;
      if (found.insert(c).second)
        cyclics.emplace_back(x, c);
    }
    std::vector<std::vector<std::size_t>> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto &a : frontier) {
        const std::vector<std::size_t> base = generators_of(Subgroup{a});
        for (const auto &[x, c] : cyclics) {
          if (std::binary_search(a.begin(), a.end(), x))
            continue;
          std::vector<std::size_t> gens = base;
          gens.push_back(x);
          auto j = generated(gens).elements;
          if (found.insert(j).second)
            next.push_back(std::move(j));
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto &s : found)
      out.push_back(Subgroup{s});
    std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
      if (a.order() != b.order())
        return a.order() < b.order();
      return a.elements < b.elements;
    });
    cache_->subgroups = std::move(out);
  });
  return cache_->subgroups;
}

std::vector<Subgroup> FiniteGroup::normal_subgroups() const {
  std::vector<Subgroup> out;
  for (const auto &s : subgroups())
    if (is_normal(s))
      out.push_back(s);
  return out;
}

CosetData FiniteGroup::right_cosets(const Subgroup &h) const {
  if (!is_subgroup(h.elements))
    fail(ErrorKind::NotSubgroup, "coset request for a non-subgroup");
  CosetData d;
  d.coset_of.assign(order(), order());
  for (std::size_t g = 0; g < order(); ++g) {
    if (d.coset_of[g] != order())
      continue;
    const std::size_t idx = d.reps.size();
    d.reps.push_back(g);
    for (auto x : h.elements)
      d.coset_of[mul(x, g)] = idx;
  }
  return d;
}

FiniteGroup FiniteGroup::quotient(const Subgroup &h) const {
  if (!is_normal(h))
    fail(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  CosetData d = right_cosets(h);
  const std::size_t m = d.reps.size();
  std::vector<std::vector<std::size_t>> mul_q(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("H" + label(d.reps[a]));
    for (std::size_t b = 0; b < m; ++b)
      mul_q[a][b] = d.coset_of[mul(d.reps[a], d.reps[b])];
  }
  return from_table(std::move(mul_q), std::move(labels), name_ + "/H");
}

FiniteGroup FiniteGroup::subgroup_as_group(const Subgroup &h) const {
  const std::size_t m = h.order();
  std::vector<std::vector<std::size_t>> mul_h(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  auto pos = [&](std::size_t g) {
    return static_cast<std::size_t>(std::lower_bound(h.elements.begin(), h.elements.end(), g) -
                                    h.elements.begin());
  };
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(label(h.elements[a]));
    for (std::size_t b = 0; b < m; ++b)
      mul_h[a][b] = pos(mul(h.elements[a], h.elements[b]));
  }
  if (!is_subgroup(h.elements))
    fail(ErrorKind::NotSubgroup, "subgroup_as_group on a non-subgroup");
  return from_table(std::move(mul_h), std::move(labels), name_ + "_sub" + std::to_string(m));
}

std::string FiniteGroup::describe() const {
  std::ostringstream os;
  os << (name_.empty() ? "group" : name_) << " (order " << order() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime_small(std::size_t n) {
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool normal_in(const FiniteGroup &g, const Subgroup &n, const Subgroup &k) {
  for (auto x : k.elements)
    for (auto y : n.elements)
      if (!n.contains(g.conj(x, y)))
        return false;
  return true;
}

} // namespace

Descent find_abelian_normal_prime_index(const FiniteGroup &g) {
  if (g.is_abelian())
    fail(ErrorKind::AbelianInput, g.describe() + " is abelian");
  const auto &subs = g.subgroups();
  Descent d;
  d.chain.push_back(g.whole());
  Subgroup k = g.whole();
  if (!g.is_solvable()) {
    // minimal nonabelian subgroup: nonabelian with all proper subgroups abelian
    const Subgroup *best = nullptr;
    for (const auto &s : subs) {
      if (g.is_abelian(s))
        continue;
      bool minimal = true;
      for (const auto &t : subs) {
        if (t.order() >= s.order() || s.order() % t.order() != 0)
          continue;
        if (std::includes(s.elements.begin(), s.elements.end(), t.elements.begin(), t.elements.end()) &&
            !g.is_abelian(t)) {
          minimal = false;
          break;
        }
      }
      if (minimal && (!best || s.elements < best->elements))
        best = &s;
    }
    require(best != nullptr, ErrorKind::Internal, "no minimal nonabelian subgroup");
    k = *best;
    d.chain.push_back(k);
  }
  while (true) {
    // lexicographically smallest normal subgroup of prime index in k
    const Subgroup *best = nullptr;
    for (const auto &s : subs) {
      if (s.order() >= k.order() || k.order() % s.order() != 0 || !is_prime_small(k.order() / s.order()))
        continue;
      if (!std::includes(k.elements.begin(), k.elements.end(), s.elements.begin(), s.elements.end()))
        continue;
      if (!normal_in(g, s, k))
        continue;
      if (!best || s.elements < best->elements)
        best = &s;
    }
    require(best != nullptr, ErrorKind::Internal, "solvable group without a prime-index normal subgroup");
    if (g.is_abelian(*best)) {
      d.g_prime = k;
      d.h = *best;
      d.p = k.order() / best->order();
      return d;
    }
    k = *best;
    d.chain.push_back(k);
  }
}

} // namespace galcov
