#include "gfs/group.hpp"

#include <algorithm>
#include <numeric>

#include "gfs/rng.hpp"

namespace gfs {

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<ElemId> member_ids)
    : parent_(&parent), member_ids_(std::move(member_ids)) {
  std::sort(member_ids_.begin(), member_ids_.end());
  member_ids_.erase(std::unique(member_ids_.begin(), member_ids_.end()), member_ids_.end());
  if (member_ids_.empty()) throw std::invalid_argument("subgroup: empty member set");
  if (!contains(parent.identity())) throw std::invalid_argument("subgroup: identity missing");
  for (ElemId a : member_ids_) {
    if (a >= parent.order()) throw std::invalid_argument("subgroup: element id out of range");
    if (!contains(parent.inv(a))) throw std::invalid_argument("subgroup: not closed under inverse");
    for (ElemId b : member_ids_)
      if (!contains(parent.mul(a, b))) throw std::invalid_argument("subgroup: not closed under product");
  }
}

bool Subgroup::contains(ElemId g) const {
  return std::binary_search(member_ids_.begin(), member_ids_.end(), g);
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<ElemId> table,
                                    ElemId identity_id, Family family,
                                    unsigned family_parameter) {
  FiniteGroup g;
  g.name_ = std::move(name);
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n * n != table.size() || n == 0)
    throw std::invalid_argument("group table: size must be a positive square");
  g.order_ = n;
  g.identity_ = identity_id;
  g.table_ = std::move(table);
  g.family_ = family;
  g.family_parameter_ = family_parameter;
  g.finalize();
  return g;
}

void FiniteGroup::finalize() {
  const std::size_t n = order_;
  if (identity_ >= n) throw std::invalid_argument("group table: identity id out of range");
  for (ElemId v : table_)
    if (v >= n) throw std::invalid_argument("group table: entry out of range");
  for (ElemId a = 0; a < n; ++a)
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw std::invalid_argument("group table: identity is not two-sided");

  inverse_.assign(n, 0);
  for (ElemId a = 0; a < n; ++a) {
    bool found = false;
    for (ElemId b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_)
          throw std::invalid_argument("group table: one-sided inverse");
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("group table: missing inverse");
  }

  // Conjugacy classes by orbit scan, in order of smallest member id.
  class_of_.assign(n, -1);
  for (ElemId g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    const int idx = static_cast<int>(classes_.size());
    ConjugacyClass cls;
    cls.representative_id = g;
    for (ElemId x = 0; x < n; ++x) {
      const ElemId c = conjugate(x, g);
      if (class_of_[c] < 0) {
        class_of_[c] = idx;
        cls.member_ids.push_back(c);
      }
    }
    std::sort(cls.member_ids.begin(), cls.member_ids.end());
    classes_.push_back(std::move(cls));
  }

  for (const ConjugacyClass& c : classes_)
    if (c.member_ids.size() == 1) center_ids_.push_back(c.member_ids[0]);
  std::sort(center_ids_.begin(), center_ids_.end());
}

Subgroup FiniteGroup::center() const { return Subgroup(*this, center_ids_); }

std::vector<ElemId> FiniteGroup::involutions() const {
  std::vector<ElemId> out;
  for (ElemId g = 0; g < order_; ++g)
    if (g != identity_ && mul(g, g) == identity_) out.push_back(g);
  return out;
}

std::vector<ElemId> FiniteGroup::non_central_involutions() const {
  std::vector<ElemId> out;
  for (ElemId g : involutions())
    if (!std::binary_search(center_ids_.begin(), center_ids_.end(), g)) out.push_back(g);
  return out;
}

std::size_t FiniteGroup::centralizer_size(ElemId g) const {
  std::size_t count = 0;
  for (ElemId x = 0; x < order_; ++x)
    if (mul(x, g) == mul(g, x)) ++count;
  return count;
}

ElemId FiniteGroup::default_mu() const {
  if (preferred_mu_) return *preferred_mu_;
  const std::vector<ElemId> cands = non_central_involutions();
  if (cands.empty())
    throw std::invalid_argument("group " + name_ + " has no non-central involution");
  return cands.front();
}

namespace {

void check_order_guard(std::size_t order, const GroupOptions& opts, const std::string& what) {
  if (order > opts.max_order)
    throw std::invalid_argument(what + ": order " + std::to_string(order) +
                                " exceeds table guard " + std::to_string(opts.max_order));
}

}  // namespace

FiniteGroup make_cyclic(unsigned k, const GroupOptions& opts) {
  if (k < 1) throw std::invalid_argument("make_cyclic: k must be >= 1");
  check_order_guard(k, opts, "make_cyclic");
  std::vector<ElemId> table(static_cast<std::size_t>(k) * k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) table[i * k + j] = (i + j) % k;
  return FiniteGroup::from_table("Z" + std::to_string(k), std::move(table), 0,
                                 FiniteGroup::Family::Cyclic, k);
}

FiniteGroup make_dihedral(unsigned k, const GroupOptions& opts) {
  if (k < 3) throw std::invalid_argument("make_dihedral: k must be >= 3");
  const std::size_t n = 2 * static_cast<std::size_t>(k);
  check_order_guard(n, opts, "make_dihedral");
  std::vector<ElemId> table(n * n);
  auto rot = [k](unsigned i) { return i % k; };
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) {
      table[i * n + j] = rot(i + j);                        // r^i r^j
      table[i * n + (k + j)] = k + rot(i + j);              // r^i (r^j F)
      table[(k + i) * n + j] = k + rot(i + k - rot(j));     // (r^i F) r^j
      table[(k + i) * n + (k + j)] = rot(i + k - rot(j));   // (r^i F)(r^j F)
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(k), std::move(table), 0,
                                 FiniteGroup::Family::Dihedral, k);
}

namespace {

struct PermUniverse {
  unsigned m = 0;
  std::vector<std::vector<std::uint8_t>> perms;  // lexicographic order
  std::vector<int> rank_by_key;                  // base-m key -> index or -1

  explicit PermUniverse(unsigned m_, bool even_only) : m(m_) {
    std::vector<std::uint8_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (even_only && !is_even(p)) continue;
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t keys = 1;
    for (unsigned i = 0; i < m; ++i) keys *= m;
    rank_by_key.assign(keys, -1);
    for (std::size_t i = 0; i < perms.size(); ++i) rank_by_key[key(perms[i])] = static_cast<int>(i);
  }

  static bool is_even(const std::vector<std::uint8_t>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
  }

  std::size_t key(const std::vector<std::uint8_t>& p) const {
    std::size_t k = 0;
    for (unsigned i = 0; i < m; ++i) k = k * m + p[i];
    return k;
  }
};

FiniteGroup make_permutation_group(unsigned m, bool even_only, const std::string& prefix,
                                   FiniteGroup::Family family, const GroupOptions& opts) {
  if (m < 1 || m > 8) throw std::invalid_argument(prefix + ": m must be in 1..8");
  PermUniverse u(m, even_only);
  const std::size_t n = u.perms.size();
  check_order_guard(n, opts, prefix);
  std::vector<ElemId> table(n * n);
  std::vector<std::uint8_t> comp(m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (unsigned x = 0; x < m; ++x) comp[x] = u.perms[a][u.perms[b][x]];
      table[a * n + b] = static_cast<ElemId>(u.rank_by_key[u.key(comp)]);
    }
  }
  return FiniteGroup::from_table(prefix + std::to_string(m), std::move(table), 0, family, m);
}

}  // namespace

FiniteGroup make_symmetric(unsigned m, const GroupOptions& opts) {
  return make_permutation_group(m, false, "S", FiniteGroup::Family::Symmetric, opts);
}

FiniteGroup make_alternating(unsigned m, const GroupOptions& opts) {
  return make_permutation_group(m, true, "A", FiniteGroup::Family::Alternating, opts);
}

FiniteGroup direct_power(const FiniteGroup& G, unsigned n, const GroupOptions& opts) {
  if (n < 1) throw std::invalid_argument("direct_power: n must be >= 1");
  const std::size_t base = G.order();
  std::size_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (order > opts.max_order / base + 1) {
      order = opts.max_order + 1;
      break;
    }
    order *= base;
  }
  check_order_guard(order, opts, "direct_power");

  std::vector<ElemId> table(order * order);
  std::vector<ElemId> da(n), db(n);
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t ra = a;
    for (unsigned i = n; i-- > 0;) {
      da[i] = static_cast<ElemId>(ra % base);
      ra /= base;
    }
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t rb = b;
      for (unsigned i = n; i-- > 0;) {
        db[i] = static_cast<ElemId>(rb % base);
        rb /= base;
      }
      std::size_t prod = 0;
      for (unsigned i = 0; i < n; ++i) prod = prod * base + G.mul(da[i], db[i]);
      table[a * order + b] = static_cast<ElemId>(prod);
    }
  }
  return FiniteGroup::from_table(G.name() + "^" + std::to_string(n), std::move(table), 0,
                                 FiniteGroup::Family::Power, n);
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& G) { return G.classes(); }
Subgroup center(const FiniteGroup& G) { return G.center(); }
std::vector<ElemId> involutions(const FiniteGroup& G) { return G.involutions(); }
std::size_t centralizer_size(const FiniteGroup& G, ElemId g) { return G.centralizer_size(g); }

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {G.identity()}); }

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<ElemId> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G, std::move(all));
}

Subgroup involution_subgroup(const FiniteGroup& G, ElemId m) {
  if (m == G.identity() || G.mul(m, m) != G.identity())
    throw std::invalid_argument("involution_subgroup: m is not an involution");
  return Subgroup(G, {G.identity(), m});
}

bool check_associativity(const FiniteGroup& G, std::size_t exhaustive_limit, int samples,
                         std::uint64_t seed) {
  const std::size_t n = G.order();
  if (n <= exhaustive_limit) {
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        for (ElemId c = 0; c < n; ++c)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
    return true;
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const ElemId a = static_cast<ElemId>(rng.below(n));
    const ElemId b = static_cast<ElemId>(rng.below(n));
    const ElemId c = static_cast<ElemId>(rng.below(n));
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
  }
  return true;
}

}  // namespace gfs
