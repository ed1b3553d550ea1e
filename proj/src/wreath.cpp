#include "gfs/wreath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gfs/linalg.hpp"
#include "gfs/serialize.hpp"

namespace gfs {

WreathGroup::WreathGroup(FiniteGroup base, const GroupOptions& opts)
    : base_(std::make_shared<FiniteGroup>(std::move(base))) {
  const std::size_t m = base_->order();
  const std::size_t n = 2 * m * m;
  if (n <= opts.max_order) {
    std::vector<ElemId> table(n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        table[p * n + q] = mul(static_cast<ElemId>(p), static_cast<ElemId>(q));
    std::string name = "Z2wr(" + base_->name() + ")";
    FiniteGroup full = FiniteGroup::from_table(std::move(name), std::move(table), 0,
                                               FiniteGroup::Family::WreathZ2,
                                               static_cast<unsigned>(m));
    if (base_->family() == FiniteGroup::Family::Dihedral) {
      // (1, (F, F)) with F the designated flip of the dihedral base.
      const ElemId flip = base_->family_parameter();
      full.set_preferred_mu(encode({1, flip, flip}));
    } else {
      full.set_preferred_mu(canonical_involution());
    }
    full_ = std::make_shared<FiniteGroup>(std::move(full));
  }
}

ElemId WreathGroup::encode(const Elem& e) const {
  const std::size_t m = base_->order();
  return static_cast<ElemId>((static_cast<std::size_t>(e.x) * m + e.a) * m + e.b);
}

WreathGroup::Elem WreathGroup::decode(ElemId id) const {
  const std::size_t m = base_->order();
  Elem e;
  e.b = static_cast<ElemId>(id % m);
  id = static_cast<ElemId>(id / m);
  e.a = static_cast<ElemId>(id % m);
  e.x = static_cast<int>(id / m);
  return e;
}

ElemId WreathGroup::mul(ElemId p, ElemId q) const {
  const Elem u = decode(p), v = decode(q);
  Elem w;
  w.x = u.x ^ v.x;
  const ElemId c = u.x ? v.b : v.a;
  const ElemId d = u.x ? v.a : v.b;
  w.a = base_->mul(u.a, c);
  w.b = base_->mul(u.b, d);
  return encode(w);
}

ElemId WreathGroup::canonical_involution() const {
  return encode({1, base_->identity(), base_->identity()});
}

const FiniteGroup& WreathGroup::full_group() const {
  if (!full_)
    throw std::invalid_argument("wreath group of order " + std::to_string(order()) +
                                " exceeds the table guard; only census/spectrum analyses apply");
  return *full_;
}

WreathGroup wreath_z2(FiniteGroup base, const GroupOptions& opts) {
  return WreathGroup(std::move(base), opts);
}

WreathGroup iterated_wreath(unsigned k, const TowerOptions& opts) {
  if (k < 2) throw std::invalid_argument("iterated_wreath: k must be >= 2");
  if (k > opts.max_k)
    throw std::invalid_argument("iterated_wreath: k exceeds tower guard " +
                                std::to_string(opts.max_k));
  FiniteGroup level = make_cyclic(2, opts.group);
  for (unsigned j = 2; j < k; ++j) {
    WreathGroup w(std::move(level), opts.group);
    level = w.full_group();  // towers need every intermediate level dense
    level.set_preferred_mu(w.canonical_involution());
  }
  WreathGroup top(std::move(level), opts.group);
  return top;
}

cplx theta_character(const CharacterTable& base_table, std::size_t rho, std::size_t sigma,
                     const WreathGroup::Elem& e) {
  if (e.x == 1) return 0.0;
  return base_table.value_at_element(rho, e.a) * base_table.value_at_element(sigma, e.b) +
         base_table.value_at_element(rho, e.b) * base_table.value_at_element(sigma, e.a);
}

cplx split_theta_character(const CharacterTable& base_table, std::size_t rho, bool plus,
                           const WreathGroup::Elem& e) {
  if (e.x == 0)
    return base_table.value_at_element(rho, e.a) * base_table.value_at_element(rho, e.b);
  const cplx v = base_table.value_at_element(rho, base_table.group().mul(e.a, e.b));
  return plus ? v : -v;
}

cplx theta_inner_product(const CharacterTable& base_table, std::size_t r1, std::size_t s1,
                         std::size_t r2, std::size_t s2) {
  return base_table.inner_product(r1, r2) * base_table.inner_product(s1, s2) +
         base_table.inner_product(r1, s2) * base_table.inner_product(s1, r2);
}

ThetaRep induced_theta(const WreathGroup& W, const UnitaryIrrep& rho, const UnitaryIrrep& sigma) {
  ThetaRep t;
  t.kind = ThetaKind::Induced;
  t.rho_label = rho.label;
  t.sigma_label = sigma.label;
  const Eigen::Index block = static_cast<Eigen::Index>(rho.dim) * sigma.dim;
  t.rep.label = "theta(" + rho.label + "," + sigma.label + ")";
  t.rep.dim = static_cast<int>(2 * block);
  t.rep.mats.resize(W.order());
  for (std::size_t id = 0; id < W.order(); ++id) {
    const WreathGroup::Elem e = W.decode(static_cast<ElemId>(id));
    const Eigen::MatrixXcd upper = kron(rho.at(e.a), sigma.at(e.b));
    const Eigen::MatrixXcd lower = kron(rho.at(e.b), sigma.at(e.a));
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * block, 2 * block);
    if (e.x == 0) {
      M.topLeftCorner(block, block) = upper;
      M.bottomRightCorner(block, block) = lower;
    } else {
      M.topRightCorner(block, block) = upper;
      M.bottomLeftCorner(block, block) = lower;
    }
    t.rep.mats[id] = std::move(M);
  }
  return t;
}

std::pair<ThetaRep, ThetaRep> split_theta(const WreathGroup& W, const UnitaryIrrep& rho) {
  const Eigen::Index d = rho.dim;
  const Eigen::MatrixXcd S = swap_operator(d);
  ThetaRep plus, minus;
  plus.kind = ThetaKind::SplitPlus;
  minus.kind = ThetaKind::SplitMinus;
  plus.rho_label = minus.rho_label = rho.label;
  plus.sigma_label = minus.sigma_label = rho.label;
  plus.rep.label = "theta+(" + rho.label + ")";
  minus.rep.label = "theta-(" + rho.label + ")";
  plus.rep.dim = minus.rep.dim = static_cast<int>(d * d);
  plus.rep.mats.resize(W.order());
  minus.rep.mats.resize(W.order());
  for (std::size_t id = 0; id < W.order(); ++id) {
    const WreathGroup::Elem e = W.decode(static_cast<ElemId>(id));
    const Eigen::MatrixXcd M = kron(rho.at(e.a), rho.at(e.b));
    if (e.x == 0) {
      plus.rep.mats[id] = M;
      minus.rep.mats[id] = M;
    } else {
      plus.rep.mats[id] = M * S;
      minus.rep.mats[id] = -M * S;
    }
  }
  return {std::move(plus), std::move(minus)};
}

std::vector<ThetaRep> wreath_theta_reps(const WreathGroup& W,
                                        const std::vector<UnitaryIrrep>& base_irreps) {
  std::vector<ThetaRep> out;
  for (std::size_t r = 0; r < base_irreps.size(); ++r) {
    auto [plus, minus] = split_theta(W, base_irreps[r]);
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
  }
  for (std::size_t r = 0; r < base_irreps.size(); ++r)
    for (std::size_t s = r + 1; s < base_irreps.size(); ++s)
      out.push_back(induced_theta(W, base_irreps[r], base_irreps[s]));

  double sum_d2 = 0.0;
  for (const ThetaRep& t : out) sum_d2 += static_cast<double>(t.rep.dim) * t.rep.dim;
  if (sum_d2 != static_cast<double>(W.order()))
    throw std::runtime_error("wreath_theta_reps: census does not exhaust the group algebra");
  return out;
}

CharacterTable wreath_character_table(const WreathGroup& W, const CharacterTable& base_table) {
  const FiniteGroup& full = W.full_group();
  const auto& classes = full.classes();
  std::vector<IrrepRow> rows;

  auto add_row = [&](const std::string& label, int dim,
                     const std::function<cplx(const WreathGroup::Elem&)>& chi) {
    IrrepRow row;
    row.label = label;
    row.dim = dim;
    row.values.resize(static_cast<Eigen::Index>(classes.size()));
    for (std::size_t c = 0; c < classes.size(); ++c)
      row.values(static_cast<Eigen::Index>(c)) = chi(W.decode(classes[c].representative_id));
    rows.push_back(std::move(row));
  };

  const std::size_t r = base_table.size();
  for (std::size_t i = 0; i < r; ++i) {
    const int d = base_table.row(i).dim;
    add_row("theta+(" + base_table.row(i).label + ")", d * d,
            [&, i](const WreathGroup::Elem& e) { return split_theta_character(base_table, i, true, e); });
    add_row("theta-(" + base_table.row(i).label + ")", d * d,
            [&, i](const WreathGroup::Elem& e) { return split_theta_character(base_table, i, false, e); });
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      add_row("theta(" + base_table.row(i).label + "," + base_table.row(j).label + ")",
              2 * base_table.row(i).dim * base_table.row(j).dim,
              [&, i, j](const WreathGroup::Elem& e) { return theta_character(base_table, i, j, e); });

  return CharacterTable(full, std::move(rows));
}

long long WreathCensus::count_of(const std::string& kind, long long dim) const {
  long long acc = 0;
  for (const CensusEntry& e : entries)
    if (e.kind == kind && e.dim == dim) acc += e.count;
  return acc;
}

long long WreathCensus::one_dimensional_count() const {
  long long acc = 0;
  for (const CensusEntry& e : entries)
    if (e.dim == 1) acc += e.count;
  return acc;
}

double WreathCensus::sum_d2() const {
  double acc = 0.0;
  for (const CensusEntry& e : entries)
    acc += static_cast<double>(e.count) * static_cast<double>(e.dim) * static_cast<double>(e.dim);
  return acc;
}

std::string WreathCensus::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.field("base", base_name);
  if (order > 0)
    w.field("order", order);
  else
    w.field_null("order");
  w.field("log_order", log_order);
  w.begin_array("entries");
  for (const CensusEntry& e : entries) {
    w.begin_unkeyed_object();
    w.field("kind", e.kind);
    w.field("dim", e.dim);
    w.field("count", e.count);
    w.end_object();
  }
  w.end_array();
  w.field("sum_d2", sum_d2());
  w.field("one_dimensional_count", one_dimensional_count());
  w.end_object();
  return w.str() + "\n";
}

namespace {

WreathCensus census_from_dims(const DimMultiset& dims, const std::string& base_name,
                              double base_log_order) {
  WreathCensus census;
  census.base_name = base_name;
  census.log_order = std::log(2.0) + 2.0 * base_log_order;
  const double order = std::exp(census.log_order);
  census.order = order < 9e18 ? static_cast<long long>(std::llround(order)) : 0;

  std::map<std::pair<long long, int>, long long> acc;  // (dim, kind 0=split 1=induced)
  for (const auto& [d, c] : dims) acc[{d * d, 0}] += 2 * c;
  for (auto it1 = dims.begin(); it1 != dims.end(); ++it1) {
    acc[{2 * it1->first * it1->first, 1}] += it1->second * (it1->second - 1) / 2;
    for (auto it2 = std::next(it1); it2 != dims.end(); ++it2)
      acc[{2 * it1->first * it2->first, 1}] += it1->second * it2->second;
  }
  for (const auto& [key, count] : acc) {
    if (count == 0) continue;
    census.entries.push_back({key.second == 0 ? "split" : "induced", key.first, count});
  }
  std::sort(census.entries.begin(), census.entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return a.dim != b.dim ? a.dim < b.dim : a.kind < b.kind;
            });
  return census;
}

}  // namespace

WreathCensus wreath_census(const CharacterTable& base_table) {
  DimMultiset dims;
  for (const IrrepRow& r : base_table.irreps()) dims[r.dim] += 1;
  WreathCensus census = census_from_dims(dims, base_table.group().name(),
                                         std::log(static_cast<double>(base_table.group().order())));
  const double expected = 2.0 * base_table.group().order() * base_table.group().order();
  if (census.sum_d2() != expected)
    throw std::runtime_error("wreath_census: sum d^2 != 2|base|^2");
  return census;
}

DimMultiset tower_dims(unsigned k) {
  if (k < 1 || k > 6) throw std::invalid_argument("tower_dims: k must be in 1..6");
  DimMultiset dims{{1, 2}};  // Z2
  for (unsigned j = 2; j <= k; ++j) {
    DimMultiset next;
    for (const auto& [d, c] : dims) next[d * d] += 2 * c;
    for (auto it1 = dims.begin(); it1 != dims.end(); ++it1) {
      next[2 * it1->first * it1->first] += it1->second * (it1->second - 1) / 2;
      for (auto it2 = std::next(it1); it2 != dims.end(); ++it2)
        next[2 * it1->first * it2->first] += it1->second * it2->second;
    }
    dims.swap(next);
  }
  return dims;
}

WreathCensus tower_census(unsigned k) {
  if (k < 2) throw std::invalid_argument("tower_census: k must be >= 2");
  WreathCensus census =
      census_from_dims(tower_dims(k - 1), "Z2^wr" + std::to_string(k - 1),
                       ((1ULL << (k - 1)) - 1) * std::log(2.0));
  census.base_name = "Z2^wr" + std::to_string(k - 1);
  return census;
}

Spectrum tower_spectrum(unsigned k) {
  if (k < 2) throw std::invalid_argument("tower_spectrum: k must be >= 2");
  const DimMultiset base_dims = tower_dims(k - 1);
  Spectrum spec;
  spec.group_name = "Z2^wr" + std::to_string(k);
  spec.log_order = ((1ULL << k) - 1) * std::log(2.0);
  const double order = std::exp(spec.log_order);
  spec.order = order < 9e18 ? static_cast<long long>(std::llround(order)) : 0;

  // theta+- lines carry chi(mu) = +-d_rho at mu = (1,(e,e)); induced lines
  // vanish there.
  for (const auto& [d, c] : base_dims) {
    spec.lines.push_back({"split+:d" + std::to_string(d), d * d, cplx(static_cast<double>(d)), c});
    spec.lines.push_back({"split-:d" + std::to_string(d), d * d, cplx(-static_cast<double>(d)), c});
  }
  for (auto it1 = base_dims.begin(); it1 != base_dims.end(); ++it1) {
    const long long same = it1->second * (it1->second - 1) / 2;
    if (same > 0)
      spec.lines.push_back({"ind:d" + std::to_string(it1->first) + "x" + std::to_string(it1->first),
                            2 * it1->first * it1->first, cplx(0.0), same});
    for (auto it2 = std::next(it1); it2 != base_dims.end(); ++it2)
      spec.lines.push_back({"ind:d" + std::to_string(it1->first) + "x" + std::to_string(it2->first),
                            2 * it1->first * it2->first, cplx(0.0), it1->second * it2->second});
  }
  return spec;
}

}  // namespace gfs
