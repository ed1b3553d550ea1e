#include "gfs/condition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "gfs/serialize.hpp"

namespace gfs {

PlancherelDistribution PlancherelDistribution::from_table(const CharacterTable& table) {
  PlancherelDistribution out;
  const double order = static_cast<double>(table.group().order());
  for (const IrrepRow& r : table.irreps()) {
    out.labels.push_back(r.label);
    out.dims.push_back(r.dim);
    out.probabilities.push_back(static_cast<double>(r.dim) * r.dim / order);
  }
  return out;
}

double PlancherelDistribution::expected_log_dim() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dims.size(); ++i) acc += probabilities[i] * std::log(dims[i]);
  return acc;
}

double Spectrum::sum_d2() const {
  double acc = 0.0;
  for (const SpectralLine& l : lines) acc += static_cast<double>(l.count) * l.dim * l.dim;
  return acc;
}

double Spectrum::exp_log_dim() const {
  double acc = 0.0;
  for (const SpectralLine& l : lines)
    acc += static_cast<double>(l.count) * l.dim * l.dim * std::log(static_cast<double>(l.dim));
  return acc / std::exp(log_order);
}

double Spectrum::max_log_dim() const {
  double best = 0.0;
  for (const SpectralLine& l : lines) best = std::max(best, std::log(static_cast<double>(l.dim)));
  return best;
}

Spectrum spectrum_at(const CharacterTable& table, ElemId mu) {
  Spectrum spec;
  const FiniteGroup& G = table.group();
  spec.group_name = G.name();
  spec.order = static_cast<long long>(G.order());
  spec.log_order = std::log(static_cast<double>(G.order()));
  const int cls = G.class_of(mu);
  for (const IrrepRow& r : table.irreps())
    spec.lines.push_back({r.label, r.dim, r.values(cls), 1});
  return spec;
}

std::vector<std::string> delta_set(const CharacterTable& table, ElemId mu, double tol) {
  const FiniteGroup& G = table.group();
  if (mu == G.identity() || G.mul(mu, mu) != G.identity())
    throw std::invalid_argument("delta_set: mu is not an involution");
  std::vector<std::string> out;
  const int cls = G.class_of(mu);
  for (std::size_t r = 0; r < table.size(); ++r)
    if (std::abs(table.normalized(r, cls)) >= 1.0 - tol) out.push_back(table.row(r).label);
  return out;
}

ConditionReport condition_from_spectrum(const Spectrum& spec, ElemId mu_id, bool mu_central,
                                        double tol) {
  ConditionReport rep;
  rep.group_name = spec.group_name;
  rep.mu_id = mu_id;
  rep.mu_central = mu_central;
  rep.group_order = spec.order;
  rep.log_group_order = spec.log_order;

  long long total_lines = 0;
  long long delta_lines = 0;
  double worst_non_delta = 0.0;
  for (const SpectralLine& l : spec.lines) {
    total_lines += l.count;
    const double normalized = std::abs(l.chi_mu) / static_cast<double>(l.dim);
    if (normalized >= 1.0 - tol) {
      rep.delta_set.push_back(l.label);
      delta_lines += l.count;
      rep.delta_mass += l.count * l.dim * l.dim;
    } else {
      worst_non_delta = std::max(worst_non_delta, normalized);
    }
  }
  if (worst_non_delta < 1e-12) worst_non_delta = 0.0;  // exact-zero characters

  rep.exp_log_dim = spec.exp_log_dim();
  rep.delta_fraction = static_cast<double>(rep.delta_mass) / std::exp(spec.log_order);
  rep.gamma = rep.exp_log_dim - std::log(static_cast<double>(rep.delta_mass));

  const bool delta_is_everything = delta_lines == total_lines;
  if (delta_is_everything) {
    rep.c = std::nullopt;
  } else if (worst_non_delta == 0.0) {
    rep.c = std::numeric_limits<double>::infinity();
  } else {
    rep.c = 1.0 / worst_non_delta;
  }

  const double threshold = std::exp(rep.exp_log_dim);
  rep.borderline = std::abs(static_cast<double>(rep.delta_mass) - threshold) <= tol * threshold;
  rep.condition_holds =
      !rep.borderline && static_cast<double>(rep.delta_mass) < threshold && !delta_is_everything;
  return rep;
}

ConditionReport condition_check(const CharacterTable& table, ElemId mu, double tol) {
  const FiniteGroup& G = table.group();
  if (mu == G.identity() || G.mul(mu, mu) != G.identity())
    throw std::invalid_argument("condition_check: mu is not an involution");
  const bool central =
      G.classes()[static_cast<std::size_t>(G.class_of(mu))].member_ids.size() == 1;
  ConditionReport rep = condition_from_spectrum(spectrum_at(table, mu), mu, central, tol);

  // Every one-dimensional irrep belongs to Delta; a violation indicates
  // corrupted character data.
  std::set<std::string> delta(rep.delta_set.begin(), rep.delta_set.end());
  for (const IrrepRow& r : table.irreps())
    if (r.dim == 1 && !delta.count(r.label))
      throw std::runtime_error("condition_check: one-dimensional irrep outside Delta");
  return rep;
}

bool center_criterion(const CharacterTable& table, ElemId g, double tol) {
  const int cls = table.group().class_of(g);
  for (std::size_t r = 0; r < table.size(); ++r)
    if (std::abs(table.normalized(r, cls)) < 1.0 - tol) return false;
  return true;
}

bool is_simple_nonabelian(const FiniteGroup& G) {
  if (G.is_abelian() || G.order() == 1) return false;
  // Normal closure of each nontrivial class must be the whole group. The
  // generating set is conjugation-closed, so the product closure is already
  // a normal subgroup.
  for (const ConjugacyClass& cls : G.classes()) {
    if (cls.member_ids.size() == 1 && cls.member_ids[0] == G.identity()) continue;
    std::vector<bool> in(G.order(), false);
    std::vector<ElemId> members;
    auto add = [&](ElemId g) {
      if (!in[g]) {
        in[g] = true;
        members.push_back(g);
      }
    };
    add(G.identity());
    for (ElemId m : cls.member_ids) add(m);
    std::size_t frontier_start = 0;
    while (frontier_start < members.size() && members.size() < G.order()) {
      const std::size_t frontier_end = members.size();
      for (std::size_t i = frontier_start; i < frontier_end; ++i)
        for (std::size_t j = 0; j < frontier_end && members.size() < G.order(); ++j) {
          add(G.mul(members[i], members[j]));
          add(G.mul(members[j], members[i]));
        }
      frontier_start = frontier_end;
    }
    if (members.size() != G.order()) return false;  // proper normal subgroup found
  }
  return true;
}

bool verify_simple_delta(const CharacterTable& table, double tol) {
  const FiniteGroup& G = table.group();
  if (!is_simple_nonabelian(G))
    throw std::invalid_argument("verify_simple_delta: " + G.name() + " is not simple nonabelian");
  const std::string trivial = table.trivial_label();
  for (ElemId mu : G.involutions()) {
    const std::vector<std::string> d = delta_set(table, mu, tol);
    if (d.size() != 1 || d[0] != trivial) return false;
    if (!condition_check(table, mu, tol).condition_holds) return false;
  }
  return !G.involutions().empty();
}

std::string ConditionReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.field("group", group_name);
  w.field("group_order", group_order);
  w.field("mu_id", static_cast<long long>(mu_id));
  w.field("mu_central", mu_central);
  w.begin_array("delta_set");
  for (const std::string& l : delta_set) w.element(l);
  w.end_array();
  w.field("delta_mass", delta_mass);
  w.field_raw("delta_fraction", "[" + std::to_string(delta_mass) + ", " +
                                    std::to_string(group_order) + "]");
  w.field("exp_log_dim", exp_log_dim);
  if (!c.has_value())
    w.field_null("c");
  else if (std::isinf(*c))
    w.field("c", std::string("inf"));
  else
    w.field("c", *c);
  w.field("gamma", gamma);
  w.field("condition_holds", condition_holds);
  w.field("borderline", borderline);
  w.end_object();
  return w.str() + "\n";
}

}  // namespace gfs
