#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfs/character_table.hpp"
#include "gfs/group.hpp"

namespace gfs {

// Plancherel distribution on the irreps of a group: Pr[tau] = d_tau^2 / |G|.
struct PlancherelDistribution {
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::vector<double> probabilities;

  static PlancherelDistribution from_table(const CharacterTable& table);
  double expected_log_dim() const;
};

// Per-irrep data at a chosen involution: the dimension and the character
// value there. Everything the base-group analyses consume reduces to this,
// which lets large wreath towers be handled combinatorially without a
// multiplication table.
struct SpectralLine {
  std::string label;
  long long dim = 0;
  cplx chi_mu = 0.0;
  long long count = 1;  // multiplicity of identical lines (aggregated spectra)
};

struct Spectrum {
  std::string group_name;
  double log_order = 0.0;   // ln |G|; kept in log form for very large towers
  long long order = 0;      // 0 when too large for long long
  std::vector<SpectralLine> lines;

  double sum_d2() const;            // = |G| up to fp, by completeness
  double exp_log_dim() const;       // E_{Plancherel} ln d
  double max_log_dim() const;       // ln max d
};

Spectrum spectrum_at(const CharacterTable& table, ElemId mu);

struct ConditionReport {
  std::string group_name;
  ElemId mu_id = 0;
  bool mu_is_involution = true;
  bool mu_central = false;
  std::vector<std::string> delta_set;
  long long delta_mass = 0;       // sum of d^2 over Delta (exact integer)
  long long group_order = 0;      // delta fraction = delta_mass / group_order
  double log_group_order = 0.0;
  double delta_fraction = 0.0;
  double exp_log_dim = 0.0;
  std::optional<double> c;        // undefined when Delta covers everything;
                                  // +inf when every non-Delta character vanishes at mu
  double gamma = 0.0;             // exp_log_dim - ln(delta_mass)
  bool condition_holds = false;
  bool borderline = false;        // |delta_mass - e^{exp_log_dim}| within tolerance

  std::string to_json() const;
};

// Delta = { tau : |chi_tau(mu)/d_tau| = 1 within tolerance }. mu must be an
// involution.
std::vector<std::string> delta_set(const CharacterTable& table, ElemId mu, double tol = 1e-8);

// Evaluates the base-group condition: delta_mass < e^{E ln d}. Strict; a
// within-tolerance tie is reported as failure with the borderline flag set.
ConditionReport condition_check(const CharacterTable& table, ElemId mu, double tol = 1e-8);
ConditionReport condition_from_spectrum(const Spectrum& spec, ElemId mu_id, bool mu_central,
                                        double tol = 1e-8);

// True iff every normalized character at g has modulus 1; agrees with
// membership in the center.
bool center_criterion(const CharacterTable& table, ElemId g, double tol = 1e-8);

// For simple nonabelian G (verified by a normal-closure scan): checks that
// every involution has Delta = {trivial} and that the condition holds.
bool verify_simple_delta(const CharacterTable& table, double tol = 1e-8);

bool is_simple_nonabelian(const FiniteGroup& G);

}  // namespace gfs
