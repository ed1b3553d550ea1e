#pragma once

#include <map>
#include <memory>
#include <utility>

#include "gfs/condition.hpp"
#include "gfs/irreps.hpp"

namespace gfs {

// Z2 wr G realized as Z2 |x (G x G) with the flip-flop action: elements are
// triples (x, a, b) with
//
//   (x, (a,b)) o (0, (c,d)) = (x, (ac, bd))
//   (x, (a,b)) o (1, (c,d)) = (x+1, (ad, bc))   [second pair swapped first]
//
// i.e. (x,(a,b)) o (y,(c,d)) applies the swap to (c,d) when x = 1. Element id
// = x * |B|^2 + a * |B| + b, so the identity is id 0 and {0} x (B x B) is the
// even half 0 .. |B|^2-1.
class WreathGroup {
 public:
  struct Elem {
    int x = 0;
    ElemId a = 0;
    ElemId b = 0;
  };

  WreathGroup(FiniteGroup base, const GroupOptions& opts);

  const FiniteGroup& base() const { return *base_; }
  std::size_t order() const { return 2 * base_->order() * base_->order(); }

  ElemId encode(const Elem& e) const;
  Elem decode(ElemId id) const;
  ElemId mul(ElemId p, ElemId q) const;

  // (1, (e, e)); an involution, outside the center whenever |base| > 1.
  ElemId canonical_involution() const;

  bool has_full_group() const { return full_ != nullptr; }
  // Dense FiniteGroup view; throws when the order exceeds the table guard.
  const FiniteGroup& full_group() const;

 private:
  std::shared_ptr<FiniteGroup> base_;
  std::shared_ptr<FiniteGroup> full_;
};

WreathGroup wreath_z2(FiniteGroup base, const GroupOptions& opts = {});

// Z2^{wr k}: W_1 = Z2, W_j = Z2 wr W_{j-1}. Guarded at k <= 4 by default
// (order 2^(2^k - 1)); the k = 4 instance keeps only its base materialized.
struct TowerOptions {
  unsigned max_k = 4;
  GroupOptions group;
};
WreathGroup iterated_wreath(unsigned k, const TowerOptions& opts = {});

enum class ThetaKind { Induced, SplitPlus, SplitMinus };

struct ThetaRep {
  ThetaKind kind = ThetaKind::Induced;
  std::string rho_label;
  std::string sigma_label;  // equals rho_label for the split pair
  UnitaryIrrep rep;         // matrices indexed by wreath element id
};

// Character of theta_{rho,sigma} (induced) at a wreath element, directly from
// base characters: 0 on the x = 1 half, chi_rho(a) chi_sigma(b) +
// chi_rho(b) chi_sigma(a) on the x = 0 half.
cplx theta_character(const CharacterTable& base_table, std::size_t rho, std::size_t sigma,
                     const WreathGroup::Elem& e);

// Character of theta+-_{rho,rho} at a wreath element: chi_rho(a) chi_rho(b)
// on x = 0, +-chi_rho(ab) on x = 1.
cplx split_theta_character(const CharacterTable& base_table, std::size_t rho, bool plus,
                           const WreathGroup::Elem& e);

// <theta_{r1,s1}, theta_{r2,s2}> = <r1,r2><s1,s2> + <r1,s2><s1,r2>.
cplx theta_inner_product(const CharacterTable& base_table, std::size_t r1, std::size_t s1,
                         std::size_t r2, std::size_t s2);

// Explicit unitary matrices. Induced theta acts on two blocks of
// rho (x) sigma; x = 0 is block-diagonal, x = 1 swaps the blocks. The split
// pair acts on rho (x) rho with the swap operator (negated for theta-).
ThetaRep induced_theta(const WreathGroup& W, const UnitaryIrrep& rho, const UnitaryIrrep& sigma);
std::pair<ThetaRep, ThetaRep> split_theta(const WreathGroup& W, const UnitaryIrrep& rho);

// All irreps of the wreath group as ThetaReps (requires base irrep matrices).
std::vector<ThetaRep> wreath_theta_reps(const WreathGroup& W,
                                        const std::vector<UnitaryIrrep>& base_irreps);

// Character table of the materialized wreath group assembled from the theta
// character formulas (labels carry the construction).
CharacterTable wreath_character_table(const WreathGroup& W, const CharacterTable& base_table);

struct CensusEntry {
  std::string kind;  // "induced" | "split"
  long long dim = 0;
  long long count = 0;
};

struct WreathCensus {
  std::string base_name;
  double log_order = 0.0;
  long long order = 0;  // 0 when it does not fit a long long
  std::vector<CensusEntry> entries;

  long long count_of(const std::string& kind, long long dim) const;
  long long one_dimensional_count() const;
  double sum_d2() const;
  std::string to_json() const;
};

// Irrep census of Z2 wr base keyed by (construction kind, dimension),
// computed from base dimensions alone.
WreathCensus wreath_census(const CharacterTable& base_table);

// Tower analogues that never materialize a table (k up to ~6).
using DimMultiset = std::map<long long, long long>;  // dim -> count
DimMultiset tower_dims(unsigned k);
WreathCensus tower_census(unsigned k);
// Spectrum of Z2^{wr k} at the canonical involution (1, (e, e)).
Spectrum tower_spectrum(unsigned k);

}  // namespace gfs
