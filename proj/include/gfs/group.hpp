#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfs {

using ElemId = std::uint32_t;

struct GroupOptions {
  // Largest order for which a dense multiplication table is materialized.
  std::size_t max_order = 4096;
};

struct ConjugacyClass {
  ElemId representative_id = 0;
  std::vector<ElemId> member_ids;  // sorted ascending
};

class FiniteGroup;

// Subgroup given by its sorted member set. The constructor verifies closure,
// identity membership and inverses.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<ElemId> member_ids);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<ElemId>& member_ids() const { return member_ids_; }
  std::size_t size() const { return member_ids_.size(); }
  bool contains(ElemId g) const;

 private:
  const FiniteGroup* parent_;
  std::vector<ElemId> member_ids_;
};

// A finite group stored as a dense multiplication table over element ids
// 0..order-1. Conjugacy classes, inverses and the center are derived once at
// construction; instances are immutable afterwards and safe to share across
// threads.
//
// Element enumeration is canonical per constructor (see the factory
// functions) so ids are stable across runs.
class FiniteGroup {
 public:
  enum class Family { Generic, Cyclic, Dihedral, Symmetric, Alternating, Power, WreathZ2 };

  // table is row-major: table[a * order + b] = a*b.
  static FiniteGroup from_table(std::string name, std::vector<ElemId> table,
                                ElemId identity_id, Family family = Family::Generic,
                                unsigned family_parameter = 0);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  ElemId identity() const { return identity_; }
  ElemId mul(ElemId a, ElemId b) const { return table_[a * order_ + b]; }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId conjugate(ElemId x, ElemId g) const { return mul(mul(x, g), inv(x)); }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(ElemId g) const { return class_of_[g]; }
  const std::vector<ElemId>& table() const { return table_; }

  Subgroup center() const;
  bool is_abelian() const { return center_ids_.size() == order_; }

  // Involutions exclude the identity.
  std::vector<ElemId> involutions() const;
  std::vector<ElemId> non_central_involutions() const;

  // Number of elements commuting with g, by direct commutation count.
  std::size_t centralizer_size(ElemId g) const;

  Family family() const { return family_; }
  unsigned family_parameter() const { return family_parameter_; }

  // Preferred involution for analyses that need one: constructors of wreath
  // products record their canonical choice here; otherwise the smallest
  // non-central involution id is used.
  std::optional<ElemId> preferred_mu() const { return preferred_mu_; }
  void set_preferred_mu(ElemId mu) { preferred_mu_ = mu; }
  ElemId default_mu() const;

 private:
  FiniteGroup() = default;
  void finalize();

  std::string name_;
  std::size_t order_ = 0;
  ElemId identity_ = 0;
  std::vector<ElemId> table_;
  std::vector<ElemId> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<ElemId> center_ids_;
  Family family_ = Family::Generic;
  unsigned family_parameter_ = 0;
  std::optional<ElemId> preferred_mu_;
};

// Cyclic group of order k; element i is the i-th power of the generator.
FiniteGroup make_cyclic(unsigned k, const GroupOptions& opts = {});

// Dihedral group of order 2k (k >= 3). Ids 0..k-1 are rotations r^i, ids
// k..2k-1 are the flips r^i * F where F is the designated flip (id k).
FiniteGroup make_dihedral(unsigned k, const GroupOptions& opts = {});

// Symmetric / alternating groups on m points (m <= 8). Elements are the
// permutations in lexicographic order of their image tuples; composition is
// (p*q)(x) = p(q(x)).
FiniteGroup make_symmetric(unsigned m, const GroupOptions& opts = {});
FiniteGroup make_alternating(unsigned m, const GroupOptions& opts = {});

// Componentwise product G^n. Ids are mixed-radix over the factors with the
// first factor most significant.
FiniteGroup direct_power(const FiniteGroup& G, unsigned n, const GroupOptions& opts = {});

// Free helpers mirroring the member accessors.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& G);
Subgroup center(const FiniteGroup& G);
std::vector<ElemId> involutions(const FiniteGroup& G);
std::size_t centralizer_size(const FiniteGroup& G, ElemId g);

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
// {1, m} for an involution m.
Subgroup involution_subgroup(const FiniteGroup& G, ElemId m);

// Associativity audit: exhaustive up to exhaustive_limit, random triples
// above it. Returns false on the first violation.
bool check_associativity(const FiniteGroup& G, std::size_t exhaustive_limit = 512,
                         int samples = 20000, std::uint64_t seed = 1);

}  // namespace gfs
