#include <doctest.h>

#include <cmath>
#include <set>

#include "gfs/condition.hpp"
#include "gfs/wreath.hpp"
#include "oracles.hpp"

using namespace gfs;

namespace {

// E ln d for A5: dims {1,3,3,4,5} with Plancherel weights d^2/60.
constexpr double kA5ExpLogDim = 1.3698613130799455;

}  // namespace

TEST_CASE("plancherel distribution") {
  const CharacterTable t = character_table(make_alternating(5));
  const PlancherelDistribution p = PlancherelDistribution::from_table(t);
  double total = 0.0;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) {
    CHECK(p.probabilities[i] ==
          doctest::Approx(static_cast<double>(p.dims[i]) * p.dims[i] / 60.0).epsilon(1e-12));
    total += p.probabilities[i];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.expected_log_dim() == doctest::Approx(kA5ExpLogDim).epsilon(1e-12));
}

TEST_CASE("delta sets") {
  const FiniteGroup a5 = make_alternating(5);
  const CharacterTable ta5 = character_table(a5);
  for (ElemId mu : a5.involutions()) {
    const auto d = delta_set(ta5, mu);
    CHECK(d == std::vector<std::string>{ta5.trivial_label()});
  }

  const FiniteGroup s3 = make_symmetric(3);
  const CharacterTable ts3 = character_table(s3);
  const auto d3 = delta_set(ts3, s3.involutions().front());
  CHECK(d3.size() == 2);  // trivial and sign
  for (const std::string& l : d3) CHECK(l[0] == '1');

  const FiniteGroup z2 = make_cyclic(2);
  const CharacterTable tz2 = character_table(z2);
  CHECK(delta_set(tz2, 1).size() == 2);  // abelian: every irrep

  CHECK_THROWS_AS(delta_set(ts3, s3.identity()), std::invalid_argument);
}

TEST_CASE("condition check A5") {
  const FiniteGroup a5 = make_alternating(5);
  const CharacterTable t = character_table(a5);
  const ConditionReport rep = condition_check(t, a5.involutions().front());
  CHECK(rep.condition_holds);
  CHECK_FALSE(rep.mu_central);
  CHECK(rep.delta_mass == 1);
  CHECK(rep.group_order == 60);
  CHECK(rep.exp_log_dim == doctest::Approx(kA5ExpLogDim).epsilon(1e-12));
  CHECK(rep.gamma == doctest::Approx(kA5ExpLogDim).epsilon(1e-12));
  // Largest normalized character off Delta is |-1|/3 at the involution class.
  REQUIRE(rep.c.has_value());
  CHECK(*rep.c == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("condition check S3 fails despite non-central involution") {
  const FiniteGroup s3 = make_symmetric(3);
  const CharacterTable t = character_table(s3);
  const ElemId mu = s3.involutions().front();
  CHECK(!s3.non_central_involutions().empty());
  const ConditionReport rep = condition_check(t, mu);
  CHECK_FALSE(rep.condition_holds);
  CHECK_FALSE(rep.mu_central);
  CHECK(rep.delta_mass == 2);
  CHECK(std::exp(rep.exp_log_dim) == doctest::Approx(1.5874010519682).epsilon(1e-9));
  // The only non-Delta irrep vanishes at mu, so c is infinite.
  REQUIRE(rep.c.has_value());
  CHECK(std::isinf(*rep.c));
}

TEST_CASE("condition check central involution") {
  const FiniteGroup z2 = make_cyclic(2);
  const CharacterTable t = character_table(z2);
  const ConditionReport rep = condition_check(t, 1);
  CHECK(rep.mu_central);
  CHECK_FALSE(rep.condition_holds);
  CHECK_FALSE(rep.c.has_value());  // Delta covers the whole dual
}

TEST_CASE("condition implies delta mass below max dimension") {
  for (const FiniteGroup& G : {make_alternating(5), make_alternating(6), make_symmetric(4),
                               make_dihedral(5), make_symmetric(3)}) {
    const CharacterTable t = character_table(G);
    int max_dim = 1;
    for (const IrrepRow& r : t.irreps()) max_dim = std::max(max_dim, r.dim);
    for (ElemId mu : G.involutions()) {
      const ConditionReport rep = condition_check(t, mu);
      if (rep.condition_holds) CHECK(rep.delta_mass < max_dim);
      CHECK((rep.gamma > 0.0) == rep.condition_holds);
    }
  }
}

TEST_CASE("center criterion matches center membership") {
  for (const FiniteGroup& G : {make_symmetric(3), make_dihedral(4), make_alternating(4)}) {
    const CharacterTable t = character_table(G);
    const auto center_ids = G.center().member_ids();
    for (ElemId g = 0; g < G.order(); ++g) {
      const bool in_center = std::binary_search(center_ids.begin(), center_ids.end(), g);
      CHECK(center_criterion(t, g) == in_center);
    }
  }
  // Named cases: identity, S3 transposition, central rotation of D4.
  const FiniteGroup d4 = make_dihedral(4);
  const CharacterTable td4 = character_table(d4);
  CHECK(center_criterion(td4, d4.identity()));
  CHECK(center_criterion(td4, 2));  // r^2
  const FiniteGroup s3 = make_symmetric(3);
  const CharacterTable ts3 = character_table(s3);
  CHECK_FALSE(center_criterion(ts3, s3.involutions().front()));
}

TEST_CASE("simplicity scan") {
  CHECK(is_simple_nonabelian(make_alternating(5)));
  CHECK(is_simple_nonabelian(make_alternating(6)));
  CHECK_FALSE(is_simple_nonabelian(make_symmetric(3)));
  CHECK_FALSE(is_simple_nonabelian(make_alternating(4)));
  CHECK_FALSE(is_simple_nonabelian(make_cyclic(5)));  // abelian excluded by contract
}

TEST_CASE("verify_simple_delta") {
  CHECK(verify_simple_delta(character_table(make_alternating(5))));
  CHECK(verify_simple_delta(character_table(make_alternating(6))));
  CHECK_THROWS_AS(verify_simple_delta(character_table(make_symmetric(3))),
                  std::invalid_argument);
}

TEST_CASE("tower spectra and condition verdicts") {
  // k = 3: Delta mass 8 vs e^{216 ln2 / 128} = 2^{1.6875}; the condition fails.
  const Spectrum s3 = tower_spectrum(3);
  const ConditionReport r3 = condition_from_spectrum(s3, 0, false);
  CHECK(r3.delta_mass == 8);
  CHECK(r3.exp_log_dim == doctest::Approx(1.6875 * std::log(2.0)).epsilon(1e-12));
  CHECK_FALSE(r3.condition_holds);

  // k = 4: Delta mass 16 vs 2^{140080/32768}; the condition holds.
  const Spectrum s4 = tower_spectrum(4);
  const ConditionReport r4 = condition_from_spectrum(s4, 0, false);
  CHECK(r4.delta_mass == 16);
  CHECK(r4.exp_log_dim ==
        doctest::Approx(140080.0 / 32768.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(r4.condition_holds);
  REQUIRE(r4.c.has_value());
  CHECK(*r4.c == doctest::Approx(2.0).epsilon(1e-9));

  // Delta is exactly the one-dimensional part in both towers.
  for (const Spectrum& s : {s3, s4}) {
    const ConditionReport rep = condition_from_spectrum(s, 0, false);
    long long one_dim = 0;
    for (const SpectralLine& l : s.lines)
      if (l.dim == 1) one_dim += l.count;
    CHECK(rep.delta_mass == one_dim);
    for (const SpectralLine& l : s.lines)
      if (l.dim > 1) CHECK(std::abs(l.chi_mu) / static_cast<double>(l.dim) < 1.0 - 1e-9);
  }
}

TEST_CASE("tower spectrum agrees with the dense route at k = 3") {
  const WreathGroup w = iterated_wreath(3);
  const FiniteGroup& full = w.full_group();
  const CharacterTable t = character_table(full);
  const ConditionReport dense = condition_check(t, w.canonical_involution());
  const ConditionReport combinatorial = condition_from_spectrum(tower_spectrum(3), 0, false);
  CHECK(dense.delta_mass == combinatorial.delta_mass);
  CHECK(dense.exp_log_dim == doctest::Approx(combinatorial.exp_log_dim).epsilon(1e-10));
  CHECK(dense.condition_holds == combinatorial.condition_holds);
  // Dense route lists each one-dimensional irrep individually.
  CHECK(dense.delta_set.size() == 8);
  for (const std::string& l : dense.delta_set) CHECK(l[0] == '1');
}
