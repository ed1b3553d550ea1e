#include <doctest.h>

#include <map>

#include "gfs/rng.hpp"
#include "gfs/wreath.hpp"
#include "oracles.hpp"

using namespace gfs;

TEST_CASE("wreath product rule") {
  const WreathGroup w = wreath_z2(make_dihedral(3));
  const FiniteGroup& base = w.base();
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const ElemId a = static_cast<ElemId>(rng.below(base.order()));
    const ElemId b = static_cast<ElemId>(rng.below(base.order()));
    const ElemId c = static_cast<ElemId>(rng.below(base.order()));
    const ElemId d = static_cast<ElemId>(rng.below(base.order()));
    // (1,(a,b)) o (0,(c,d)) = (1,(ad,bc))
    const ElemId p = w.mul(w.encode({1, a, b}), w.encode({0, c, d}));
    const WreathGroup::Elem pe = w.decode(p);
    CHECK(pe.x == 1);
    CHECK(pe.a == base.mul(a, d));
    CHECK(pe.b == base.mul(b, c));
    // (0,(a,b)) o (0,(c,d)) = (0,(ac,bd))
    const WreathGroup::Elem qe = w.decode(w.mul(w.encode({0, a, b}), w.encode({0, c, d})));
    CHECK(qe.x == 0);
    CHECK(qe.a == base.mul(a, c));
    CHECK(qe.b == base.mul(b, d));
  }
}

TEST_CASE("wreath of Z2 is the order-8 group with one 2-dim irrep") {
  const WreathGroup w = wreath_z2(make_cyclic(2));
  CHECK(w.order() == 8);
  const FiniteGroup& full = w.full_group();
  CHECK(check_associativity(full));
  const CharacterTable t = character_table(full);
  std::multiset<int> dims;
  for (const IrrepRow& r : t.irreps()) dims.insert(r.dim);
  CHECK(dims == std::multiset<int>{1, 1, 1, 1, 2});

  const WreathCensus census = wreath_census(character_table(w.base()));
  CHECK(census.count_of("split", 1) == 4);
  CHECK(census.count_of("induced", 2) == 1);
  CHECK(census.sum_d2() == 8.0);
}

TEST_CASE("even half is an index-2 subgroup") {
  const WreathGroup w = wreath_z2(make_dihedral(3));
  const FiniteGroup& full = w.full_group();
  std::vector<ElemId> even;
  for (ElemId id = 0; id < full.order() / 2; ++id) even.push_back(id);
  const Subgroup h(full, even);  // constructor verifies closure
  CHECK(h.size() * 2 == full.order());
}

TEST_CASE("iterated towers") {
  CHECK(iterated_wreath(2).order() == 8);
  const WreathGroup w3 = iterated_wreath(3);
  CHECK(w3.order() == 128);
  CHECK(w3.has_full_group());

  const WreathGroup w4 = iterated_wreath(4);
  CHECK(w4.order() == 32768);
  CHECK_FALSE(w4.has_full_group());
  CHECK_THROWS_AS(w4.full_group(), std::invalid_argument);
  CHECK(w4.base().order() == 128);

  CHECK_THROWS_AS(iterated_wreath(5), std::invalid_argument);  // tower guard

  // mu = (1,(e,e)) is a non-central involution for k >= 2.
  for (unsigned k : {2u, 3u}) {
    const WreathGroup w = iterated_wreath(k);
    const FiniteGroup& full = w.full_group();
    const ElemId mu = w.canonical_involution();
    CHECK(full.mul(mu, mu) == full.identity());
    CHECK(full.classes()[static_cast<std::size_t>(full.class_of(mu))].member_ids.size() > 1);
  }
}

TEST_CASE("theta characters against explicit induced matrices") {
  const FiniteGroup d3 = make_dihedral(3);
  const CharacterTable base_table = character_table(d3);
  const auto base_irreps = unitary_irreps(base_table);
  const WreathGroup w = wreath_z2(d3);

  Rng rng(5);
  for (std::size_t r = 0; r < base_irreps.size(); ++r) {
    for (std::size_t s = 0; s < base_irreps.size(); ++s) {
      if (r == s) continue;
      const ThetaRep theta = induced_theta(w, base_irreps[r], base_irreps[s]);
      CHECK(theta.rep.dim == 2 * base_irreps[r].dim * base_irreps[s].dim);
      for (int i = 0; i < 200; ++i) {
        const ElemId id = static_cast<ElemId>(rng.below(w.order()));
        const cplx from_formula = theta_character(base_table, r, s, w.decode(id));
        CHECK(std::abs(theta.rep.at(id).trace() - from_formula) < 1e-9);
      }
      // Any rho,sigma at x = 1 has trace 0.
      const ElemId odd = w.encode({1, 1, 2});
      CHECK(std::abs(theta.rep.at(odd).trace()) < 1e-9);
    }
  }

  // rho = sigma = trivial at (0,(a,b)) gives 2.
  const std::size_t triv = static_cast<std::size_t>(base_table.index_of(base_table.trivial_label()));
  CHECK(theta_character(base_table, triv, triv, {0, 2, 4}) == cplx(2.0));
}

TEST_CASE("theta matrices are homomorphic unitaries") {
  const FiniteGroup d3 = make_dihedral(3);
  const CharacterTable base_table = character_table(d3);
  const auto base_irreps = unitary_irreps(base_table);
  const WreathGroup w = wreath_z2(d3);
  const FiniteGroup& full = w.full_group();

  Rng rng(17);
  for (const ThetaRep& t : wreath_theta_reps(w, base_irreps)) {
    CHECK(unitarity_residual(t.rep) < 1e-10);
    for (int i = 0; i < 200; ++i) {
      const ElemId p = static_cast<ElemId>(rng.below(full.order()));
      const ElemId q = static_cast<ElemId>(rng.below(full.order()));
      CHECK((t.rep.at(full.mul(p, q)) - t.rep.at(p) * t.rep.at(q)).cwiseAbs().maxCoeff() <
            1e-9);
    }
  }
}

TEST_CASE("theta inner products") {
  const CharacterTable base_table = character_table(make_dihedral(5));
  const std::size_t r = static_cast<std::size_t>(base_table.index_of("1a"));
  const std::size_t s = static_cast<std::size_t>(base_table.index_of("2a"));
  const std::size_t s2 = static_cast<std::size_t>(base_table.index_of("2b"));

  CHECK(std::abs(theta_inner_product(base_table, r, s, r, s) - cplx(1.0)) < 1e-9);   // irreducible
  CHECK(std::abs(theta_inner_product(base_table, s, s, s, s) - cplx(2.0)) < 1e-9);   // splits
  CHECK(std::abs(theta_inner_product(base_table, r, s, s, r) - cplx(1.0)) < 1e-9);   // symmetric
  CHECK(std::abs(theta_inner_product(base_table, r, s, r, s2)) < 1e-9);              // disjoint
}

TEST_CASE("split theta characters") {
  const FiniteGroup d3 = make_dihedral(3);
  const CharacterTable base_table = character_table(d3);
  const auto base_irreps = unitary_irreps(base_table);
  const WreathGroup w = wreath_z2(d3);
  const std::size_t two = static_cast<std::size_t>(base_table.index_of("2a"));
  const UnitaryIrrep& rho = base_irreps[two];

  const auto [plus, minus] = split_theta(w, rho);
  CHECK(plus.rep.dim == rho.dim * rho.dim);
  CHECK(unitarity_residual(plus.rep) < 1e-10);
  CHECK(unitarity_residual(minus.rep) < 1e-10);

  for (ElemId id = 0; id < w.order(); ++id) {
    const WreathGroup::Elem e = w.decode(id);
    const cplx tp = plus.rep.at(id).trace();
    const cplx tm = minus.rep.at(id).trace();
    if (e.x == 0) {
      const cplx expected =
          base_table.value_at_element(two, e.a) * base_table.value_at_element(two, e.b);
      CHECK(std::abs(tp - expected) < 1e-9);
      CHECK(std::abs(tm - expected) < 1e-9);
    } else {
      const cplx ab = base_table.value_at_element(two, d3.mul(e.a, e.b));
      CHECK(std::abs(tp - ab) < 1e-9);
      CHECK(std::abs(tm + ab) < 1e-9);
      // Normalized character on the swapped half is at most 1/d_rho.
      CHECK(std::abs(tp) / (rho.dim * rho.dim) <= 1.0 / rho.dim + 1e-9);
    }
  }
}

TEST_CASE("theta table matches the generic character table") {
  // Z3 exercises complex base characters.
  for (FiniteGroup base : {make_cyclic(2), make_dihedral(3), make_cyclic(3)}) {
    const CharacterTable base_table = character_table(base);
    const WreathGroup w = wreath_z2(std::move(base));
    const CharacterTable theta_table = wreath_character_table(w, base_table);
    const CharacterTable generic = character_table(w.full_group());
    REQUIRE(theta_table.size() == generic.size());

    auto rows_of = [](const CharacterTable& t) {
      std::vector<std::vector<cplx>> rows;
      for (const IrrepRow& r : t.irreps()) {
        std::vector<cplx> row;
        for (Eigen::Index i = 0; i < r.values.size(); ++i) row.push_back(r.values(i));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    CHECK(oracle::row_multiset(rows_of(theta_table)) == oracle::row_multiset(rows_of(generic)));
    CHECK(theta_table.row_orthogonality_residual() < 1e-8);
  }
}

TEST_CASE("census golden lists") {
  // Z2 wr D5, the odd-k dihedral family at k = 5.
  const WreathCensus d5 = wreath_census(character_table(make_dihedral(5)));
  CHECK(d5.count_of("split", 1) == 4);
  CHECK(d5.count_of("induced", 2) == 1);
  CHECK(d5.count_of("induced", 4) == 4);
  CHECK(d5.count_of("split", 4) == 4);
  CHECK(d5.count_of("induced", 8) == 1);
  CHECK(d5.sum_d2() == 200.0);

  // Z2 wr Z2^{wr 2} = Z2^{wr 3}.
  const WreathCensus t3 = tower_census(3);
  CHECK(t3.count_of("split", 1) == 8);
  CHECK(t3.count_of("induced", 2) == 6);
  CHECK(t3.count_of("induced", 4) == 4);
  CHECK(t3.count_of("split", 4) == 2);
  CHECK(t3.sum_d2() == 128.0);

  // The tower census matches the census computed from the dense base table.
  const WreathGroup w2 = iterated_wreath(2);
  const WreathCensus via_dense = wreath_census(character_table(w2.full_group()));
  CHECK(via_dense.count_of("split", 1) == t3.count_of("split", 1));
  CHECK(via_dense.count_of("induced", 2) == t3.count_of("induced", 2));
  CHECK(via_dense.count_of("induced", 4) == t3.count_of("induced", 4));
  CHECK(via_dense.count_of("split", 4) == t3.count_of("split", 4));
}

TEST_CASE("census exhausts the group algebra and 1-dims double") {
  for (unsigned k : {3u, 4u, 5u}) {
    const WreathCensus census = tower_census(k);
    CHECK(census.log_order == doctest::Approx(((1ULL << k) - 1) * std::log(2.0)).epsilon(1e-12));
    double sum = 0.0;
    for (const CensusEntry& e : census.entries)
      sum += static_cast<double>(e.count) * e.dim * e.dim;
    CHECK(sum == doctest::Approx(std::exp(census.log_order)).epsilon(1e-9));
  }
  CHECK(tower_census(3).one_dimensional_count() == 2 * tower_census(2).one_dimensional_count());
  CHECK(tower_census(4).one_dimensional_count() == 2 * tower_census(3).one_dimensional_count());
  CHECK(tower_census(5).one_dimensional_count() == 2 * tower_census(4).one_dimensional_count());
}

TEST_CASE("census json") {
  const std::string doc = tower_census(3).to_json();
  CHECK(doc.find("\"entries\"") != std::string::npos);
  CHECK(doc.find("\"sum_d2\"") != std::string::npos);
}
