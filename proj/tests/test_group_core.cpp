#include <doctest.h>

#include <set>

#include "gfs/group.hpp"
#include "gfs/rng.hpp"
#include "gfs/serialize.hpp"
#include "oracles.hpp"

using namespace gfs;

TEST_CASE("cyclic groups") {
  const FiniteGroup z1 = make_cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.identity() == 0);

  const FiniteGroup z2 = make_cyclic(2);
  CHECK(z2.order() == 2);
  CHECK(z2.involutions() == std::vector<ElemId>{1});

  const FiniteGroup z6 = make_cyclic(6);
  CHECK(z6.center().size() == 6);  // abelian
  CHECK(oracle::center_scan(z6).size() == 6);

  const FiniteGroup z3 = make_cyclic(3);
  CHECK(z3.involutions().empty());  // odd order
}

TEST_CASE("dihedral groups") {
  CHECK_THROWS_AS(make_dihedral(2), std::invalid_argument);

  const FiniteGroup d3 = make_dihedral(3);
  CHECK(d3.order() == 6);
  CHECK(oracle::center_scan(d3) == std::vector<ElemId>{0});
  CHECK(oracle::involution_scan(d3).size() == 3);

  const FiniteGroup d5 = make_dihedral(5);
  CHECK(d5.order() == 10);
  const auto inv5 = oracle::involution_scan(d5);
  CHECK(inv5.size() == 5);
  for (ElemId m : inv5) CHECK(m >= 5);  // all flips

  const FiniteGroup d4 = make_dihedral(4);
  CHECK(oracle::center_scan(d4).size() == 2);
  CHECK(d4.center().size() == 2);
}

TEST_CASE("symmetric and alternating groups") {
  const FiniteGroup s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(oracle::conjugacy_partition(s3).size() == 3);
  CHECK(s3.classes().size() == 3);

  const FiniteGroup a4 = make_alternating(4);
  CHECK(a4.order() == 12);
  CHECK(oracle::center_scan(a4) == std::vector<ElemId>{0});

  const FiniteGroup a5 = make_alternating(5);
  CHECK(a5.order() == 60);
  CHECK(a5.classes().size() == 5);
  CHECK(oracle::conjugacy_partition(a5).size() == 5);
  CHECK(oracle::center_scan(a5) == std::vector<ElemId>{0});
  CHECK(a5.center().size() == 1);

  CHECK_THROWS_AS(make_symmetric(9), std::invalid_argument);
  CHECK_THROWS_AS(make_symmetric(7), std::invalid_argument);  // order guard at default
  GroupOptions big;
  big.max_order = 6000;
  CHECK(make_symmetric(7, big).order() == 5040);
}

TEST_CASE("direct powers") {
  const FiniteGroup s3 = make_symmetric(3);
  const FiniteGroup p1 = direct_power(s3, 1);
  CHECK(p1.order() == 6);
  for (ElemId a = 0; a < 6; ++a)
    for (ElemId b = 0; b < 6; ++b) CHECK(p1.mul(a, b) == s3.mul(a, b));

  const FiniteGroup p2 = direct_power(s3, 2);
  CHECK(p2.order() == 36);
  CHECK(p2.classes().size() == 9);  // 3^2

  const FiniteGroup z2c = direct_power(make_cyclic(2), 3);
  CHECK(z2c.order() == 8);
  for (ElemId g = 0; g < 8; ++g) CHECK(z2c.mul(g, g) == 0);  // elementary abelian

  // Diagonal class size multiplies: |[(g,g)]| = |[g]|^2.
  const FiniteGroup d3 = make_dihedral(3);
  const FiniteGroup d3p2 = direct_power(d3, 2);
  for (const ConjugacyClass& cls : d3.classes()) {
    const ElemId g = cls.representative_id;
    const ElemId gg = static_cast<ElemId>(g * d3.order() + g);
    const std::size_t diag =
        d3p2.classes()[static_cast<std::size_t>(d3p2.class_of(gg))].member_ids.size();
    CHECK(diag == cls.member_ids.size() * cls.member_ids.size());
  }
}

TEST_CASE("class equation and centralizers") {
  for (const FiniteGroup& G : {make_symmetric(4), make_dihedral(6), make_alternating(5)}) {
    std::size_t total = 0;
    for (const ConjugacyClass& cls : G.classes()) {
      total += cls.member_ids.size();
      for (ElemId g : cls.member_ids) {
        CHECK(G.centralizer_size(g) == oracle::commutation_count(G, g));
        CHECK(cls.member_ids.size() * G.centralizer_size(g) == G.order());
      }
    }
    CHECK(total == G.order());

    // g central iff its class is a singleton.
    const auto center_ids = G.center().member_ids();
    for (ElemId g = 0; g < G.order(); ++g) {
      const bool singleton =
          G.classes()[static_cast<std::size_t>(G.class_of(g))].member_ids.size() == 1;
      const bool central =
          std::binary_search(center_ids.begin(), center_ids.end(), g);
      CHECK(singleton == central);
    }
  }
}

TEST_CASE("centralizer examples") {
  const FiniteGroup s3 = make_symmetric(3);
  const auto inv = s3.involutions();  // transpositions
  REQUIRE(inv.size() == 3);
  CHECK(s3.centralizer_size(inv[0]) == 2);

  const FiniteGroup a5 = make_alternating(5);
  CHECK(a5.center().size() == 1);
}

TEST_CASE("associativity audit") {
  CHECK(check_associativity(make_symmetric(4)));
  CHECK(check_associativity(make_dihedral(15)));
  // Sampled path on a larger group.
  CHECK(check_associativity(direct_power(make_alternating(4), 2), 128));

  std::vector<ElemId> bad = {0, 1, 1, 1};  // not a group table
  CHECK_THROWS(FiniteGroup::from_table("bad", std::move(bad), 0));
}

TEST_CASE("subgroups") {
  const FiniteGroup s3 = make_symmetric(3);
  CHECK(trivial_subgroup(s3).size() == 1);
  CHECK(full_subgroup(s3).size() == 6);
  const ElemId m = s3.involutions().front();
  const Subgroup h = involution_subgroup(s3, m);
  CHECK(h.size() == 2);
  CHECK_THROWS_AS(involution_subgroup(s3, s3.identity()), std::invalid_argument);
  CHECK_THROWS_AS(Subgroup(s3, {0, 1, 2}), std::invalid_argument);  // not closed in general
}

TEST_CASE("group json round trip") {
  Rng rng(42);
  for (const FiniteGroup& G : {make_dihedral(4), make_symmetric(3), make_cyclic(5)}) {
    const std::string doc = group_to_json(G);
    const FiniteGroup back = group_from_json(doc);
    CHECK(back.order() == G.order());
    CHECK(back.identity() == G.identity());
    CHECK(back.name() == G.name());
    for (int i = 0; i < 50; ++i) {
      const ElemId a = static_cast<ElemId>(rng.below(G.order()));
      const ElemId b = static_cast<ElemId>(rng.below(G.order()));
      CHECK(back.mul(a, b) == G.mul(a, b));
    }
  }
  CHECK_THROWS(group_from_json("{\"name\": \"x\", \"order\": 1, \"mul_table\": [0], "
                               "\"identity_id\": 0, \"extra\": 1}"));
}
