#include <random>

#include "chlab/errors.hpp"
#include "chlab/group.hpp"
#include "doctest.h"

using namespace chlab;

namespace {

rn::TowerPerm random_element(const std::vector<rn::TowerPerm>& all, std::mt19937_64& rng) {
  return all[rng() % all.size()];
}

}  // namespace

TEST_CASE("tower build sizes") {
  auto u0 = rn::build(2, 0);
  CHECK(u0.size() == 2);
  CHECK(u0.levels[0][0] == Atom::base(0));

  // A_0 = {b}, level 1 tuples of length 0..1: <>, <b>, each with two bits
  auto u1 = rn::build(1, 1);
  CHECK(u1.size() == 5);

  for (std::int64_t depth = 0; depth <= 2; ++depth) {
    auto u = rn::build(2, depth);
    CHECK(u.size() == rn::expected_size(2, depth));
  }
  CHECK(rn::expected_size(2, 1) == 8);
  CHECK(rn::expected_size(2, 2) == 8 + 2 * (1 + 8 + 64));

  CHECK_THROWS_AS(rn::build(2, 2, 10), ResourceError);
  try {
    rn::build(2, 2, 10);
  } catch (const ResourceError& e) {
    CHECK(e.computed_size > 10);
  }
}

TEST_CASE("tower action basics") {
  auto u = rn::build(2, 1);
  rn::TowerPerm id;
  for (const auto& a : u.all()) CHECK(id.apply(a) == a);

  // flip the bit of tuple <b0> at level 1, base untouched
  Atom key = Atom::rn_tuple(1, {Atom::base(0)}, 0);
  rn::TowerPerm flip({}, {{key, 1}});
  CHECK(flip.apply(Atom::rn_tuple(1, {Atom::base(0)}, 0)) ==
        Atom::rn_tuple(1, {Atom::base(0)}, 1));
  CHECK(flip.apply(Atom::rn_tuple(1, {Atom::base(0)}, 1)) ==
        Atom::rn_tuple(1, {Atom::base(0)}, 0));
  CHECK(flip.apply(Atom::base(0)) == Atom::base(0));
  CHECK(flip.apply(Atom::rn_tuple(1, {Atom::base(1)}, 0)) ==
        Atom::rn_tuple(1, {Atom::base(1)}, 0));

  // base swap pushes through tuple components
  rn::TowerPerm swap({{0, 1}, {1, 0}}, {});
  CHECK(swap.apply(Atom::rn_tuple(1, {Atom::base(0)}, 1)) ==
        Atom::rn_tuple(1, {Atom::base(1)}, 1));
}

TEST_CASE("tower group laws on base 2 depth 1") {
  auto u = rn::build(2, 1);
  auto all = rn::all_elements(u);
  CHECK(all.size() == 2 * 8);  // two base perms, three tuple flip bits

  auto atoms = u.all();
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    auto sigma = random_element(all, rng);
    auto rho = random_element(all, rng);
    auto comp = sigma.compose(rho);
    for (const auto& a : atoms) CHECK(comp.apply(a) == sigma.apply(rho.apply(a)));
  }
  for (const auto& sigma : all) {
    auto materialized = sigma.to_perm(u);
    for (const auto& a : atoms) CHECK(materialized.apply(a) == sigma.apply(a));
  }
}

TEST_CASE("support closure and fix generators") {
  auto u = rn::build(2, 1);
  Atom t0 = Atom::rn_tuple(1, {Atom::base(0)}, 0);
  Atom t1 = Atom::rn_tuple(1, {Atom::base(0)}, 1);

  auto closed = rn::support_closure({t1});
  CHECK(closed.count(t0) == 1);          // flip partner
  CHECK(closed.count(Atom::base(0)));    // component

  auto gens = rn::fix_generators(u, {t1});
  for (const auto& g : gens) {
    CHECK_FALSE(g.moves(t0));
    CHECK_FALSE(g.moves(t1));
    CHECK_FALSE(g.moves(Atom::base(0)));
    CHECK(GroupSpec::rn_tower_spec(2, 1).member(g));
  }
  // the free tuples <> and <b1> still flip
  bool some_flip = false;
  for (const auto& g : gens)
    if (g.moves(Atom::rn_tuple(1, {Atom::base(1)}, 0))) some_flip = true;
  CHECK(some_flip);
}
