#pragma once

#include <map>
#include <optional>

#include "chlab/perm.hpp"

namespace chlab {

// The flip-tower atom model. Level 0 is a plain finite set of base atoms;
// level n+1 adjoins an atom (n+1, p, eps) for every tuple p over the previous
// level of length 0..n+1 and each bit eps. Admissible permutations act on the
// base, push through tuples componentwise, and may flip the bit of each tuple
// independently.
namespace rn {

struct Universe {
  std::int64_t base_size = 0;
  std::int64_t depth = 0;
  std::vector<std::vector<Atom>> levels;  // levels[l] = atoms created at level l

  std::vector<Atom> all() const;
  std::size_t size() const;
};

// Builds the full tower. Throws ResourceError (carrying the computed size)
// when the universe would exceed max_atoms.
Universe build(std::int64_t base_size, std::int64_t depth,
               std::uint64_t max_atoms = 2'000'000);

// Expected |A_depth| by the size recurrence, without materializing.
std::uint64_t expected_size(std::int64_t base_size, std::int64_t depth,
                            std::uint64_t cap = UINT64_MAX);

// A tower permutation: a base permutation plus one flip bit per tuple,
// finitely supported. Flip keys are the tuple atoms with their bit cleared.
class TowerPerm {
 public:
  TowerPerm() = default;
  TowerPerm(std::map<std::int64_t, std::int64_t> base, std::map<Atom, int> flips);

  Atom apply(const Atom& a) const;
  HF act(const HF& x) const;
  TowerPerm compose(const TowerPerm& inner) const;  // this ∘ inner
  bool is_identity() const;

  const std::map<std::int64_t, std::int64_t>& base() const { return base_; }
  const std::map<Atom, int>& flips() const { return flips_; }

  // materialize over a finite universe
  Perm to_perm(const Universe& u) const;

 private:
  std::map<std::int64_t, std::int64_t> base_;  // base id -> base id, bijective
  std::map<Atom, int> flips_;                  // tuple key -> bit (1 entries only)
};

// Canonical flip key of a tuple atom: same level and components, bit 0.
Atom flip_key(const Atom& tuple_atom);

// Every group element over the given universe (for small towers).
std::vector<TowerPerm> all_elements(const Universe& u, std::size_t max_count = 100000);

// Closure of E under tuple components and flip partners.
std::set<Atom> support_closure(const std::set<Atom>& e);

// Generators of the subgroup fixing E pointwise, materialized over u:
// transpositions of base atoms off the closure of E, and single flips of
// tuples off the closure.
std::vector<Perm> fix_generators(const Universe& u, const std::vector<Atom>& e);

}  // namespace rn
}  // namespace chlab
