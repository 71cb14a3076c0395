#pragma once

#include <optional>
#include <set>

#include "chlab/errors.hpp"
#include "chlab/perm.hpp"
#include "chlab/rn.hpp"

namespace chlab {

// A structured description of a permutation group over a finite truncation
// of an atom universe.
struct GroupSpec {
  enum class Kind { FreeSymmetric, RCTriples, RNTower, RZOrdered, Generated };

  Kind kind = Kind::FreeSymmetric;
  std::vector<Atom> universe;     // FreeSymmetric atoms / RZOrdered window / Generated universe
  std::int64_t rc_triples = 0;
  std::int64_t rn_base = 0;
  std::int64_t rn_depth = 0;
  std::vector<Perm> generators;   // Generated
  std::size_t closure_bound = 20000;

  static GroupSpec free_symmetric(std::vector<Atom> atoms);
  static GroupSpec rc_triples_spec(std::int64_t triples);
  static GroupSpec rn_tower_spec(std::int64_t base, std::int64_t depth);
  static GroupSpec rz_ordered_spec(std::vector<Atom> window);
  static GroupSpec generated(std::vector<Perm> gens, std::vector<Atom> universe);

  std::vector<Atom> universe_atoms() const;
  bool member(const Perm& p) const;
  const char* kind_name() const;
};

struct GeneratorSet {
  std::vector<Perm> gens;
  // True when the generators provably generate the full truncated Fix-group;
  // false when a closure bound intervened.
  bool complete = true;
};

// Generators (within the truncation) of the subgroup fixing E pointwise.
GeneratorSet fix_generators(const GroupSpec& spec, const std::vector<Atom>& E);

struct SupportClaim {
  std::vector<Atom> E;
  HF object;
};

enum class Verdict { Holds, Fails, Inconclusive };

struct SupportResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Perm> witness;  // moves the object, fixes E pointwise
};

SupportResult is_support(const SupportClaim& claim, const GroupSpec& spec);

// Thrown when an orbit exceeds its size bound; carries the partial orbit.
struct OrbitOverflow : ResourceError {
  OrbitOverflow(std::set<HF> partial, std::size_t bound)
      : ResourceError("orbit exceeds size bound", bound), partial(std::move(partial)) {}
  std::set<HF> partial;
};

// Fix(E)-orbit of x under the truncated group.
std::set<HF> orbit(const HF& x, const GroupSpec& spec, const std::vector<Atom>& E,
                   std::size_t max_size = 100000);

// Products of generators, breadth-first, up to `bound` distinct elements
// (identity included). Second component reports whether the closure finished.
std::pair<std::vector<Perm>, bool> close_group(const std::vector<Perm>& gens,
                                               std::size_t bound);

}  // namespace chlab
