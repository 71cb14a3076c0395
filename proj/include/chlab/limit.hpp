#pragma once

#include "chlab/model_n.hpp"
#include "chlab/model_z.hpp"

namespace chlab {

// Finite-stage stand-in for the transfinite universal-model recursion. Each
// stage (i) attaches, over every scanned strong submodel, two disjoint bare
// copies of every fresh-atom pattern up to size_bound, and (ii) runs one
// capped fulfillment round assigning fresh pairs to unfulfilled small sets.
// The duplicated copies are recorded so that "moving" automorphisms (fixing
// a submodel pointwise while pushing a set off itself) can be exhibited.
struct LimitOptions {
  std::size_t size_bound = 2;      // largest bare pattern attached per submodel
  std::size_t stage_bound = 2;
  std::size_t max_set_size = 2;    // fulfillment cap
  std::size_t submodel_scan = 16;  // how many candidate subsets to scan per stage
  std::size_t submodel_size = 2;   // candidate subset size bound
  std::uint64_t seed = 0;          // recorded; ordering is canonical regardless
  std::uint64_t max_atoms = 100000;
};

struct CopyPairRecord {
  std::size_t stage = 0;
  std::vector<Atom> base;  // the submodel the copies were attached over
  std::vector<Atom> left, right;
};

struct LimitBuildN {
  ModelN model;
  bool truncated = false;
  std::vector<CopyPairRecord> copy_pairs;
  // fulfillment blocks per stage: input set -> its fresh pair
  std::vector<std::map<HF, std::pair<Atom, Atom>>> rounds;
  std::vector<std::string> log;
};

LimitBuildN limit_stage_n(const ModelN& seed_model, const LimitOptions& opts);

struct LimitBuildZ {
  ModelZ model;
  bool truncated = false;
  std::vector<std::string> log;
};

LimitBuildZ limit_stage_z(const ModelZ& seed_model, const LimitOptions& opts);

// True when (pattern_size fresh atoms over the empty submodel) embeds
// strongly into m: some pattern_size-subset U of m's atoms has every
// assigned set not inside U keeping its image off U.
bool bare_pattern_embeds(const ModelN& m, std::size_t pattern_size);

// An automorphism of the build fixing `fixed` pointwise that moves
// every atom of `moved` off itself (outside `fixed`), constructed from the
// recorded copy pairs; nullopt when no recorded pair covers `moved`.
std::optional<Perm> moving_automorphism(const LimitBuildN& build,
                                        const std::vector<Atom>& fixed,
                                        const std::vector<Atom>& moved);

}  // namespace chlab
