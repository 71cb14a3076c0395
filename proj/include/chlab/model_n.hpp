#pragma once

#include <map>
#include <optional>

#include "chlab/perm.hpp"

namespace chlab {

// A finite truncation of a structure (A, h) with h a partial injection from
// the finite subsets of A into A^2. Atoms are kept in insertion order (the
// order seeds canonical enumeration); the frontier is the set of finite
// subsets not yet in dom(h), computed on demand.
struct ModelN {
  std::vector<Atom> atoms;
  std::map<HF, HF> h;  // Set -> Pair, both over `atoms`

  bool has_atom(const Atom& a) const;
  void add_atom(const Atom& a);
  void assign(const HF& input, const HF& pair);  // keeps h injective, in-universe

  // unfulfilled finite subsets up to max_set_size, canonical order
  std::vector<HF> frontier(std::optional<std::size_t> max_set_size = {}) const;

  nlohmann::json to_json(std::optional<std::size_t> frontier_cap = 2) const;
  static ModelN from_json(const nlohmann::json& j);
};

struct LeqViolation {
  HF input;
  HF image;
  std::string which;  // offending map ("h" here; f/g/h for the Z-class)
};

struct LeqResult {
  bool ok = true;
  std::optional<LeqViolation> violation;
};

// (A,h1) <= (B,h2): A within B, h1 within h2, and every pair h2 assigns to a
// set not contained in A stays inside (B \ A)^2.
LeqResult leq_n(const ModelN& m1, const ModelN& m2);

// The common-extension recursion: starting from the union of two compatible
// models, every unfulfilled finite subset receives an ordered pair of fresh
// atoms, for `stages` rounds; fresh blocks are pairwise disjoint and disjoint
// from everything existing. Throws AmalgamationError when the inputs
// conflict on shared sets or collide on images.
ModelN amalgamate_n(const ModelN& m1, const ModelN& m2, std::size_t stages,
                    std::optional<std::size_t> max_set_size = {},
                    AtomForge* forge = nullptr);

// The three-atom extension: adjoins x, y, z and a stream of auxiliary atoms,
// then fulfills the frontier for `stages` rounds with images dictated by how
// each set meets {x,y,z}:
//   meets it in 0 or 3 atoms -> a fresh auxiliary pair <a_n, a_m>
//   meets it in exactly 1    -> <u, a_k> with u the unique common atom
//   meets it in exactly 2    -> <v, a_k> with v the excluded third atom
// Auxiliary indices come from one deterministic counter, so the map is
// injective by construction.
struct XyzExtension {
  ModelN model;
  Atom x, y, z;
  std::vector<Atom> aux;  // a_0, a_1, ... in allocation order

  XyzExtension(ModelN m, Atom x_, Atom y_, Atom z_)
      : model(std::move(m)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
};

XyzExtension xyz_extension_n(const ModelN& n1, std::size_t stages,
                             std::optional<std::size_t> max_set_size = {});

// For a permutation of {x,y,z} (fixing everything else), the extension to a
// table automorphism of the stage-bounded structure, when it exists.
std::optional<Perm> xyz_automorphism(const XyzExtension& ext, const Perm& xyz_perm);

// One stage of the duplicated-pair tower: the working set grows by a fresh
// pair <x_E, y_E> for every unfulfilled E, then by a mirror copy of
// everything outside the base, whose copied sets receive the reversed pairs.
struct TowerStage {
  std::vector<HF> handled;            // sets fulfilled at this stage
  std::map<HF, std::pair<Atom, Atom>> pair_of;  // E -> (x_E, y_E)
  std::map<Atom, Atom> tau;           // copy function for this stage
  std::vector<Atom> g1_atoms;         // working set at stage start
};

struct CopyTower {
  ModelN base;       // N_1
  std::vector<Atom> u;  // the distinguished triple, disjoint from the base
  ModelN model;      // the truncation built so far
  std::vector<TowerStage> stages;
};

CopyTower copy_tower_n(const ModelN& n1, std::size_t stages,
                       std::optional<std::size_t> max_set_size = {});

// The automorphism that mirrors stage n: swaps every atom outside the base
// with its stage-n copy and transposes every stage-n pair; fails (nullopt)
// when the truncation is too short to close it.
std::optional<Perm> tower_transposition(const CopyTower& tower, std::size_t stage);

// Closure of A0 under the single map: images of assigned subsets of the
// closure, their components, and pre-images whose assigned pair lies inside.
std::set<Atom> closure_n(const std::set<Atom>& a0, const ModelN& m);

}  // namespace chlab
