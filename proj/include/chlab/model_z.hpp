#pragma once

#include <map>
#include <optional>

#include "chlab/model_n.hpp"

namespace chlab {

// A finite truncation of a structure (A, f, g, h) with three partial
// injections: f from ordered pairs to 2-element sets, g from 2-element sets
// to repetition-free sequences, h from repetition-free sequences to finite
// sets. Staged constructions may cap the length of sequences they fulfill;
// the caps are part of the truncation, not of the structure.
struct ModelZ {
  std::vector<Atom> atoms;
  std::map<HF, HF> f;  // Pair -> Set(2)
  std::map<HF, HF> g;  // Set(2) -> Seq (injective entries)
  std::map<HF, HF> h;  // Seq -> Set

  bool has_atom(const Atom& a) const;
  void add_atom(const Atom& a);

  nlohmann::json to_json() const;
  static ModelZ from_json(const nlohmann::json& j);
};

// (A,f1,g1,h1) <= (B,f2,g2,h2): componentwise containment, and each map's
// assignments to inputs that are not over A keep their images over B \ A.
// The violation names the failing map.
LeqResult leq_z(const ModelZ& m1, const ModelZ& m2);

struct PlainExtensionOptions {
  std::optional<std::uint64_t> seq_max_len;   // cap on fulfilled sequence inputs
  std::uint64_t max_atoms = 2'000'000;
};

// The canonical completion rounds: each round, every unfulfilled ordered
// pair P gets f(P) = {a_P, b_P}, every unfulfilled 2-set Q gets
// g(Q) = <a_Q, b_Q, c_Q>, and every unfulfilled sequence R gets
// h(R) = {a_R, b_R, c_R}, all blocks fresh and fully disjoint.
ModelZ plain_extension_z(const ModelZ& seed, std::size_t stages,
                         const PlainExtensionOptions& opts = {},
                         AtomForge* forge = nullptr);

// Extends a permutation of the seed atoms to the plain extension built with
// identical options: fresh blocks follow their inputs. The base permutation
// must map the seed's fulfilled region onto itself.
std::optional<Perm> plain_extension_automorphism(const ModelZ& seed,
                                                 std::size_t stages,
                                                 const PlainExtensionOptions& opts,
                                                 const Perm& base);

// Closure of A0 under f, g, h and their pre-images within the fulfilled
// region: forward images contribute their atoms, and an output lying inside
// the closure pulls its input's atoms in.
std::set<Atom> closure_z(const std::set<Atom>& a0, const ModelZ& m);

}  // namespace chlab
