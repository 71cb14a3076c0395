#pragma once

#include <memory>
#include <set>
#include <vector>

#include "chlab/atom.hpp"

namespace chlab {

enum class HFKind : std::uint8_t { AtomRef, Set, Pair, Seq };

// Hereditarily finite object over atoms: an atom reference, a finite set
// (members kept sorted and duplicate-free under the canonical order), an
// ordered pair, or a finite sequence. Immutable value type; copies share
// storage.
//
// Canonical order used throughout (sets, JSON, map keys): by kind
// (AtomRef < Set < Pair < Seq), atoms by their own order, composites
// lexicographically by members. Serialized sets list members in this order,
// so the JSON encoding is canonical as well.
class HF {
 public:
  HF();  // the empty set
  static HF atom(Atom a);
  static HF set(std::vector<HF> members);  // sorts and dedupes
  static HF pair(HF first, HF second);
  static HF seq(std::vector<HF> items);
  static HF empty_set() { return set({}); }

  static HF set_of_atoms(const std::vector<Atom>& atoms);
  static HF seq_of_atoms(const std::vector<Atom>& atoms);
  static HF pair_of_atoms(const Atom& a, const Atom& b);

  HFKind kind() const { return d_->k; }
  bool is_atom() const { return kind() == HFKind::AtomRef; }
  const Atom& as_atom() const;
  // Set members / Seq items / Pair components, in stored order.
  const std::vector<HF>& kids() const { return d_->kids; }
  const HF& first() const { return d_->kids[0]; }
  const HF& second() const { return d_->kids[1]; }
  std::size_t size() const { return d_->kids.size(); }

  bool contains(const HF& member) const;  // Set membership

  int compare(const HF& other) const;
  friend bool operator==(const HF& a, const HF& b) { return a.compare(b) == 0; }
  friend bool operator!=(const HF& a, const HF& b) { return a.compare(b) != 0; }
  friend bool operator<(const HF& a, const HF& b) { return a.compare(b) < 0; }

  void atoms_into(std::set<Atom>& out) const;
  std::set<Atom> atoms() const;
  // Entries of a flat object (set/seq/pair of atom refs).
  std::vector<Atom> flat_atoms() const;

  // Pure-set encoding: pairs become Kuratowski pairs {{x},{x,y}}, sequences
  // become head/tail pairs with {∅} as the terminator (the terminator is not
  // the empty set, so a lowered sequence never collides with a lowered set).
  static HF lower_to_sets(const HF& x);

  std::size_t depth() const;
  std::string str() const;
  nlohmann::json to_json() const;
  static HF from_json(const nlohmann::json& j);

 private:
  struct Data {
    HFKind k;
    std::vector<Atom> a;  // AtomRef payload (size 1)
    std::vector<HF> kids;
  };
  explicit HF(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

}  // namespace chlab
