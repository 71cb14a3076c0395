#pragma once

#include <map>
#include <vector>

#include "chlab/hf.hpp"

namespace chlab {

// Finitely described map on atoms. Two flavours:
//   total:   a bijection on its carrier, identity off the carrier;
//   partial: an injection defined exactly on its carrier (used for
//            order-preserving partial maps on rationals); applying it to an
//            atom off the carrier is a DomainError.
class Perm {
 public:
  Perm() = default;  // identity

  static Perm from_map(std::map<Atom, Atom> fwd, bool partial = false);
  static Perm transposition(const Atom& a, const Atom& b);
  static Perm cycle(const std::vector<Atom>& atoms);  // a0->a1->...->a0

  bool is_identity() const;
  bool partial() const { return partial_; }
  const std::map<Atom, Atom>& map() const { return fwd_; }
  std::vector<Atom> carrier() const;

  Atom apply(const Atom& a) const;
  bool moves(const Atom& a) const;

  // pi-action on hereditarily finite objects: atoms map through the
  // permutation, sets/pairs/sequences recurse memberwise (sets are
  // re-canonicalized).
  HF act(const HF& x) const;

  Perm then(const Perm& next) const;      // next ∘ this
  Perm compose(const Perm& inner) const;  // this ∘ inner
  Perm inverse() const;

  friend bool operator==(const Perm& a, const Perm& b);
  friend bool operator<(const Perm& a, const Perm& b);

  std::string str() const;
  nlohmann::json to_json() const;
  static Perm from_json(const nlohmann::json& j);

 private:
  std::map<Atom, Atom> fwd_;  // fixed points dropped for total perms
  bool partial_ = false;
};

inline HF act(const Perm& pi, const HF& x) { return pi.act(x); }

}  // namespace chlab
