#pragma once

#include <map>
#include <random>

#include "chlab/errors.hpp"
#include "chlab/kinds.hpp"

namespace chlab {

// A deterministic injective family x_0, x_1, ... of atoms; an explicit
// prefix may be given, after which fresh atoms continue the family.
class AtomSupply {
 public:
  static AtomSupply naturals();  // base(0), base(1), ...
  static AtomSupply from_list(std::vector<Atom> prefix, std::string ext_reason = "supply-ext");

  Atom at(std::size_t i) const;
  std::optional<std::size_t> index_of(const Atom& a) const;  // within the materialized part
  std::size_t materialized() const { return atoms_.size(); }

 private:
  void extend(std::size_t upto) const;
  bool natural_ = false;
  std::string ext_reason_;
  mutable std::vector<Atom> atoms_;
  mutable std::map<Atom, std::size_t> index_;
};

struct OracleFault : OracleError {
  OracleFault(std::string msg, HF a, HF b)
      : OracleError(std::move(msg)), input_a(std::move(a)), input_b(std::move(b)) {}
  HF input_a, input_b;
};

// A total deterministic function on hereditarily finite objects, queried
// lazily. Answers are memoized (stability) and checked for injectivity as
// they accumulate; a violation raises OracleFault naming both inputs.
//
// Backings: an explicit table, or a seeded generator producing images of the
// requested codomain kind over a lazily growing atom supply. The horizon of
// the supply that images may draw from trails the set of atoms seen so far
// plus a slack, so images regularly leave any fixed finite window without
// the universe exploding.
class InjectionOracle {
 public:
  static InjectionOracle from_table(std::vector<std::pair<HF, HF>> rows);
  static InjectionOracle random(KindTag codomain, std::uint64_t seed,
                                AtomSupply supply = AtomSupply::naturals(),
                                std::size_t slack = 3, std::size_t seq_max_len = 4);

  const HF& query(const HF& x);
  const std::map<HF, HF>& memo() const { return memo_; }
  std::uint64_t seed() const { return seed_; }
  bool table_backed() const { return table_backed_; }

  nlohmann::json memo_json() const;

 private:
  InjectionOracle() = default;
  HF generate(const HF& x);
  void note_atoms(const HF& x);

  bool table_backed_ = false;
  std::map<HF, HF> table_;
  std::map<HF, HF> memo_;
  std::map<HF, HF> image_to_input_;
  std::uint64_t seed_ = 0;
  KindTag codomain_ = KindTag::OrderedPairs;
  std::mt19937_64 rng_;
  AtomSupply supply_ = AtomSupply::naturals();
  std::size_t slack_ = 3;
  std::size_t seq_max_len_ = 4;
  std::set<Atom> seen_;
};

}  // namespace chlab
