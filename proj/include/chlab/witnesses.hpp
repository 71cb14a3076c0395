#pragma once

#include "chlab/oracle.hpp"

namespace chlab {

// One probe round of an extraction run.
struct ExtractionRound {
  std::vector<Atom> known;  // atoms held before the round
  HF probe;                 // the query that yielded progress
  HF answer;
  std::optional<Atom> found;

  nlohmann::json to_json() const;
};

struct ExtractionTrace {
  std::uint64_t oracle_seed = 0;  // 0 when table-backed
  std::vector<ExtractionRound> rounds;

  nlohmann::json to_json() const;
};

struct Extraction {
  std::vector<Atom> atoms;
  ExtractionTrace trace;
};

// Pulls n pairwise distinct atoms out of an injection fin(A) -> A^2: starting
// from five seed atoms, each round scans the finite subsets of the known
// atoms in canonical order and takes the first image component that escapes
// the known set. Progress is guaranteed while the oracle stays injective,
// because a k-atom window offers 2^k subsets but only k^2 pairs.
Extraction extract_from_fin_to_square(InjectionOracle& h, const std::vector<Atom>& seed,
                                      std::size_t n);

// The finite-to-one map seq(A) -> fin(A): entries are pushed off the even
// family positions (x_i -> x_{2i+1}), and the range is tagged with the
// marker x_{2*code} for the sequence's code relative to its own
// first-occurrence enumeration.
HF finite_to_one_seq_to_fin(const AtomSupply& embed, const std::vector<Atom>& s);

// Fiber of the map over a declared window of sequences (all sequences over
// `ground` of length <= maxlen mapping to exactly `target`).
std::vector<std::vector<Atom>> finite_to_one_fiber(const AtomSupply& embed,
                                                   const std::vector<Atom>& ground,
                                                   std::size_t maxlen, const HF& target);

struct PairMapsRound {
  std::vector<Atom> block;  // E_m
  HF spread;                // g(E_m)
  std::vector<Atom> fresh;  // distinct atoms first appearing in the spread

  nlohmann::json to_json() const;
};

struct PairMapsTrace {
  std::uint64_t f_seed = 0;
  std::uint64_t g_seed = 0;
  std::vector<PairMapsRound> rounds;

  nlohmann::json to_json() const;
};

struct PairMapsExtraction {
  std::vector<Atom> atoms;
  PairMapsTrace trace;
};

// Pulls n pairwise distinct atoms out of a pair of injections
// f: A^2 -> [A]^2 and g: fin(A) -> seq11(A): grows a chain of pairwise
// disjoint nonempty blocks (each round, the f-images over all pairs of the
// union spill outside it by counting), then concatenates the g-images of the
// blocks and reads off distinct atoms in order of first appearance.
PairMapsExtraction extract_from_pair_maps(InjectionOracle& f, InjectionOracle& g,
                                          const Atom& a0, std::size_t n,
                                          std::size_t min_rounds = 0);

}  // namespace chlab
