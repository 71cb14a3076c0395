#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chlab/hf.hpp"

namespace chlab {

// The five object kinds over a ground set A:
//   FinSubsets     fin(A)        finite subsets
//   OrderedPairs   A x A
//   UnorderedPairs [A]^2         2-element subsets
//   InjSeq         seq^{1-1}(A)  finite sequences without repetition
//   Seq            seq(A)        finite sequences, repetition allowed
enum class KindTag : std::uint8_t {
  FinSubsets,
  OrderedPairs,
  UnorderedPairs,
  InjSeq,
  Seq,
};

const char* kind_name(KindTag k);
KindTag kind_from_name(const std::string& name);

// Exact count of kind-objects over a k-element ground set. InjSeq counts all
// lengths 0..k; Seq requires maxlen and counts lengths 0..maxlen. Throws
// ArgumentError when maxlen is missing for Seq, ResourceError on overflow.
std::uint64_t count_kind(KindTag kind, std::uint64_t k,
                         std::optional<std::uint64_t> maxlen = {});

// Canonical enumeration order, stable across runs:
//   sets:      by size, then colexicographically on ground positions
//              (equivalently: ascending bitmask over ground indices);
//   sequences: by length, then lexicographically on ground positions;
//   pairs:     lexicographically on (first, second) ground positions.
// Visits every object exactly once; `visit` returns false to stop early.
// Throws ArgumentError on duplicate ground atoms or missing maxlen for Seq.
void for_each_kind(KindTag kind, const std::vector<Atom>& ground,
                   std::optional<std::uint64_t> maxlen,
                   const std::function<bool(const HF&)>& visit);

std::vector<HF> enum_kind(KindTag kind, const std::vector<Atom>& ground,
                          std::optional<std::uint64_t> maxlen = {});

// Subsets of `ground` of size <= max_size (all sizes when absent), in the
// canonical set order. Used by staged constructions to keep frontiers finite.
void for_each_subset(const std::vector<Atom>& ground,
                     std::optional<std::size_t> max_size,
                     const std::function<bool(const HF&)>& visit);

// Injective sequences over `ground` of length <= max_len, canonical order.
void for_each_injseq(const std::vector<Atom>& ground,
                     std::optional<std::uint64_t> max_len,
                     const std::function<bool(const HF&)>& visit);

// Cantor pairing, with pi(0,0) == 0.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);

// Distinct entries of s in order of first occurrence.
std::vector<Atom> first_occurrence_range(const std::vector<Atom>& s);

// Code of a sequence over an explicitly enumerated range: the pair
// (length, base-|range| value of the digit string of entry positions),
// combined with cantor_pair. Distinct sequences over the same range always
// get distinct codes; for fixed |range| = n and length l there are exactly
// n^l codes. Entries must occur in `range`; `range` must be duplicate-free.
std::uint64_t seq_code(const std::vector<Atom>& s, const std::vector<Atom>& range);

// Convenience form: the range is the first-occurrence enumeration of ran(s),
// i.e. the enumeration the sequence itself induces. Code of <> is 0.
std::uint64_t seq_code(const std::vector<Atom>& s);

}  // namespace chlab
