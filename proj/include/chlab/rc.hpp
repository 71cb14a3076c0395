#pragma once

#include <map>
#include <optional>

#include "chlab/perm.hpp"

namespace chlab {

// The cyclic-triple atom model: countably many disjoint 3-element triples
// P_n = {a_n, b_n, c_n}, each carrying the cyclic successor order
// a -> b -> c -> a. The admissible permutations rotate triples in place.
namespace rc {

Atom pos_a(std::int64_t n);
Atom pos_b(std::int64_t n);
Atom pos_c(std::int64_t n);
std::vector<Atom> triple(std::int64_t n);
std::vector<Atom> universe(std::int64_t triples);  // P_0 .. P_{triples-1}

// Cyclic distance: 1 for a successor step, 2 for a double step. Arguments
// must be distinct members of the same triple.
int delta(const Atom& x, const Atom& y);

// [A]^2 -> A^2. Cross-triple 2-sets map to the pair ordered by triple index;
// same-triple 2-sets map to <z,z> with z the excluded third position.
HF f1(const HF& two_set);

// A^2 -> seq11(A): <x> on the diagonal, <x,y> off it.
HF f2(const HF& pair);

// seq11(A) -> fin(A) via the visit-chain / prime-power construction: the
// first visit to each triple contributes its entry to a set E, repeat visits
// contribute a cyclic-distance exponent, the triple hop pattern becomes a
// strictly increasing prime index sequence, and the resulting product q
// appends the full triple P_q. f3(<>) = ∅.
HF f3(const HF& inj_seq);

// Inverse of f3 where one exists; nullopt for sets that are not images.
std::optional<HF> f3_decode(const HF& fin_set);

// The group element rotating each listed triple by its amount (mod 3).
Perm rotation(const std::map<std::int64_t, int>& rotations);

// All 3^t rotation assignments over triples 0..t-1, identity first,
// deterministic order.
std::vector<Perm> all_rotations(std::int64_t triples);

std::uint64_t nth_prime(std::size_t i);  // p_0 = 2

}  // namespace rc
}  // namespace chlab
