#pragma once

#include "chlab/perm.hpp"

namespace chlab {

// The densely ordered atom model: atoms are exact rationals, admissible maps
// are finite order-preserving partial injections (each extends to an order
// automorphism of the rationals by back-and-forth, provided it respects the
// intervals cut out by any pointwise-fixed set).
namespace rz {

Atom at(std::int64_t num, std::int64_t den = 1);
std::vector<Atom> window(std::int64_t lo, std::int64_t hi);  // integers lo..hi

enum class InjectKind { UnorderedToSquare, SquareToFin, FinToIseq };
InjectKind inject_kind_from_name(const std::string& name);

// {x,y} -> <min,max>; empty support.
HF unordered_to_square(const HF& two_set);

// E -> increasing enumeration of E; empty support.
HF fin_to_iseq(const HF& fin_set);

// A^2 -> fin(A), supported by four distinct marker atoms m1<m2<m3<m4:
//   x == y            -> {x}
//   x <  y            -> {x,y}
//   x >  y, {x,y} within the markers -> a fixed six-row table of marker
//                        subsets (∅, the four 3-subsets, all four markers)
//   x >  y, {x,y} missing m1 and m2  -> {x,y,m1,m2}
//   x >  y otherwise                 -> {x,y,m3,m4}
// Injective over any ground set containing the markers; the case split only
// depends on the order type of (x,y) relative to the markers, so the map is
// equivariant under every order isomorphism fixing the markers.
HF square_to_fin(const HF& pair, const std::vector<Atom>& markers);

HF inject(InjectKind kind, const HF& x, const std::vector<Atom>& markers);

// All order-preserving injections from `domain` into `window` (both atom
// lists are sorted internally), as partial perms.
std::vector<Perm> increasing_injections(const std::vector<Atom>& domain,
                                        const std::vector<Atom>& window);

// A partial map on `window` fixing everything except q, which moves to a
// fresh rational strictly between q and its successor in window ∪ pins.
Perm nudge(const std::vector<Atom>& window, const Atom& q,
           const std::vector<Atom>& pins);

}  // namespace rz
}  // namespace chlab
