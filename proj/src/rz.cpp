#include "chlab/rz.hpp"

#include <algorithm>

#include "chlab/errors.hpp"

namespace chlab {
namespace rz {

namespace {

Atom require_rz(const HF& x) {
  const Atom& a = x.as_atom();
  if (a.tag() != AtomTag::RzRational)
    throw ArgumentError("expected a rational atom, got " + a.str());
  return a;
}

std::vector<Atom> sorted_rz(std::vector<Atom> v) {
  for (const auto& a : v)
    if (a.tag() != AtomTag::RzRational)
      throw ArgumentError("expected rational atoms");
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Atom at(std::int64_t num, std::int64_t den) { return Atom::rz(Rat(num, den)); }

std::vector<Atom> window(std::int64_t lo, std::int64_t hi) {
  std::vector<Atom> out;
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(at(i));
  return out;
}

InjectKind inject_kind_from_name(const std::string& name) {
  if (name == "unordered_to_square") return InjectKind::UnorderedToSquare;
  if (name == "square_to_fin") return InjectKind::SquareToFin;
  if (name == "fin_to_iseq") return InjectKind::FinToIseq;
  throw ArgumentError("unknown rz injection: " + name);
}

HF unordered_to_square(const HF& two_set) {
  if (two_set.kind() != HFKind::Set || two_set.size() != 2)
    throw ArgumentError("expected a 2-element set");
  Atom x = require_rz(two_set.kids()[0]);
  Atom y = require_rz(two_set.kids()[1]);
  if (y < x) std::swap(x, y);
  return HF::pair_of_atoms(x, y);
}

HF fin_to_iseq(const HF& fin_set) {
  if (fin_set.kind() != HFKind::Set) throw ArgumentError("expected a finite set");
  std::vector<Atom> atoms;
  for (const auto& m : fin_set.kids()) atoms.push_back(require_rz(m));
  std::sort(atoms.begin(), atoms.end());
  return HF::seq_of_atoms(atoms);
}

HF square_to_fin(const HF& pair, const std::vector<Atom>& markers) {
  if (pair.kind() != HFKind::Pair) throw ArgumentError("expected an ordered pair");
  if (markers.size() != 4) throw ArgumentError("square_to_fin needs 4 markers");
  std::vector<Atom> m = sorted_rz(markers);
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] == m[i + 1]) throw ArgumentError("markers must be pairwise distinct");

  Atom x = require_rz(pair.first());
  Atom y = require_rz(pair.second());
  if (x == y) return HF::set_of_atoms({x});
  if (x < y) return HF::set_of_atoms({x, y});

  auto marker_index = [&](const Atom& a) -> int {
    for (int i = 0; i < 4; ++i)
      if (m[i] == a) return i;
    return -1;
  };
  int ix = marker_index(x), iy = marker_index(y);
  if (ix >= 0 && iy >= 0) {
    // descending pairs inside the marker set; y < x, so iy < ix
    int lo = iy, hi = ix;
    if (lo == 0 && hi == 1) return HF::empty_set();
    if (lo == 0 && hi == 2) return HF::set_of_atoms({m[0], m[1], m[2]});
    if (lo == 1 && hi == 2) return HF::set_of_atoms({m[0], m[1], m[3]});
    if (lo == 0 && hi == 3) return HF::set_of_atoms({m[0], m[2], m[3]});
    if (lo == 1 && hi == 3) return HF::set_of_atoms({m[1], m[2], m[3]});
    if (lo == 2 && hi == 3) return HF::set_of_atoms({m[0], m[1], m[2], m[3]});
    throw TableGapError("marker pair not covered: " + x.str() + "," + y.str());
  }
  bool hits_low = (ix == 0 || ix == 1 || iy == 0 || iy == 1);
  if (!hits_low) return HF::set_of_atoms({x, y, m[0], m[1]});
  return HF::set_of_atoms({x, y, m[2], m[3]});
}

HF inject(InjectKind kind, const HF& x, const std::vector<Atom>& markers) {
  switch (kind) {
    case InjectKind::UnorderedToSquare:
      return unordered_to_square(x);
    case InjectKind::SquareToFin:
      return square_to_fin(x, markers);
    case InjectKind::FinToIseq:
      return fin_to_iseq(x);
  }
  throw InternalInvariantError("unreachable inject kind");
}

std::vector<Perm> increasing_injections(const std::vector<Atom>& domain,
                                        const std::vector<Atom>& window) {
  std::vector<Atom> dom = sorted_rz(domain);
  std::vector<Atom> win = sorted_rz(window);
  std::vector<Perm> out;
  std::size_t d = dom.size(), n = win.size();
  if (d > n) return out;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::map<Atom, Atom> m;
    for (std::size_t i = 0; i < d; ++i) m.insert_or_assign(dom[i], win[idx[i]]);
    out.push_back(Perm::from_map(std::move(m), /*partial=*/true));
    std::size_t j = d;
    while (j > 0 && idx[j - 1] == n - d + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t i = j; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

Perm nudge(const std::vector<Atom>& window, const Atom& q,
           const std::vector<Atom>& pins) {
  std::vector<Atom> all = window;
  all.insert(all.end(), pins.begin(), pins.end());
  all = sorted_rz(all);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  Rat qv = q.value();
  std::optional<Rat> next;
  for (const auto& a : all) {
    Rat v = a.value();
    if (qv < v) {
      next = v;
      break;
    }
  }
  Rat target = next ? midpoint(qv, *next) : Rat(qv.num + qv.den, qv.den);  // q + 1
  std::map<Atom, Atom> m;
  for (const auto& a : window) m.insert_or_assign(a, a);
  m.insert_or_assign(q, Atom::rz(target));
  return Perm::from_map(std::move(m), /*partial=*/true);
}

}  // namespace rz
}  // namespace chlab
