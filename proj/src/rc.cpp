#include "chlab/rc.hpp"

#include <algorithm>
#include <set>

#include "chlab/errors.hpp"

namespace chlab {
namespace rc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw ResourceError("prime product overflows");
  return a * b;
}

Atom require_rc(const HF& x) {
  const Atom& a = x.as_atom();
  if (a.tag() != AtomTag::RcPos) throw ArgumentError("expected a triple atom, got " + a.str());
  return a;
}

}  // namespace

Atom pos_a(std::int64_t n) { return Atom::rc(n, 0); }
Atom pos_b(std::int64_t n) { return Atom::rc(n, 1); }
Atom pos_c(std::int64_t n) { return Atom::rc(n, 2); }

std::vector<Atom> triple(std::int64_t n) { return {pos_a(n), pos_b(n), pos_c(n)}; }

std::vector<Atom> universe(std::int64_t triples) {
  std::vector<Atom> out;
  out.reserve(3 * triples);
  for (std::int64_t n = 0; n < triples; ++n)
    for (int p = 0; p < 3; ++p) out.push_back(Atom::rc(n, p));
  return out;
}

int delta(const Atom& x, const Atom& y) {
  if (x.tag() != AtomTag::RcPos || y.tag() != AtomTag::RcPos)
    throw ArgumentError("cyclic distance needs triple atoms");
  if (x.triple() != y.triple())
    throw ArgumentError("cyclic distance across triples: " + x.str() + ", " + y.str());
  if (x == y) throw ArgumentError("cyclic distance of an atom to itself");
  return (y.pos() - x.pos() + 3) % 3;
}

HF f1(const HF& two_set) {
  if (two_set.kind() != HFKind::Set || two_set.size() != 2)
    throw ArgumentError("f1 expects a 2-element set");
  Atom x = require_rc(two_set.kids()[0]);
  Atom y = require_rc(two_set.kids()[1]);
  if (x.triple() > y.triple()) std::swap(x, y);
  if (x.triple() < y.triple()) return HF::pair_of_atoms(x, y);
  int third = 3 - x.pos() - y.pos();
  Atom z = Atom::rc(x.triple(), third);
  return HF::pair_of_atoms(z, z);
}

HF f2(const HF& pair) {
  if (pair.kind() != HFKind::Pair) throw ArgumentError("f2 expects an ordered pair");
  Atom x = require_rc(pair.first());
  Atom y = require_rc(pair.second());
  if (x == y) return HF::seq_of_atoms({x});
  return HF::seq_of_atoms({x, y});
}

HF f3(const HF& inj_seq) {
  if (inj_seq.kind() != HFKind::Seq) throw ArgumentError("f3 expects a sequence");
  std::vector<Atom> s;
  std::set<Atom> seen;
  for (const auto& e : inj_seq.kids()) {
    Atom a = require_rc(e);
    if (!seen.insert(a).second)
      throw ArgumentError("f3 input repeats " + a.str());
    s.push_back(a);
  }
  if (s.empty()) return HF::empty_set();

  std::size_t k = s.size();
  std::vector<Atom> chain;                    // E_k, one first-visit entry per triple
  std::map<std::int64_t, Atom> rep;           // triple -> first-visit entry
  std::vector<int> eps(k, 1);
  std::vector<std::uint64_t> sigma(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t t = s[i].triple();
    auto it = rep.find(t);
    if (it == rep.end()) {
      chain.push_back(s[i]);
      rep.emplace(t, s[i]);
    } else if (delta(it->second, s[i]) == 2) {
      eps[i] = 2;
    }
    sigma[i] = (i == 0) ? static_cast<std::uint64_t>(s[0].triple())
                        : sigma[i - 1] + static_cast<std::uint64_t>(s[i].triple()) + 1;
  }
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t p = nth_prime(sigma[i]);
    q = checked_mul(q, p);
    if (eps[i] == 2) q = checked_mul(q, p);
  }

  std::vector<Atom> out = chain;
  for (const auto& a : triple(static_cast<std::int64_t>(q))) out.push_back(a);
  return HF::set_of_atoms(out);
}

std::optional<HF> f3_decode(const HF& fin_set) {
  if (fin_set.kind() != HFKind::Set) return std::nullopt;
  if (fin_set.size() == 0) return HF::seq_of_atoms({});

  std::map<std::int64_t, std::vector<Atom>> by_triple;
  for (const auto& m : fin_set.kids()) {
    if (m.kind() != HFKind::AtomRef || m.as_atom().tag() != AtomTag::RcPos)
      return std::nullopt;
    by_triple[m.as_atom().triple()].push_back(m.as_atom());
  }

  // exactly one fully contained triple, everything else at most one per triple
  std::optional<std::int64_t> full;
  for (const auto& [t, atoms] : by_triple) {
    if (atoms.size() == 3) {
      if (full) return std::nullopt;
      full = t;
    } else if (atoms.size() != 1) {
      return std::nullopt;
    }
  }
  if (!full || *full < 2) return std::nullopt;

  // factor q into prime-index positions with exponents in {1,2}
  std::uint64_t q = static_cast<std::uint64_t>(*full);
  std::vector<std::uint64_t> sigma;
  std::vector<int> eps;
  for (std::size_t i = 0; q > 1; ++i) {
    std::uint64_t p = nth_prime(i);
    if (q % p == 0) {
      int e = 0;
      while (q % p == 0) {
        q /= p;
        ++e;
      }
      if (e > 2) return std::nullopt;
      sigma.push_back(i);
      eps.push_back(e);
    }
  }

  std::size_t k = sigma.size();
  if (k == 0) return std::nullopt;

  // hop pattern back out of the strictly increasing index sequence
  std::vector<std::int64_t> hops(k);
  hops[0] = static_cast<std::int64_t>(sigma[0]);
  for (std::size_t i = 1; i < k; ++i)
    hops[i] = static_cast<std::int64_t>(sigma[i]) - static_cast<std::int64_t>(sigma[i - 1]) - 1;

  std::map<std::int64_t, Atom> rep;
  for (const auto& [t, atoms] : by_triple)
    if (t != *full) rep.emplace(t, atoms[0]);

  std::vector<Atom> entries;
  std::set<std::int64_t> visited;
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t t = hops[i];
    if (t < 0) return std::nullopt;
    auto it = rep.find(t);
    if (it == rep.end()) return std::nullopt;
    if (!visited.count(t)) {
      if (eps[i] != 1) return std::nullopt;  // first visits carry exponent 1
      visited.insert(t);
      entries.push_back(it->second);
    } else {
      entries.push_back(Atom::rc(t, (it->second.pos() + eps[i]) % 3));
    }
  }
  if (visited.size() != rep.size()) return std::nullopt;  // unconsumed chain atoms

  HF seq = HF::seq_of_atoms(entries);
  std::set<Atom> uniq(entries.begin(), entries.end());
  if (uniq.size() != entries.size()) return std::nullopt;
  if (f3(seq) != fin_set) return std::nullopt;
  return seq;
}

Perm rotation(const std::map<std::int64_t, int>& rotations) {
  std::map<Atom, Atom> m;
  for (const auto& [n, r] : rotations) {
    int amt = ((r % 3) + 3) % 3;
    if (amt == 0) continue;
    for (int p = 0; p < 3; ++p)
      m.insert_or_assign(Atom::rc(n, p), Atom::rc(n, (p + amt) % 3));
  }
  return Perm::from_map(std::move(m));
}

std::vector<Perm> all_rotations(std::int64_t triples) {
  std::vector<Perm> out;
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < triples; ++i) total *= 3;
  for (std::int64_t code = 0; code < total; ++code) {
    std::map<std::int64_t, int> rot;
    std::int64_t c = code;
    for (std::int64_t n = 0; n < triples; ++n) {
      rot[n] = static_cast<int>(c % 3);
      c /= 3;
    }
    out.push_back(rotation(rot));
  }
  return out;
}

std::uint64_t nth_prime(std::size_t i) {
  static std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
  while (primes.size() <= i) {
    std::uint64_t cand = primes.back() + 2;
    while (true) {
      bool ok = true;
      for (std::uint64_t p : primes) {
        if (p * p > cand) break;
        if (cand % p == 0) {
          ok = false;
          break;
        }
      }
      if (ok) break;
      cand += 2;
    }
    primes.push_back(cand);
  }
  return primes[i];
}

}  // namespace rc
}  // namespace chlab
