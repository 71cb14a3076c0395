#include "chlab/rn.hpp"

#include <algorithm>
#include <functional>

#include "chlab/errors.hpp"

namespace chlab {
namespace rn {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a != 0 && b > cap / a) throw ResourceError("tower size overflows bound", cap);
  return a * b;
}

// all length-l tuples over `pool`, lexicographic in pool order
void for_each_tuple(const std::vector<Atom>& pool, std::size_t l,
                    const std::function<void(const std::vector<Atom>&)>& fn) {
  std::vector<Atom> t;
  std::function<void()> rec = [&]() {
    if (t.size() == l) {
      fn(t);
      return;
    }
    for (const auto& a : pool) {
      t.push_back(a);
      rec();
      t.pop_back();
    }
  };
  rec();
}

}  // namespace

std::vector<Atom> Universe::all() const {
  std::vector<Atom> out;
  for (const auto& lvl : levels) out.insert(out.end(), lvl.begin(), lvl.end());
  return out;
}

std::size_t Universe::size() const {
  std::size_t n = 0;
  for (const auto& lvl : levels) n += lvl.size();
  return n;
}

std::uint64_t expected_size(std::int64_t base_size, std::int64_t depth,
                            std::uint64_t cap) {
  std::uint64_t size = static_cast<std::uint64_t>(base_size);
  for (std::int64_t n = 0; n < depth; ++n) {
    // |A_{n+1}| = |A_n| + 2 * sum_{k=0}^{n+1} |A_n|^k
    std::uint64_t tuples = 0, pw = 1;
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      tuples += pw;
      if (k < n + 1) pw = checked_mul(pw, size, UINT64_MAX / 4);
    }
    size += 2 * tuples;
  }
  if (size > cap) throw ResourceError("tower size exceeds bound", size);
  return size;
}

Universe build(std::int64_t base_size, std::int64_t depth, std::uint64_t max_atoms) {
  if (base_size < 1) throw ArgumentError("tower needs at least one base atom");
  if (depth < 0) throw ArgumentError("tower depth must be >= 0");
  expected_size(base_size, depth, max_atoms);  // throws when over the bound

  Universe u;
  u.base_size = base_size;
  u.depth = depth;
  u.levels.resize(depth + 1);
  for (std::int64_t i = 0; i < base_size; ++i) u.levels[0].push_back(Atom::base(i));

  std::vector<Atom> pool = u.levels[0];  // A_n
  for (std::int64_t n = 0; n < depth; ++n) {
    std::int64_t lvl = n + 1;
    for (std::int64_t k = 0; k <= lvl; ++k) {
      for_each_tuple(pool, static_cast<std::size_t>(k), [&](const std::vector<Atom>& p) {
        u.levels[lvl].push_back(Atom::rn_tuple(lvl, p, 0));
        u.levels[lvl].push_back(Atom::rn_tuple(lvl, p, 1));
      });
    }
    pool.insert(pool.end(), u.levels[lvl].begin(), u.levels[lvl].end());
  }
  return u;
}

Atom flip_key(const Atom& tuple_atom) {
  return Atom::rn_tuple(tuple_atom.level(), tuple_atom.parts(), 0);
}

TowerPerm::TowerPerm(std::map<std::int64_t, std::int64_t> base, std::map<Atom, int> flips)
    : base_(std::move(base)) {
  std::set<std::int64_t> img;
  for (const auto& [a, b] : base_) {
    if (!img.insert(b).second || base_.find(b) == base_.end())
      throw ArgumentError("base map is not a bijection on its carrier");
  }
  for (auto& [k, bit] : flips)
    if (bit & 1) flips_.emplace(flip_key(k), 1);
}

Atom TowerPerm::apply(const Atom& a) const {
  switch (a.tag()) {
    case AtomTag::Base: {
      auto it = base_.find(a.id());
      return it == base_.end() ? a : Atom::base(it->second);
    }
    case AtomTag::RnTuple: {
      std::vector<Atom> parts;
      parts.reserve(a.parts().size());
      for (const auto& c : a.parts()) parts.push_back(apply(c));
      auto it = flips_.find(flip_key(a));
      int flip = it == flips_.end() ? 0 : it->second;
      return Atom::rn_tuple(a.level(), std::move(parts), (a.eps() + flip) & 1);
    }
    default:
      throw ArgumentError("tower permutation applied to foreign atom " + a.str());
  }
}

HF TowerPerm::act(const HF& x) const {
  switch (x.kind()) {
    case HFKind::AtomRef:
      return HF::atom(apply(x.as_atom()));
    case HFKind::Set: {
      std::vector<HF> ms;
      for (const auto& k : x.kids()) ms.push_back(act(k));
      return HF::set(std::move(ms));
    }
    case HFKind::Pair:
      return HF::pair(act(x.first()), act(x.second()));
    case HFKind::Seq: {
      std::vector<HF> ms;
      for (const auto& k : x.kids()) ms.push_back(act(k));
      return HF::seq(std::move(ms));
    }
  }
  throw InternalInvariantError("unreachable hf kind");
}

TowerPerm TowerPerm::compose(const TowerPerm& inner) const {
  // (this ∘ inner): base maps compose; the flip of tuple p accumulates
  // inner's flip at p plus this's flip at inner(p)'s key.
  std::map<std::int64_t, std::int64_t> base;
  for (const auto& [a, b] : inner.base_) {
    auto it = base_.find(b);
    base.emplace(a, it == base_.end() ? b : it->second);
  }
  for (const auto& [a, b] : base_)
    if (inner.base_.find(a) == inner.base_.end()) base.emplace(a, b);

  // a tuple p ends up with flip inner.flip(p) + this.flip(key(inner(p)));
  // candidates are inner's keys plus inner-preimages of this's keys
  std::map<std::int64_t, std::int64_t> inv;
  for (const auto& [a, b] : inner.base_) inv.emplace(b, a);
  std::function<Atom(const Atom&)> pre = [&](const Atom& x) -> Atom {
    if (x.tag() == AtomTag::Base) {
      auto it = inv.find(x.id());
      return it == inv.end() ? x : Atom::base(it->second);
    }
    std::vector<Atom> parts;
    for (const auto& c : x.parts()) parts.push_back(pre(c));
    return Atom::rn_tuple(x.level(), std::move(parts), x.eps());
  };
  std::set<Atom> cands;
  for (const auto& [k, bit] : inner.flips_) {
    (void)bit;
    cands.insert(k);
  }
  for (const auto& [k, bit] : flips_) {
    (void)bit;
    cands.insert(pre(k));
  }
  auto flip_of = [](const std::map<Atom, int>& m, const Atom& key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  };
  std::map<Atom, int> out;
  for (const auto& p : cands) {
    Atom moved = flip_key(inner.apply(p));
    int combined = (flip_of(inner.flips_, p) + flip_of(flips_, moved)) & 1;
    if (combined) out.emplace(p, 1);
  }
  return TowerPerm(std::move(base), std::move(out));
}

bool TowerPerm::is_identity() const {
  for (const auto& [a, b] : base_)
    if (a != b) return false;
  return flips_.empty();
}

Perm TowerPerm::to_perm(const Universe& u) const {
  std::map<Atom, Atom> m;
  for (const auto& a : u.all()) m.emplace(a, apply(a));
  return Perm::from_map(std::move(m));
}

std::vector<TowerPerm> all_elements(const Universe& u, std::size_t max_count) {
  // base permutations
  std::vector<std::int64_t> ids;
  for (const auto& a : u.levels[0]) ids.push_back(a.id());
  std::vector<std::vector<std::int64_t>> base_perms;
  std::vector<std::int64_t> img = ids;
  std::sort(img.begin(), img.end());
  do {
    base_perms.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  // flip keys: one per tuple at every level >= 1
  std::vector<Atom> keys;
  for (std::size_t lvl = 1; lvl < u.levels.size(); ++lvl)
    for (const auto& a : u.levels[lvl])
      if (a.eps() == 0) keys.push_back(a);

  if (keys.size() > 20) throw ResourceError("too many flip keys to enumerate");
  std::size_t flip_count = std::size_t{1} << keys.size();
  if (base_perms.size() * flip_count > max_count)
    throw ResourceError("tower group too large to enumerate",
                        base_perms.size() * flip_count);

  std::vector<TowerPerm> out;
  for (const auto& bp : base_perms) {
    std::map<std::int64_t, std::int64_t> base;
    for (std::size_t i = 0; i < ids.size(); ++i) base.emplace(ids[i], bp[i]);
    for (std::size_t mask = 0; mask < flip_count; ++mask) {
      std::map<Atom, int> flips;
      for (std::size_t i = 0; i < keys.size(); ++i)
        if (mask & (std::size_t{1} << i)) flips.emplace(keys[i], 1);
      out.push_back(TowerPerm(base, flips));
    }
  }
  return out;
}

std::set<Atom> support_closure(const std::set<Atom>& e) {
  std::set<Atom> out = e;
  std::vector<Atom> work(e.begin(), e.end());
  while (!work.empty()) {
    Atom a = work.back();
    work.pop_back();
    if (a.tag() != AtomTag::RnTuple) continue;
    Atom partner = Atom::rn_tuple(a.level(), a.parts(), 1 - a.eps());
    if (out.insert(partner).second) work.push_back(partner);
    for (const auto& c : a.parts())
      if (out.insert(c).second) work.push_back(c);
  }
  return out;
}

std::vector<Perm> fix_generators(const Universe& u, const std::vector<Atom>& e) {
  std::set<Atom> closed = support_closure(std::set<Atom>(e.begin(), e.end()));
  std::vector<Perm> gens;

  std::vector<std::int64_t> free_base;
  for (const auto& a : u.levels[0])
    if (!closed.count(a)) free_base.push_back(a.id());
  for (std::size_t i = 0; i + 1 < free_base.size(); ++i) {
    TowerPerm t({{free_base[i], free_base[i + 1]}, {free_base[i + 1], free_base[i]}}, {});
    gens.push_back(t.to_perm(u));
  }

  for (std::size_t lvl = 1; lvl < u.levels.size(); ++lvl) {
    for (const auto& a : u.levels[lvl]) {
      if (a.eps() != 0) continue;
      if (closed.count(a)) continue;
      TowerPerm t({}, {{a, 1}});
      gens.push_back(t.to_perm(u));
    }
  }
  return gens;
}

}  // namespace rn
}  // namespace chlab
