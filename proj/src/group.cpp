#include "chlab/group.hpp"

#include <algorithm>
#include <deque>

#include "chlab/errors.hpp"
#include "chlab/rc.hpp"
#include "chlab/rz.hpp"

namespace chlab {

GroupSpec GroupSpec::free_symmetric(std::vector<Atom> atoms) {
  GroupSpec s;
  s.kind = Kind::FreeSymmetric;
  s.universe = std::move(atoms);
  return s;
}

GroupSpec GroupSpec::rc_triples_spec(std::int64_t triples) {
  GroupSpec s;
  s.kind = Kind::RCTriples;
  s.rc_triples = triples;
  return s;
}

GroupSpec GroupSpec::rn_tower_spec(std::int64_t base, std::int64_t depth) {
  GroupSpec s;
  s.kind = Kind::RNTower;
  s.rn_base = base;
  s.rn_depth = depth;
  return s;
}

GroupSpec GroupSpec::rz_ordered_spec(std::vector<Atom> window) {
  GroupSpec s;
  s.kind = Kind::RZOrdered;
  s.universe = std::move(window);
  return s;
}

GroupSpec GroupSpec::generated(std::vector<Perm> gens, std::vector<Atom> universe) {
  GroupSpec s;
  s.kind = Kind::Generated;
  s.generators = std::move(gens);
  s.universe = std::move(universe);
  return s;
}

std::vector<Atom> GroupSpec::universe_atoms() const {
  switch (kind) {
    case Kind::FreeSymmetric:
    case Kind::RZOrdered:
    case Kind::Generated:
      return universe;
    case Kind::RCTriples:
      return rc::universe(rc_triples);
    case Kind::RNTower:
      return rn::build(rn_base, rn_depth).all();
  }
  return {};
}

const char* GroupSpec::kind_name() const {
  switch (kind) {
    case Kind::FreeSymmetric: return "free-symmetric";
    case Kind::RCTriples: return "rc-triples";
    case Kind::RNTower: return "rn-tower";
    case Kind::RZOrdered: return "rz-ordered";
    case Kind::Generated: return "generated";
  }
  return "?";
}

bool GroupSpec::member(const Perm& p) const {
  switch (kind) {
    case Kind::FreeSymmetric: {
      std::set<Atom> u(universe.begin(), universe.end());
      for (const auto& [a, b] : p.map())
        if (!u.count(a) || !u.count(b)) return false;
      return !p.partial();
    }
    case Kind::RCTriples: {
      if (p.partial()) return false;
      std::map<std::int64_t, int> amount;
      for (const auto& [a, b] : p.map()) {
        if (a.tag() != AtomTag::RcPos || b.tag() != AtomTag::RcPos) return false;
        if (a.triple() != b.triple()) return false;
        int amt = (b.pos() - a.pos() + 3) % 3;
        auto [it, fresh] = amount.emplace(a.triple(), amt);
        if (!fresh && it->second != amt) return false;
      }
      return true;
    }
    case Kind::RNTower: {
      // decomposable per the tower action: base atoms permute the base, each
      // tuple maps within its level with components pushed through the base
      if (p.partial()) return false;
      std::map<std::int64_t, std::int64_t> base;
      for (const auto& [a, b] : p.map()) {
        if (a.tag() == AtomTag::Base) {
          if (b.tag() != AtomTag::Base) return false;
          base.emplace(a.id(), b.id());
        }
      }
      auto apply_base = [&](const Atom& x) {
        if (x.tag() != AtomTag::Base) return x;
        auto it = base.find(x.id());
        return it == base.end() ? x : Atom::base(it->second);
      };
      std::function<Atom(const Atom&)> push = [&](const Atom& x) -> Atom {
        if (x.tag() == AtomTag::Base) return apply_base(x);
        std::vector<Atom> parts;
        for (const auto& c : x.parts()) parts.push_back(push(c));
        return Atom::rn_tuple(x.level(), std::move(parts), x.eps());
      };
      for (const auto& [a, b] : p.map()) {
        if (a.tag() == AtomTag::Base) continue;
        if (a.tag() != AtomTag::RnTuple || b.tag() != AtomTag::RnTuple) return false;
        if (a.level() != b.level()) return false;
        Atom expected = push(Atom::rn_tuple(a.level(), a.parts(), 0));
        if (!(Atom::rn_tuple(b.level(), b.parts(), 0) == expected)) return false;
        // both bits of a tuple must move together, with one shared flip
        Atom partner = Atom::rn_tuple(a.level(), a.parts(), 1 - a.eps());
        Atom partner_img = p.apply(partner);
        if (partner_img.tag() != AtomTag::RnTuple) return false;
        if (!(Atom::rn_tuple(partner_img.level(), partner_img.parts(), 0) == expected))
          return false;
        if (partner_img.eps() == b.eps()) return false;
      }
      return true;
    }
    case Kind::RZOrdered: {
      // finite order-preserving injection
      std::vector<std::pair<Atom, Atom>> rows(p.map().begin(), p.map().end());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first.tag() != AtomTag::RzRational ||
            rows[i].second.tag() != AtomTag::RzRational)
          return false;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          bool lt_in = rows[i].first < rows[j].first;
          bool lt_out = rows[i].second < rows[j].second;
          if (lt_in != lt_out) return false;
        }
      }
      return true;
    }
    case Kind::Generated: {
      auto [elems, complete] = close_group(generators, closure_bound);
      (void)complete;
      return std::find(elems.begin(), elems.end(), p) != elems.end();
    }
  }
  return false;
}

std::pair<std::vector<Perm>, bool> close_group(const std::vector<Perm>& gens,
                                               std::size_t bound) {
  std::set<Perm> seen;
  std::deque<Perm> work;
  seen.insert(Perm());
  work.push_back(Perm());
  while (!work.empty()) {
    Perm cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      Perm next = g.compose(cur);
      if (seen.count(next)) continue;
      if (seen.size() >= bound)
        return {std::vector<Perm>(seen.begin(), seen.end()), false};
      seen.insert(next);
      work.push_back(next);
    }
  }
  return {std::vector<Perm>(seen.begin(), seen.end()), true};
}

GeneratorSet fix_generators(const GroupSpec& spec, const std::vector<Atom>& E) {
  std::set<Atom> fixed(E.begin(), E.end());
  GeneratorSet out;
  switch (spec.kind) {
    case GroupSpec::Kind::FreeSymmetric: {
      std::vector<Atom> free;
      for (const auto& a : spec.universe)
        if (!fixed.count(a)) free.push_back(a);
      std::sort(free.begin(), free.end());
      for (std::size_t i = 0; i + 1 < free.size(); ++i)
        out.gens.push_back(Perm::transposition(free[i], free[i + 1]));
      return out;
    }
    case GroupSpec::Kind::RCTriples: {
      for (std::int64_t n = 0; n < spec.rc_triples; ++n) {
        bool touches = false;
        for (const auto& a : rc::triple(n))
          if (fixed.count(a)) touches = true;
        if (!touches) out.gens.push_back(rc::rotation({{n, 1}}));
      }
      return out;
    }
    case GroupSpec::Kind::RNTower: {
      auto u = rn::build(spec.rn_base, spec.rn_depth);
      out.gens = rn::fix_generators(u, E);
      return out;
    }
    case GroupSpec::Kind::RZOrdered: {
      // one nudge per free window atom; these witness every failure of
      // support (any atom off E can be moved within its E-interval while the
      // rest of the window stays put), and only objects with atoms inside E
      // survive all of them
      for (const auto& q : spec.universe) {
        if (fixed.count(q)) continue;
        out.gens.push_back(rz::nudge(spec.universe, q, E));
      }
      return out;
    }
    case GroupSpec::Kind::Generated: {
      auto [elems, complete] = close_group(spec.generators, spec.closure_bound);
      for (const auto& p : elems) {
        bool ok = true;
        for (const auto& a : E)
          if (p.moves(a)) ok = false;
        if (ok && !p.is_identity()) out.gens.push_back(p);
      }
      out.complete = complete;
      return out;
    }
  }
  return out;
}

SupportResult is_support(const SupportClaim& claim, const GroupSpec& spec) {
  auto universe = spec.universe_atoms();
  std::set<Atom> uni(universe.begin(), universe.end());
  for (const auto& a : claim.object.atoms())
    if (!uni.count(a))
      throw ArgumentError("object atom outside the truncated universe: " + a.str());

  GeneratorSet gens = fix_generators(spec, claim.E);
  for (const auto& g : gens.gens) {
    if (g.act(claim.object) != claim.object)
      return {Verdict::Fails, g};
  }
  // generators all fix the object, hence so does the group they generate
  if (gens.complete) return {Verdict::Holds, std::nullopt};
  return {Verdict::Inconclusive, std::nullopt};
}

std::set<HF> orbit(const HF& x, const GroupSpec& spec, const std::vector<Atom>& E,
                   std::size_t max_size) {
  GeneratorSet gens = fix_generators(spec, E);
  std::set<HF> seen{x};
  std::deque<HF> work{x};
  while (!work.empty()) {
    HF cur = work.front();
    work.pop_front();
    for (const auto& g : gens.gens) {
      HF next = g.act(cur);
      if (seen.count(next)) continue;
      if (seen.size() >= max_size) throw OrbitOverflow(seen, max_size);
      seen.insert(next);
      work.push_back(next);
    }
  }
  return seen;
}

}  // namespace chlab
