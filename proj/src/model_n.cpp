#include "chlab/model_n.hpp"

#include <algorithm>
#include <deque>

#include "chlab/errors.hpp"
#include "chlab/kinds.hpp"

namespace chlab {

namespace {

std::set<Atom> atom_set(const std::vector<Atom>& v) { return {v.begin(), v.end()}; }

void require_within(const HF& x, const std::set<Atom>& universe, const char* what) {
  for (const auto& a : x.atoms())
    if (!universe.count(a))
      throw ArgumentError(std::string(what) + " uses a foreign atom: " + a.str());
}

// Grows an injective atom map by positional matching against an assignment
// table; `ok` drops on any functional or injectivity conflict.
struct Placement {
  std::map<Atom, Atom> map;
  std::map<Atom, Atom> used;  // image -> preimage
  bool ok = true;
  bool grew = false;

  void place(const Atom& from, const Atom& to) {
    auto it = map.find(from);
    if (it != map.end()) {
      if (it->second != to) ok = false;
      return;
    }
    auto ut = used.find(to);
    if (ut != used.end()) {
      ok = false;
      return;
    }
    map.emplace(from, to);
    used.emplace(to, from);
    grew = true;
  }

  std::optional<HF> image_of(const HF& set) const {
    std::vector<HF> ms;
    ms.reserve(set.size());
    for (const auto& k : set.kids()) {
      auto it = map.find(k.as_atom());
      if (it == map.end()) return std::nullopt;
      ms.push_back(HF::atom(it->second));
    }
    return HF::set(std::move(ms));
  }

  // match image pairs of e and pi(e) positionally
  void propagate_table(const std::map<HF, HF>& table) {
    for (const auto& [e, p] : table) {
      if (!ok) return;
      auto e_img = image_of(e);
      if (!e_img) continue;
      auto it = table.find(*e_img);
      if (it == table.end()) {
        ok = false;  // truncation too short to close
        return;
      }
      place(p.first().as_atom(), it->second.first().as_atom());
      place(p.second().as_atom(), it->second.second().as_atom());
    }
  }
};

std::optional<Perm> finish_automorphism(Placement& pl, const ModelN& model) {
  if (!pl.ok) return std::nullopt;
  for (const auto& a : model.atoms)
    if (!pl.map.count(a)) return std::nullopt;
  Perm pi = Perm::from_map(pl.map);
  for (const auto& [e, p] : model.h) {
    auto it = model.h.find(pi.act(e));
    if (it == model.h.end() || it->second != pi.act(p)) return std::nullopt;
  }
  return pi;
}

}  // namespace

bool ModelN::has_atom(const Atom& a) const {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

void ModelN::add_atom(const Atom& a) {
  if (!has_atom(a)) atoms.push_back(a);
}

void ModelN::assign(const HF& input, const HF& pair) {
  if (input.kind() != HFKind::Set) throw ArgumentError("h input must be a finite set");
  if (pair.kind() != HFKind::Pair) throw ArgumentError("h image must be an ordered pair");
  auto uni = atom_set(atoms);
  require_within(input, uni, "h input");
  require_within(pair, uni, "h image");
  for (const auto& [e, p] : h) {
    if (p == pair && !(e == input))
      throw ArgumentError("h image already used by " + e.str());
  }
  auto [it, fresh] = h.emplace(input, pair);
  if (!fresh && it->second != pair)
    throw ArgumentError("h already assigns " + input.str());
}

std::vector<HF> ModelN::frontier(std::optional<std::size_t> max_set_size) const {
  std::vector<HF> out;
  for_each_subset(atoms, max_set_size, [&](const HF& e) {
    if (h.find(e) == h.end()) out.push_back(e);
    return true;
  });
  return out;
}

nlohmann::json ModelN::to_json(std::optional<std::size_t> frontier_cap) const {
  nlohmann::json ja = nlohmann::json::array();
  for (const auto& a : atoms) ja.push_back(a.to_json());
  nlohmann::json jh = nlohmann::json::array();
  for (const auto& [e, p] : h) jh.push_back({e.to_json(), p.to_json()});
  nlohmann::json j = {{"atoms", ja}, {"h", jh}};
  if (frontier_cap) {
    nlohmann::json jf = nlohmann::json::array();
    for (const auto& e : frontier(*frontier_cap)) jf.push_back(e.to_json());
    j["frontier"] = jf;
    j["frontier_max_set_size"] = *frontier_cap;
  }
  return j;
}

ModelN ModelN::from_json(const nlohmann::json& j) {
  ModelN m;
  for (const auto& a : j.at("atoms")) m.atoms.push_back(Atom::from_json(a));
  for (const auto& row : j.at("h"))
    m.assign(HF::from_json(row.at(0)), HF::from_json(row.at(1)));
  return m;
}

LeqResult leq_n(const ModelN& m1, const ModelN& m2) {
  auto a1 = atom_set(m1.atoms);
  auto a2 = atom_set(m2.atoms);
  for (const auto& a : m1.atoms)
    if (!a2.count(a)) return {false, LeqViolation{HF::atom(a), HF::atom(a), "atoms"}};

  for (const auto& [e, p] : m1.h) {
    auto it = m2.h.find(e);
    if (it == m2.h.end() || it->second != p)
      return {false, LeqViolation{e, p, "h"}};
  }

  for (const auto& [e, p] : m2.h) {
    bool inside = true;
    for (const auto& a : e.atoms())
      if (!a1.count(a)) inside = false;
    if (inside) continue;  // e is a subset of m1's atoms: no range condition
    for (const auto& a : p.atoms())
      if (a1.count(a)) return {false, LeqViolation{e, p, "h"}};
  }
  return {};
}

ModelN amalgamate_n(const ModelN& m1, const ModelN& m2, std::size_t stages,
                    std::optional<std::size_t> max_set_size, AtomForge* forge) {
  AtomForge local;
  AtomForge& fg = forge ? *forge : local;

  // compatibility over the shared part
  for (const auto& [e, p] : m1.h) {
    auto it = m2.h.find(e);
    if (it != m2.h.end() && it->second != p)
      throw AmalgamationError("models conflict on " + e.str());
  }
  std::map<HF, HF> image_owner;
  for (const auto& [e, p] : m1.h) image_owner.emplace(p, e);
  for (const auto& [e, p] : m2.h) {
    auto [it, fresh] = image_owner.emplace(p, e);
    if (!fresh && it->second != e)
      throw AmalgamationError("images collide: " + it->second.str() + " and " + e.str() +
                              " both map to " + p.str());
  }

  ModelN out;
  for (const auto& a : m1.atoms) out.add_atom(a);
  for (const auto& a : m2.atoms) out.add_atom(a);
  out.h = m1.h;
  for (const auto& [e, p] : m2.h) out.h.emplace(e, p);

  // both inputs must sit strongly inside their union
  if (!leq_n(m1, out).ok || !leq_n(m2, out).ok)
    throw AmalgamationError("inputs do not extend their intersection strongly");

  for (std::size_t stage = 0; stage < stages; ++stage) {
    fg.set_stage(static_cast<std::int64_t>(stage));
    std::vector<HF> todo = out.frontier(max_set_size);
    for (const HF& e : todo) {
      Atom a = fg.fresh("n-amalgam.pair.0");
      Atom b = fg.fresh("n-amalgam.pair.1");
      out.add_atom(a);
      out.add_atom(b);
      out.h.emplace(e, HF::pair_of_atoms(a, b));
    }
  }
  return out;
}

XyzExtension xyz_extension_n(const ModelN& n1, std::size_t stages,
                             std::optional<std::size_t> max_set_size) {
  AtomForge fg;
  Atom x = fg.fresh("xyz.x");
  Atom y = fg.fresh("xyz.y");
  Atom z = fg.fresh("xyz.z");

  ModelN m = n1;
  m.add_atom(x);
  m.add_atom(y);
  m.add_atom(z);

  XyzExtension ext(std::move(m), x, y, z);
  std::int64_t counter = 0;
  auto next_aux = [&]() {
    Atom a = Atom::fresh(0, "xyz.aux", counter++);
    ext.aux.push_back(a);
    ext.model.add_atom(a);
    return a;
  };
  std::set<Atom> xyz = {x, y, z};

  for (std::size_t stage = 0; stage < stages; ++stage) {
    std::vector<HF> todo = ext.model.frontier(max_set_size);
    for (const HF& e : todo) {
      std::vector<Atom> met;
      for (const auto& a : xyz)
        if (e.contains(HF::atom(a))) met.push_back(a);
      HF image = HF::empty_set();
      switch (met.size()) {
        case 0:
        case 3: {
          Atom an = next_aux();
          Atom am = next_aux();
          image = HF::pair_of_atoms(an, am);
          break;
        }
        case 1: {
          image = HF::pair_of_atoms(met[0], next_aux());
          break;
        }
        case 2: {
          Atom v = x;
          for (const auto& c : xyz)
            if (c != met[0] && c != met[1]) v = c;
          image = HF::pair_of_atoms(v, next_aux());
          break;
        }
      }
      ext.model.h.emplace(e, image);
    }
  }
  return ext;
}

std::optional<Perm> xyz_automorphism(const XyzExtension& ext, const Perm& xyz_perm) {
  // seed with the {x,y,z} permutation and the pointwise-fixed rest; the
  // auxiliary atoms of e are matched against the auxiliary atoms of pi(e)
  std::set<Atom> aux(ext.aux.begin(), ext.aux.end());
  Placement pl;
  for (const auto& a : {ext.x, ext.y, ext.z}) pl.place(a, xyz_perm.apply(a));
  for (const auto& a : ext.model.atoms)
    if (!pl.map.count(a) && !aux.count(a)) pl.place(a, a);

  do {
    pl.grew = false;
    pl.propagate_table(ext.model.h);
    if (!pl.ok) return std::nullopt;
  } while (pl.grew);
  return finish_automorphism(pl, ext.model);
}

CopyTower copy_tower_n(const ModelN& n1, std::size_t stages,
                       std::optional<std::size_t> max_set_size) {
  AtomForge fg;
  CopyTower tower;
  tower.base = n1;
  tower.model = n1;
  for (const char* r : {"tower.u.0", "tower.u.1", "tower.u.2"}) {
    Atom a = fg.fresh(r);
    tower.u.push_back(a);
    tower.model.add_atom(a);
  }
  std::set<Atom> base_atoms = atom_set(n1.atoms);

  for (std::size_t stage = 0; stage < stages; ++stage) {
    fg.set_stage(static_cast<std::int64_t>(stage));
    TowerStage st;
    st.g1_atoms = tower.model.atoms;

    // fresh pair for every unfulfilled set over the working atoms
    st.handled = tower.model.frontier(max_set_size);
    for (const HF& e : st.handled) {
      Atom xe = fg.fresh("tower.pair.x");
      Atom ye = fg.fresh("tower.pair.y");
      tower.model.add_atom(xe);
      tower.model.add_atom(ye);
      tower.model.h.emplace(e, HF::pair_of_atoms(xe, ye));
      st.pair_of.emplace(e, std::make_pair(xe, ye));
    }

    // mirror copy of everything outside the base, with reversed pairs
    for (const auto& a : st.g1_atoms) {
      if (base_atoms.count(a)) continue;
      Atom copy = fg.fresh("tower.copy");
      st.tau.emplace(a, copy);
      tower.model.add_atom(copy);
    }
    auto tau_of = [&](const HF& e) {
      std::vector<HF> ms;
      for (const auto& k : e.kids()) {
        Atom a = k.as_atom();
        auto it = st.tau.find(a);
        ms.push_back(HF::atom(it == st.tau.end() ? a : it->second));
      }
      return HF::set(std::move(ms));
    };
    for (const HF& e : st.handled) {
      HF mirrored = tau_of(e);
      if (mirrored == e) continue;  // set inside the base: nothing to mirror
      const auto& [xe, ye] = st.pair_of.at(e);
      tower.model.h.emplace(mirrored, HF::pair_of_atoms(ye, xe));
    }
    tower.stages.push_back(std::move(st));
  }
  return tower;
}

std::optional<Perm> tower_transposition(const CopyTower& tower, std::size_t stage) {
  if (stage >= tower.stages.size()) return std::nullopt;
  const TowerStage& st = tower.stages[stage];

  Placement pl;
  for (const auto& a : tower.base.atoms) pl.place(a, a);
  for (const auto& [a, copy] : st.tau) {
    pl.place(a, copy);
    pl.place(copy, a);
  }

  // positional matching through the table, plus the copy rule of every later
  // stage: the stage-s copy of a maps to the stage-s copy of pi(a)
  do {
    pl.grew = false;
    pl.propagate_table(tower.model.h);
    if (!pl.ok) return std::nullopt;
    for (std::size_t s = stage + 1; s < tower.stages.size(); ++s) {
      for (const auto& [a, copy] : tower.stages[s].tau) {
        auto it = pl.map.find(a);
        if (it == pl.map.end()) continue;
        auto to = tower.stages[s].tau.find(it->second);
        if (to == tower.stages[s].tau.end()) return std::nullopt;
        pl.place(copy, to->second);
        if (!pl.ok) return std::nullopt;
      }
    }
  } while (pl.grew);
  return finish_automorphism(pl, tower.model);
}

std::set<Atom> closure_n(const std::set<Atom>& a0, const ModelN& m) {
  std::set<Atom> cl = a0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [e, p] : m.h) {
      bool e_in = true;
      for (const auto& a : e.atoms())
        if (!cl.count(a)) e_in = false;
      if (e_in) {
        for (const auto& a : p.atoms())
          if (cl.insert(a).second) grew = true;
      }
      bool p_in = true;
      for (const auto& a : p.atoms())
        if (!cl.count(a)) p_in = false;
      if (p_in) {
        for (const auto& a : e.atoms())
          if (cl.insert(a).second) grew = true;
      }
    }
  }
  return cl;
}

}  // namespace chlab
