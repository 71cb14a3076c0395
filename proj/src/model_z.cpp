#include "chlab/model_z.hpp"

#include <algorithm>

#include "chlab/errors.hpp"
#include "chlab/kinds.hpp"

namespace chlab {

namespace {

bool over(const HF& x, const std::set<Atom>& atoms) {
  for (const auto& a : x.atoms())
    if (!atoms.count(a)) return false;
  return true;
}

bool meets(const HF& x, const std::set<Atom>& atoms) {
  for (const auto& a : x.atoms())
    if (atoms.count(a)) return true;
  return false;
}

struct ZRound {
  std::map<HF, std::vector<Atom>> f_blocks, g_blocks, h_blocks;
};

struct ZBuild {
  ModelZ model;
  std::vector<ZRound> rounds;
};

ZBuild build_plain_extension(const ModelZ& seed, std::size_t stages,
                             const PlainExtensionOptions& opts, AtomForge* forge) {
  AtomForge local;
  AtomForge& fg = forge ? *forge : local;

  ZBuild out;
  out.model = seed;
  for (std::size_t stage = 0; stage < stages; ++stage) {
    fg.set_stage(static_cast<std::int64_t>(stage));
    ZRound round;
    std::vector<Atom> snapshot = out.model.atoms;

    auto mint = [&](const char* reason, std::size_t count) {
      std::vector<Atom> fresh;
      for (std::size_t i = 0; i < count; ++i) {
        Atom a = fg.fresh(reason);
        out.model.add_atom(a);
        fresh.push_back(a);
      }
      if (out.model.atoms.size() > opts.max_atoms)
        throw ResourceError("plain extension exceeds atom bound", out.model.atoms.size());
      return fresh;
    };

    for_each_kind(KindTag::OrderedPairs, snapshot, std::nullopt, [&](const HF& p) {
      if (out.model.f.find(p) == out.model.f.end()) {
        auto fresh = mint("z-plain.f", 2);
        out.model.f.emplace(p, HF::set_of_atoms(fresh));
        round.f_blocks.emplace(p, std::move(fresh));
      }
      return true;
    });
    for_each_kind(KindTag::UnorderedPairs, snapshot, std::nullopt, [&](const HF& q) {
      if (out.model.g.find(q) == out.model.g.end()) {
        auto fresh = mint("z-plain.g", 3);
        out.model.g.emplace(q, HF::seq_of_atoms(fresh));
        round.g_blocks.emplace(q, std::move(fresh));
      }
      return true;
    });
    for_each_injseq(snapshot, opts.seq_max_len, [&](const HF& r) {
      if (out.model.h.find(r) == out.model.h.end()) {
        auto fresh = mint("z-plain.h", 3);
        out.model.h.emplace(r, HF::set_of_atoms(fresh));
        round.h_blocks.emplace(r, std::move(fresh));
      }
      return true;
    });
    out.rounds.push_back(std::move(round));
  }
  return out;
}

}  // namespace

bool ModelZ::has_atom(const Atom& a) const {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

void ModelZ::add_atom(const Atom& a) {
  if (!has_atom(a)) atoms.push_back(a);
}

nlohmann::json ModelZ::to_json() const {
  nlohmann::json ja = nlohmann::json::array();
  for (const auto& a : atoms) ja.push_back(a.to_json());
  auto table = [](const std::map<HF, HF>& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [in, out] : t) rows.push_back({in.to_json(), out.to_json()});
    return rows;
  };
  return {{"atoms", ja}, {"f", table(f)}, {"g", table(g)}, {"h", table(h)}};
}

ModelZ ModelZ::from_json(const nlohmann::json& j) {
  ModelZ m;
  for (const auto& a : j.at("atoms")) m.atoms.push_back(Atom::from_json(a));
  auto load = [](const nlohmann::json& rows, std::map<HF, HF>& t) {
    for (const auto& row : rows)
      t.emplace(HF::from_json(row.at(0)), HF::from_json(row.at(1)));
  };
  load(j.at("f"), m.f);
  load(j.at("g"), m.g);
  load(j.at("h"), m.h);
  return m;
}

LeqResult leq_z(const ModelZ& m1, const ModelZ& m2) {
  std::set<Atom> a1(m1.atoms.begin(), m1.atoms.end());
  std::set<Atom> a2(m2.atoms.begin(), m2.atoms.end());
  for (const auto& a : m1.atoms)
    if (!a2.count(a)) return {false, LeqViolation{HF::atom(a), HF::atom(a), "atoms"}};

  struct Row {
    const std::map<HF, HF>* small;
    const std::map<HF, HF>* big;
    const char* name;
  };
  for (const Row& r : {Row{&m1.f, &m2.f, "f"}, Row{&m1.g, &m2.g, "g"}, Row{&m1.h, &m2.h, "h"}}) {
    for (const auto& [in, out] : *r.small) {
      auto it = r.big->find(in);
      if (it == r.big->end() || it->second != out)
        return {false, LeqViolation{in, out, r.name}};
    }
    for (const auto& [in, out] : *r.big) {
      if (over(in, a1)) continue;
      if (meets(out, a1)) return {false, LeqViolation{in, out, r.name}};
    }
  }
  return {};
}

ModelZ plain_extension_z(const ModelZ& seed, std::size_t stages,
                         const PlainExtensionOptions& opts, AtomForge* forge) {
  return build_plain_extension(seed, stages, opts, forge).model;
}

std::optional<Perm> plain_extension_automorphism(const ModelZ& seed,
                                                 std::size_t stages,
                                                 const PlainExtensionOptions& opts,
                                                 const Perm& base) {
  ZBuild build = build_plain_extension(seed, stages, opts, nullptr);

  std::map<Atom, Atom> m;
  std::map<Atom, Atom> used;
  bool ok = true;
  auto place = [&](const Atom& from, const Atom& to) {
    auto it = m.find(from);
    if (it != m.end()) {
      if (it->second != to) ok = false;
      return;
    }
    if (used.count(to)) {
      ok = false;
      return;
    }
    m.emplace(from, to);
    used.emplace(to, from);
  };
  for (const auto& a : seed.atoms) place(a, base.apply(a));

  auto act_via = [&](const HF& x) {
    Perm partial_map = Perm::from_map(m, true);
    return partial_map.act(x);
  };

  // fresh blocks follow their inputs, round by round
  for (const auto& round : build.rounds) {
    if (!ok) break;
    for (const auto* blocks : {&round.f_blocks, &round.g_blocks, &round.h_blocks}) {
      for (const auto& [input, fresh] : *blocks) {
        HF moved = act_via(input);
        auto it = blocks->find(moved);
        if (it == blocks->end() || it->second.size() != fresh.size()) {
          ok = false;
          break;
        }
        for (std::size_t i = 0; i < fresh.size(); ++i) place(fresh[i], it->second[i]);
      }
      if (!ok) break;
    }
  }
  if (!ok) return std::nullopt;

  Perm pi = Perm::from_map(std::move(m));
  for (const auto* table : {&build.model.f, &build.model.g, &build.model.h}) {
    for (const auto& [in, out] : *table) {
      auto it = table->find(pi.act(in));
      if (it == table->end() || it->second != pi.act(out)) return std::nullopt;
    }
  }
  return pi;
}

std::set<Atom> closure_z(const std::set<Atom>& a0, const ModelZ& m) {
  std::set<Atom> cl = a0;
  bool grew = true;
  auto absorb = [&](const HF& x) {
    for (const auto& a : x.atoms())
      if (cl.insert(a).second) grew = true;
  };
  while (grew) {
    grew = false;
    for (const auto* table : {&m.f, &m.g, &m.h}) {
      for (const auto& [in, out] : *table) {
        if (over(in, cl)) absorb(out);   // forward image
        if (over(out, cl)) absorb(in);   // pre-image
      }
    }
  }
  return cl;
}

}  // namespace chlab
