#include "chlab/limit.hpp"

#include <algorithm>
#include <sstream>

#include "chlab/errors.hpp"
#include "chlab/kinds.hpp"

namespace chlab {

namespace {

// submodel induced by an atom subset: the rows staying inside it
ModelN induced(const ModelN& m, const std::vector<Atom>& atoms) {
  std::set<Atom> s(atoms.begin(), atoms.end());
  ModelN sub;
  sub.atoms = atoms;
  for (const auto& [e, p] : m.h) {
    bool inside = true;
    for (const auto& a : e.atoms())
      if (!s.count(a)) inside = false;
    for (const auto& a : p.atoms())
      if (!s.count(a)) inside = false;
    if (inside) sub.h.emplace(e, p);
  }
  return sub;
}

std::vector<ModelN> scan_submodels(const ModelN& m, const LimitOptions& opts) {
  std::vector<ModelN> out;
  std::size_t scanned = 0;
  for_each_subset(m.atoms, opts.submodel_size, [&](const HF& subset) {
    if (scanned++ >= opts.submodel_scan) return false;
    std::vector<Atom> atoms = subset.flat_atoms();
    ModelN sub = induced(m, atoms);
    if (leq_n(sub, m).ok) out.push_back(std::move(sub));
    return true;
  });
  return out;
}

}  // namespace

LimitBuildN limit_stage_n(const ModelN& seed_model, const LimitOptions& opts) {
  LimitBuildN build;
  build.model = seed_model;
  if (opts.size_bound == 0) {
    build.log.push_back("size bound admits no extension; seed returned unchanged");
    return build;
  }

  AtomForge fg;
  for (std::size_t stage = 0; stage < opts.stage_bound; ++stage) {
    fg.set_stage(static_cast<std::int64_t>(stage));
    if (build.model.atoms.size() > opts.max_atoms) {
      build.truncated = true;
      break;
    }

    // (i) bare pattern copies over every scanned strong submodel
    auto submodels = scan_submodels(build.model, opts);
    std::ostringstream note;
    note << "stage " << stage << ": " << submodels.size() << " submodels scanned";
    build.log.push_back(note.str());
    for (const auto& sub : submodels) {
      for (std::size_t k = 1; k <= opts.size_bound; ++k) {
        CopyPairRecord rec;
        rec.stage = stage;
        rec.base = sub.atoms;
        for (std::size_t i = 0; i < k; ++i) {
          Atom l = fg.fresh("limit.bare.l");
          Atom r = fg.fresh("limit.bare.r");
          build.model.add_atom(l);
          build.model.add_atom(r);
          rec.left.push_back(l);
          rec.right.push_back(r);
        }
        build.copy_pairs.push_back(std::move(rec));
      }
    }
    if (build.model.atoms.size() > opts.max_atoms) {
      build.truncated = true;
      break;
    }

    // (ii) one capped fulfillment round with fresh disjoint pairs
    std::map<HF, std::pair<Atom, Atom>> round;
    for (const HF& e : build.model.frontier(opts.max_set_size)) {
      Atom a = fg.fresh("limit.pair.0");
      Atom b = fg.fresh("limit.pair.1");
      build.model.add_atom(a);
      build.model.add_atom(b);
      build.model.h.emplace(e, HF::pair_of_atoms(a, b));
      round.emplace(e, std::make_pair(a, b));
    }
    build.rounds.push_back(std::move(round));
  }
  return build;
}

LimitBuildZ limit_stage_z(const ModelZ& seed_model, const LimitOptions& opts) {
  LimitBuildZ build;
  build.model = seed_model;
  if (opts.size_bound == 0) {
    build.log.push_back("size bound admits no extension; seed returned unchanged");
    return build;
  }
  AtomForge fg;
  for (std::size_t stage = 0; stage < opts.stage_bound; ++stage) {
    fg.set_stage(static_cast<std::int64_t>(stage));
    if (build.model.atoms.size() > opts.max_atoms) {
      build.truncated = true;
      break;
    }
    for (std::size_t k = 1; k <= opts.size_bound; ++k)
      for (int copy = 0; copy < 2; ++copy)
        for (std::size_t i = 0; i < k; ++i)
          build.model.add_atom(fg.fresh("limit.bare"));

    PlainExtensionOptions pe;
    pe.seq_max_len = opts.max_set_size;
    pe.max_atoms = opts.max_atoms;
    try {
      build.model = plain_extension_z(build.model, 1, pe, &fg);
    } catch (const ResourceError&) {
      build.truncated = true;
      break;
    }
  }
  return build;
}

bool bare_pattern_embeds(const ModelN& m, std::size_t pattern_size) {
  // candidate atom subsets, freshest atoms first (patterns live near the top)
  std::vector<Atom> rev(m.atoms.rbegin(), m.atoms.rend());
  std::size_t scanned = 0;
  bool found = false;
  for_each_subset(rev, pattern_size, [&](const HF& subset) {
    if (subset.size() != pattern_size) return true;
    if (scanned++ > 5000) return false;
    std::set<Atom> u;
    for (const auto& k : subset.kids()) u.insert(k.as_atom());
    for (const auto& [e, p] : m.h) {
      bool inside = true;
      for (const auto& a : e.atoms())
        if (!u.count(a)) inside = false;
      if (inside) continue;
      for (const auto& a : p.atoms())
        if (u.count(a)) return true;  // image meets U: try the next subset
    }
    found = true;
    return false;
  });
  return found;
}

std::optional<Perm> moving_automorphism(const LimitBuildN& build,
                                        const std::vector<Atom>& fixed,
                                        const std::vector<Atom>& moved) {
  std::set<Atom> fixed_set(fixed.begin(), fixed.end());
  std::set<Atom> moved_set(moved.begin(), moved.end());

  for (const auto& rec : build.copy_pairs) {
    // the swap must cover every atom to be moved and avoid the fixed set
    std::set<Atom> pair_atoms(rec.left.begin(), rec.left.end());
    pair_atoms.insert(rec.right.begin(), rec.right.end());
    bool covers = true;
    for (const auto& a : moved_set)
      if (!pair_atoms.count(a)) covers = false;
    if (!covers) continue;
    bool clashes = false;
    for (const auto& a : pair_atoms)
      if (fixed_set.count(a)) clashes = true;
    if (clashes) continue;

    // seed: swap the two copies positionally, fix everything older
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
    for (std::size_t i = 0; i < rec.left.size(); ++i) {
      place(rec.left[i], rec.right[i]);
      place(rec.right[i], rec.left[i]);
    }
    for (const auto& a : build.model.atoms)
      if (!pair_atoms.count(a) && a.reason().rfind("limit.pair", 0) != 0) place(a, a);

    // fresh fulfillment pairs follow their inputs, stage by stage
    for (const auto& round : build.rounds) {
      if (!ok) break;
      for (const auto& [input, pr] : round) {
        bool ready = true;
        std::vector<HF> ms;
        for (const auto& k : input.kids()) {
          auto it = m.find(k.as_atom());
          if (it == m.end()) {
            ready = false;
            break;
          }
          ms.push_back(HF::atom(it->second));
        }
        if (!ready) {
          ok = false;
          break;
        }
        auto it = round.find(HF::set(std::move(ms)));
        if (it == round.end()) {
          ok = false;
          break;
        }
        place(pr.first, it->second.first);
        place(pr.second, it->second.second);
      }
    }
    if (!ok) continue;

    Perm pi = Perm::from_map(m);
    // audit: table equivariance, the fixed set pointwise, the moved set off itself
    bool good = true;
    for (const auto& a : fixed)
      if (pi.moves(a)) good = false;
    for (const auto& a : moved) {
      Atom img = pi.apply(a);
      if (moved_set.count(img) && !fixed_set.count(img)) good = false;
    }
    for (const auto& [e, p] : build.model.h) {
      auto it = build.model.h.find(pi.act(e));
      if (it == build.model.h.end() || it->second != pi.act(p)) good = false;
    }
    if (good) return pi;
  }
  return std::nullopt;
}

}  // namespace chlab
