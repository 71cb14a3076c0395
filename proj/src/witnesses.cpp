#include "chlab/witnesses.hpp"

#include <algorithm>
#include <sstream>

namespace chlab {

namespace {

nlohmann::json atoms_json(const std::vector<Atom>& atoms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : atoms) arr.push_back(a.to_json());
  return arr;
}

}  // namespace

nlohmann::json ExtractionRound::to_json() const {
  nlohmann::json j = {{"known", atoms_json(known)},
                      {"probe", probe.to_json()},
                      {"answer", answer.to_json()}};
  j["found"] = found ? found->to_json() : nlohmann::json();
  return j;
}

nlohmann::json ExtractionTrace::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rounds) rs.push_back(r.to_json());
  return {{"oracle_seed", oracle_seed}, {"rounds", rs}};
}

nlohmann::json PairMapsRound::to_json() const {
  return {{"block", atoms_json(block)},
          {"spread", spread.to_json()},
          {"fresh", atoms_json(fresh)}};
}

nlohmann::json PairMapsTrace::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rounds) rs.push_back(r.to_json());
  return {{"f_seed", f_seed}, {"g_seed", g_seed}, {"rounds", rs}};
}

Extraction extract_from_fin_to_square(InjectionOracle& h, const std::vector<Atom>& seed,
                                      std::size_t n) {
  if (seed.size() != 5) throw ArgumentError("extraction needs exactly 5 seed atoms");
  {
    std::set<Atom> distinct(seed.begin(), seed.end());
    if (distinct.size() != 5) throw ArgumentError("seed atoms must be pairwise distinct");
  }
  if (n < 5) throw ArgumentError("extraction length must be at least 5");

  Extraction out;
  out.trace.oracle_seed = h.seed();
  out.atoms = seed;
  std::set<Atom> known(seed.begin(), seed.end());

  while (out.atoms.size() < n) {
    std::optional<ExtractionRound> round;
    for_each_subset(out.atoms, std::nullopt, [&](const HF& u) {
      const HF& ans = h.query(u);
      if (ans.kind() != HFKind::Pair)
        throw OracleError("fin-to-square oracle answered with a non-pair for " + u.str());
      Atom x = ans.first().as_atom();
      Atom y = ans.second().as_atom();
      std::optional<Atom> fresh;
      if (!known.count(x))
        fresh = x;
      else if (!known.count(y))
        fresh = y;
      if (!fresh) return true;  // keep scanning
      round = ExtractionRound{out.atoms, u, ans, fresh};
      return false;
    });
    if (!round) {
      std::ostringstream os;
      os << "no subset image escaped a window of " << out.atoms.size()
         << " atoms; the oracle cannot be injective";
      throw InternalInvariantError(os.str());
    }
    known.insert(*round->found);
    out.atoms.push_back(*round->found);
    out.trace.rounds.push_back(std::move(*round));
  }
  return out;
}

HF finite_to_one_seq_to_fin(const AtomSupply& embed, const std::vector<Atom>& s) {
  auto iota = [&](const Atom& a) {
    auto idx = embed.index_of(a);
    if (!idx) return a;
    return embed.at(2 * *idx + 1);
  };
  std::vector<Atom> shifted;
  shifted.reserve(s.size());
  for (const auto& a : s) shifted.push_back(iota(a));

  std::uint64_t code = seq_code(shifted);
  std::vector<Atom> members = shifted;
  members.push_back(embed.at(2 * static_cast<std::size_t>(code)));
  return HF::set_of_atoms(members);
}

std::vector<std::vector<Atom>> finite_to_one_fiber(const AtomSupply& embed,
                                                   const std::vector<Atom>& ground,
                                                   std::size_t maxlen, const HF& target) {
  std::vector<std::vector<Atom>> fiber;
  std::vector<Atom> word;
  std::function<void()> rec = [&]() {
    if (finite_to_one_seq_to_fin(embed, word) == target) fiber.push_back(word);
    if (word.size() == maxlen) return;
    for (const auto& a : ground) {
      word.push_back(a);
      rec();
      word.pop_back();
    }
  };
  rec();
  return fiber;
}

PairMapsExtraction extract_from_pair_maps(InjectionOracle& f, InjectionOracle& g,
                                          const Atom& a0, std::size_t n,
                                          std::size_t min_rounds) {
  PairMapsExtraction out;
  out.trace.f_seed = f.seed();
  out.trace.g_seed = g.seed();

  std::vector<Atom> pool = {a0};  // union of all blocks so far
  std::set<Atom> pool_set(pool.begin(), pool.end());
  std::vector<Atom> block = {a0};  // E_0
  std::set<Atom> produced;

  const std::size_t round_cap = 1000;
  for (std::size_t round = 0;; ++round) {
    if (round >= round_cap)
      throw InternalInvariantError("pair-maps extraction exceeded its round budget");

    // S_m = g(E_m), read off new distinct atoms in order of first appearance
    const HF& spread = g.query(HF::set_of_atoms(block));
    if (spread.kind() != HFKind::Seq)
      throw OracleError("fin-to-iseq oracle answered with a non-sequence");
    PairMapsRound rec;
    rec.block = block;
    rec.spread = spread;
    for (const auto& e : spread.kids()) {
      Atom a = e.as_atom();
      if (produced.insert(a).second) {
        rec.fresh.push_back(a);
        out.atoms.push_back(a);
      }
    }
    out.trace.rounds.push_back(std::move(rec));
    if (out.atoms.size() >= n && out.trace.rounds.size() >= std::max<std::size_t>(min_rounds, 1))
      break;

    // E_{m+1}: elements of the f-images over all pairs of the pool, minus the pool
    std::set<Atom> next;
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        const HF& img = f.query(HF::pair_of_atoms(a, b));
        if (img.kind() != HFKind::Set || img.size() != 2)
          throw OracleError("square-to-2set oracle answered with a non-2-set");
        for (const auto& m : img.kids()) {
          Atom x = m.as_atom();
          if (!pool_set.count(x)) next.insert(x);
        }
      }
    }
    if (next.empty())
      throw InternalInvariantError(
          "pair-maps extraction found an empty block; the f oracle cannot be injective");
    block.assign(next.begin(), next.end());
    for (const auto& a : block) {
      pool.push_back(a);
      pool_set.insert(a);
    }
  }
  if (out.atoms.size() > n) out.atoms.erase(out.atoms.begin() + n, out.atoms.end());
  return out;
}

}  // namespace chlab
