#include "chlab/oracle.hpp"

#include <algorithm>

namespace chlab {

AtomSupply AtomSupply::naturals() {
  AtomSupply s;
  s.natural_ = true;
  return s;
}

AtomSupply AtomSupply::from_list(std::vector<Atom> prefix, std::string ext_reason) {
  AtomSupply s;
  s.ext_reason_ = std::move(ext_reason);
  std::set<Atom> seen;
  for (const auto& a : prefix)
    if (!seen.insert(a).second)
      throw ArgumentError("supply prefix repeats " + a.str());
  s.atoms_ = std::move(prefix);
  for (std::size_t i = 0; i < s.atoms_.size(); ++i) s.index_.emplace(s.atoms_[i], i);
  return s;
}

void AtomSupply::extend(std::size_t upto) const {
  while (atoms_.size() <= upto) {
    Atom a = natural_ ? Atom::base(static_cast<std::int64_t>(atoms_.size()))
                      : Atom::fresh(0, ext_reason_, static_cast<std::int64_t>(atoms_.size()));
    index_.emplace(a, atoms_.size());
    atoms_.push_back(a);
  }
}

Atom AtomSupply::at(std::size_t i) const {
  extend(i);
  return atoms_[i];
}

std::optional<std::size_t> AtomSupply::index_of(const Atom& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

InjectionOracle InjectionOracle::from_table(std::vector<std::pair<HF, HF>> rows) {
  InjectionOracle o;
  o.table_backed_ = true;
  for (auto& [in, out] : rows) {
    auto [it, fresh] = o.table_.emplace(in, out);
    if (!fresh && it->second != out)
      throw ArgumentError("oracle table assigns two images to " + in.str());
  }
  return o;
}

InjectionOracle InjectionOracle::random(KindTag codomain, std::uint64_t seed,
                                        AtomSupply supply, std::size_t slack,
                                        std::size_t seq_max_len) {
  InjectionOracle o;
  o.codomain_ = codomain;
  o.seed_ = seed;
  o.rng_.seed(seed);
  o.supply_ = std::move(supply);
  o.slack_ = slack;
  o.seq_max_len_ = seq_max_len;
  return o;
}

void InjectionOracle::note_atoms(const HF& x) { x.atoms_into(seen_); }

HF InjectionOracle::generate(const HF& x) {
  note_atoms(x);
  std::size_t horizon = std::max<std::size_t>(seen_.size() + slack_, 2);
  auto pick = [&]() { return supply_.at(rng_() % horizon); };

  for (int attempt = 0; attempt < 4096; ++attempt) {
    HF candidate = HF::empty_set();
    switch (codomain_) {
      case KindTag::OrderedPairs: {
        candidate = HF::pair_of_atoms(pick(), pick());
        break;
      }
      case KindTag::UnorderedPairs: {
        Atom a = pick(), b = pick();
        if (a == b) continue;
        candidate = HF::set_of_atoms({a, b});
        break;
      }
      case KindTag::FinSubsets: {
        std::size_t len = rng_() % (seq_max_len_ + 1);
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < len; ++i) atoms.push_back(pick());
        candidate = HF::set_of_atoms(atoms);
        break;
      }
      case KindTag::InjSeq: {
        std::size_t len = 1 + rng_() % seq_max_len_;
        len = std::min(len, horizon);
        std::set<Atom> used;
        std::vector<Atom> atoms;
        int guard = 0;
        while (atoms.size() < len && guard++ < 1024) {
          Atom a = pick();
          if (used.insert(a).second) atoms.push_back(a);
        }
        candidate = HF::seq_of_atoms(atoms);
        break;
      }
      case KindTag::Seq: {
        std::size_t len = rng_() % (seq_max_len_ + 1);
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < len; ++i) atoms.push_back(pick());
        candidate = HF::seq_of_atoms(atoms);
        break;
      }
    }
    if (image_to_input_.find(candidate) == image_to_input_.end()) {
      note_atoms(candidate);
      return candidate;
    }
    // collision with an earlier answer: widen the horizon and retry
    horizon += 1 + horizon / 2;
  }
  throw OracleError("random oracle failed to find a fresh image");
}

const HF& InjectionOracle::query(const HF& x) {
  auto it = memo_.find(x);
  if (it != memo_.end()) return it->second;

  HF answer = HF::empty_set();
  if (table_backed_) {
    auto t = table_.find(x);
    if (t == table_.end())
      throw OracleError("table oracle has no answer for " + x.str());
    answer = t->second;
  } else {
    answer = generate(x);
  }

  auto clash = image_to_input_.find(answer);
  if (clash != image_to_input_.end())
    throw OracleFault("oracle injectivity fault: " + clash->second.str() + " and " +
                          x.str() + " share the image " + answer.str(),
                      clash->second, x);
  image_to_input_.emplace(answer, x);
  return memo_.emplace(x, std::move(answer)).first->second;
}

nlohmann::json InjectionOracle::memo_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [in, out] : memo_)
    rows.push_back({{"input", in.to_json()}, {"output", out.to_json()}});
  return rows;
}

}  // namespace chlab
