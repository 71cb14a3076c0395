#include "chlab/hf.hpp"

#include <algorithm>
#include <sstream>

#include "chlab/errors.hpp"

namespace chlab {

HF::HF() { *this = set({}); }

HF HF::atom(Atom a) {
  auto d = std::make_shared<Data>();
  d->k = HFKind::AtomRef;
  d->a.push_back(std::move(a));
  return HF(std::move(d));
}

HF HF::set(std::vector<HF> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto d = std::make_shared<Data>();
  d->k = HFKind::Set;
  d->kids = std::move(members);
  return HF(std::move(d));
}

HF HF::pair(HF first, HF second) {
  auto d = std::make_shared<Data>();
  d->k = HFKind::Pair;
  d->kids.push_back(std::move(first));
  d->kids.push_back(std::move(second));
  return HF(std::move(d));
}

HF HF::seq(std::vector<HF> items) {
  auto d = std::make_shared<Data>();
  d->k = HFKind::Seq;
  d->kids = std::move(items);
  return HF(std::move(d));
}

HF HF::set_of_atoms(const std::vector<Atom>& atoms) {
  std::vector<HF> ms;
  ms.reserve(atoms.size());
  for (const auto& a : atoms) ms.push_back(HF::atom(a));
  return set(std::move(ms));
}

HF HF::seq_of_atoms(const std::vector<Atom>& atoms) {
  std::vector<HF> ms;
  ms.reserve(atoms.size());
  for (const auto& a : atoms) ms.push_back(HF::atom(a));
  return seq(std::move(ms));
}

HF HF::pair_of_atoms(const Atom& a, const Atom& b) {
  return pair(HF::atom(a), HF::atom(b));
}

const Atom& HF::as_atom() const {
  if (kind() != HFKind::AtomRef) throw ArgumentError("not an atom reference");
  return d_->a[0];
}

bool HF::contains(const HF& member) const {
  return std::binary_search(d_->kids.begin(), d_->kids.end(), member);
}

int HF::compare(const HF& other) const {
  if (d_ == other.d_) return 0;
  if (d_->k != other.d_->k)
    return static_cast<int>(d_->k) < static_cast<int>(other.d_->k) ? -1 : 1;
  if (d_->k == HFKind::AtomRef) return d_->a[0].compare(other.d_->a[0]);
  const auto& p = d_->kids;
  const auto& q = other.d_->kids;
  for (std::size_t i = 0; i < p.size() && i < q.size(); ++i)
    if (int c = p[i].compare(q[i])) return c;
  if (p.size() != q.size()) return p.size() < q.size() ? -1 : 1;
  return 0;
}

void HF::atoms_into(std::set<Atom>& out) const {
  if (kind() == HFKind::AtomRef) {
    out.insert(d_->a[0]);
    return;
  }
  for (const auto& k : d_->kids) k.atoms_into(out);
}

std::set<Atom> HF::atoms() const {
  std::set<Atom> out;
  atoms_into(out);
  return out;
}

std::vector<Atom> HF::flat_atoms() const {
  std::vector<Atom> out;
  if (kind() == HFKind::AtomRef) {
    out.push_back(as_atom());
    return out;
  }
  out.reserve(size());
  for (const auto& k : d_->kids) out.push_back(k.as_atom());
  return out;
}

HF HF::lower_to_sets(const HF& x) {
  switch (x.kind()) {
    case HFKind::AtomRef:
      return x;
    case HFKind::Set: {
      std::vector<HF> ms;
      ms.reserve(x.size());
      for (const auto& k : x.kids()) ms.push_back(lower_to_sets(k));
      return set(std::move(ms));
    }
    case HFKind::Pair: {
      HF a = lower_to_sets(x.first());
      HF b = lower_to_sets(x.second());
      return set({set({a}), set({a, b})});
    }
    case HFKind::Seq: {
      HF acc = set({empty_set()});  // terminator {∅}
      for (auto it = x.kids().rbegin(); it != x.kids().rend(); ++it) {
        HF h = lower_to_sets(*it);
        acc = set({set({h}), set({h, acc})});
      }
      return acc;
    }
  }
  throw InternalInvariantError("unreachable hf kind");
}

std::size_t HF::depth() const {
  if (kind() == HFKind::AtomRef) return 0;
  std::size_t d = 0;
  for (const auto& k : d_->kids) d = std::max(d, k.depth());
  return d + 1;
}

std::string HF::str() const {
  std::ostringstream os;
  switch (kind()) {
    case HFKind::AtomRef:
      os << as_atom().str();
      break;
    case HFKind::Set: {
      os << "{";
      for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ",";
        os << kids()[i].str();
      }
      os << "}";
      break;
    }
    case HFKind::Pair:
      os << "<" << first().str() << "," << second().str() << ">";
      break;
    case HFKind::Seq: {
      os << "<";
      for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ",";
        os << kids()[i].str();
      }
      os << ">";
      break;
    }
  }
  return os.str();
}

nlohmann::json HF::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  switch (kind()) {
    case HFKind::AtomRef:
      return {{"atom", as_atom().to_json()}};
    case HFKind::Set:
      for (const auto& k : kids()) arr.push_back(k.to_json());
      return {{"set", arr}};
    case HFKind::Pair:
      return {{"pair", {first().to_json(), second().to_json()}}};
    case HFKind::Seq:
      for (const auto& k : kids()) arr.push_back(k.to_json());
      return {{"seq", arr}};
  }
  throw InternalInvariantError("unreachable hf kind");
}

HF HF::from_json(const nlohmann::json& j) {
  if (j.contains("atom")) return atom(Atom::from_json(j.at("atom")));
  if (j.contains("set")) {
    std::vector<HF> ms;
    for (const auto& m : j.at("set")) ms.push_back(from_json(m));
    return set(std::move(ms));
  }
  if (j.contains("pair")) {
    const auto& p = j.at("pair");
    if (p.size() != 2) throw ArgumentError("pair must have two components");
    return pair(from_json(p[0]), from_json(p[1]));
  }
  if (j.contains("seq")) {
    std::vector<HF> ms;
    for (const auto& m : j.at("seq")) ms.push_back(from_json(m));
    return seq(std::move(ms));
  }
  throw ArgumentError("unknown hf object encoding");
}

}  // namespace chlab
