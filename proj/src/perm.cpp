#include "chlab/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chlab/errors.hpp"

namespace chlab {

Perm Perm::from_map(std::map<Atom, Atom> fwd, bool partial) {
  std::set<Atom> images;
  for (const auto& [a, b] : fwd) {
    if (!images.insert(b).second)
      throw ArgumentError("permutation map is not injective at " + b.str());
  }
  if (!partial) {
    // bijection on carrier: images must equal keys
    for (const auto& [a, b] : fwd) {
      (void)a;
      if (fwd.find(b) == fwd.end())
        throw ArgumentError("image " + b.str() + " escapes the carrier");
    }
    for (auto it = fwd.begin(); it != fwd.end();) {
      if (it->first == it->second)
        it = fwd.erase(it);
      else
        ++it;
    }
  }
  Perm p;
  p.fwd_ = std::move(fwd);
  p.partial_ = partial;
  return p;
}

Perm Perm::transposition(const Atom& a, const Atom& b) {
  if (a == b) return Perm();
  return from_map({{a, b}, {b, a}});
}

Perm Perm::cycle(const std::vector<Atom>& atoms) {
  std::map<Atom, Atom> m;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    m.insert_or_assign(atoms[i], atoms[(i + 1) % atoms.size()]);
  return from_map(std::move(m));
}

bool Perm::is_identity() const {
  for (const auto& [a, b] : fwd_)
    if (a != b) return false;
  return true;
}

std::vector<Atom> Perm::carrier() const {
  std::vector<Atom> out;
  out.reserve(fwd_.size());
  for (const auto& [a, b] : fwd_) {
    (void)b;
    out.push_back(a);
  }
  return out;
}

Atom Perm::apply(const Atom& a) const {
  auto it = fwd_.find(a);
  if (it != fwd_.end()) return it->second;
  if (partial_) throw DomainError("atom outside partial map: " + a.str());
  return a;
}

bool Perm::moves(const Atom& a) const {
  auto it = fwd_.find(a);
  return it != fwd_.end() && it->second != a;
}

HF Perm::act(const HF& x) const {
  switch (x.kind()) {
    case HFKind::AtomRef:
      return HF::atom(apply(x.as_atom()));
    case HFKind::Set: {
      std::vector<HF> ms;
      ms.reserve(x.size());
      for (const auto& k : x.kids()) ms.push_back(act(k));
      return HF::set(std::move(ms));
    }
    case HFKind::Pair:
      return HF::pair(act(x.first()), act(x.second()));
    case HFKind::Seq: {
      std::vector<HF> ms;
      ms.reserve(x.size());
      for (const auto& k : x.kids()) ms.push_back(act(k));
      return HF::seq(std::move(ms));
    }
  }
  throw InternalInvariantError("unreachable hf kind");
}

Perm Perm::compose(const Perm& inner) const {
  if (partial_ || inner.partial_) {
    // defined where the chain is defined
    std::map<Atom, Atom> m;
    for (const auto& [a, b] : inner.fwd_) {
      auto it = fwd_.find(b);
      if (it != fwd_.end())
        m.insert_or_assign(a, it->second);
      else if (!partial_)
        m.insert_or_assign(a, b);
    }
    if (!inner.partial_) {
      for (const auto& [a, b] : fwd_)
        if (inner.fwd_.find(a) == inner.fwd_.end()) m.emplace(a, b);
    }
    return from_map(std::move(m), true);
  }
  std::map<Atom, Atom> m;
  for (const auto& [a, b] : inner.fwd_) m.emplace(a, apply(b));
  for (const auto& [a, b] : fwd_) m.emplace(a, b);
  return from_map(std::move(m));
}

Perm Perm::then(const Perm& next) const { return next.compose(*this); }

Perm Perm::inverse() const {
  std::map<Atom, Atom> m;
  for (const auto& [a, b] : fwd_) m.emplace(b, a);
  return from_map(std::move(m), partial_);
}

bool operator==(const Perm& a, const Perm& b) {
  return a.partial_ == b.partial_ && a.fwd_ == b.fwd_;
}

bool operator<(const Perm& a, const Perm& b) {
  if (a.partial_ != b.partial_) return a.partial_ < b.partial_;
  return a.fwd_ < b.fwd_;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, b] : fwd_) {
    if (!first) os << ", ";
    first = false;
    os << a.str() << "->" << b.str();
  }
  os << "}";
  return os.str();
}

nlohmann::json Perm::to_json() const {
  nlohmann::json carrier = nlohmann::json::array();
  nlohmann::json image = nlohmann::json::array();
  for (const auto& [a, b] : fwd_) {
    carrier.push_back(a.to_json());
    image.push_back(b.to_json());
  }
  nlohmann::json j = {{"carrier", carrier}, {"image", image}};
  if (partial_) j["partial"] = true;
  return j;
}

Perm Perm::from_json(const nlohmann::json& j) {
  std::map<Atom, Atom> m;
  const auto& carrier = j.at("carrier");
  const auto& image = j.at("image");
  if (carrier.size() != image.size())
    throw ArgumentError("carrier/image length mismatch");
  for (std::size_t i = 0; i < carrier.size(); ++i)
    m.insert_or_assign(Atom::from_json(carrier[i]), Atom::from_json(image[i]));
  return from_map(std::move(m), j.value("partial", false));
}

}  // namespace chlab
