#include "chlab/atom.hpp"

#include <numeric>
#include <sstream>

#include "chlab/errors.hpp"

namespace chlab {

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArgumentError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s), 1);
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rat midpoint(const Rat& a, const Rat& b) {
  // (a+b)/2 without normalizing through huge denominators first.
  return Rat(a.num * b.den + b.num * a.den, 2 * a.den * b.den);
}

Atom Atom::base(std::int64_t id) {
  auto d = std::make_shared<Data>();
  d->tag = AtomTag::Base;
  d->i0 = id;
  return Atom(std::move(d));
}

Atom Atom::rn_tuple(std::int64_t level, std::vector<Atom> parts, int eps) {
  if (level < 1) throw ArgumentError("rn tuple atoms live at level >= 1");
  auto d = std::make_shared<Data>();
  d->tag = AtomTag::RnTuple;
  d->i0 = level;
  d->i1 = eps & 1;
  d->parts = std::move(parts);
  return Atom(std::move(d));
}

Atom Atom::rc(std::int64_t triple, int pos) {
  if (pos < 0 || pos > 2) throw ArgumentError("rc position must be 0, 1 or 2");
  auto d = std::make_shared<Data>();
  d->tag = AtomTag::RcPos;
  d->i0 = triple;
  d->i1 = pos;
  return Atom(std::move(d));
}

Atom Atom::rz(Rat value) {
  auto d = std::make_shared<Data>();
  d->tag = AtomTag::RzRational;
  d->i0 = value.num;
  d->i1 = value.den;
  return Atom(std::move(d));
}

Atom Atom::fresh(std::int64_t stage, std::string reason, std::int64_t serial) {
  auto d = std::make_shared<Data>();
  d->tag = AtomTag::Fresh;
  d->i0 = stage;
  d->i1 = serial;
  d->s = std::move(reason);
  return Atom(std::move(d));
}

int Atom::compare(const Atom& other) const {
  if (d_ == other.d_) return 0;
  auto cmp = [](auto a, auto b) { return a < b ? -1 : (a == b ? 0 : 1); };
  if (d_->tag != other.d_->tag)
    return cmp(static_cast<int>(d_->tag), static_cast<int>(other.d_->tag));
  switch (d_->tag) {
    case AtomTag::Base:
      return cmp(d_->i0, other.d_->i0);
    case AtomTag::RnTuple: {
      if (int c = cmp(d_->i0, other.d_->i0)) return c;
      const auto& p = d_->parts;
      const auto& q = other.d_->parts;
      for (std::size_t i = 0; i < p.size() && i < q.size(); ++i)
        if (int c = p[i].compare(q[i])) return c;
      if (int c = cmp(p.size(), q.size())) return c;
      return cmp(d_->i1, other.d_->i1);
    }
    case AtomTag::RcPos: {
      if (int c = cmp(d_->i0, other.d_->i0)) return c;
      return cmp(d_->i1, other.d_->i1);
    }
    case AtomTag::RzRational: {
      Rat a = value(), b = other.value();
      if (a < b) return -1;
      if (b < a) return 1;
      return 0;
    }
    case AtomTag::Fresh: {
      if (int c = cmp(d_->i0, other.d_->i0)) return c;
      if (int c = d_->s.compare(other.d_->s)) return c < 0 ? -1 : 1;
      return cmp(d_->i1, other.d_->i1);
    }
  }
  return 0;
}

std::string Atom::str() const {
  std::ostringstream os;
  switch (tag()) {
    case AtomTag::Base:
      os << "b" << id();
      break;
    case AtomTag::RnTuple: {
      os << "(" << level() << ",<";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) os << ",";
        os << parts()[i].str();
      }
      os << ">," << eps() << ")";
      break;
    }
    case AtomTag::RcPos:
      os << char('a' + pos()) << triple();
      break;
    case AtomTag::RzRational:
      os << value().str();
      break;
    case AtomTag::Fresh:
      os << "#" << stage() << "." << reason() << "." << serial();
      break;
  }
  return os.str();
}

nlohmann::json Atom::to_json() const {
  nlohmann::json payload;
  const char* tag = nullptr;
  switch (this->tag()) {
    case AtomTag::Base:
      tag = "base";
      payload = {{"id", id()}};
      break;
    case AtomTag::RnTuple: {
      tag = "rn-tuple";
      nlohmann::json tuple = nlohmann::json::array();
      for (const auto& a : parts()) tuple.push_back(a.to_json());
      payload = {{"level", level()}, {"tuple", tuple}, {"eps", eps()}};
      break;
    }
    case AtomTag::RcPos: {
      tag = "rc-position";
      std::string p(1, char('a' + pos()));
      payload = {{"triple", triple()}, {"pos", p}};
      break;
    }
    case AtomTag::RzRational:
      tag = "rz-rational";
      payload = {{"value", value().str()}};
      break;
    case AtomTag::Fresh:
      tag = "fresh";
      payload = {{"stage", stage()}, {"reason", reason()}, {"role", serial()}};
      break;
  }
  return {{"tag", tag}, {"payload", payload}};
}

Atom Atom::from_json(const nlohmann::json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  const auto& p = j.at("payload");
  if (tag == "base") return base(p.at("id").get<std::int64_t>());
  if (tag == "rn-tuple") {
    std::vector<Atom> tuple;
    for (const auto& t : p.at("tuple")) tuple.push_back(from_json(t));
    return rn_tuple(p.at("level").get<std::int64_t>(), std::move(tuple),
                    p.at("eps").get<int>());
  }
  if (tag == "rc-position") {
    const std::string pos = p.at("pos").get<std::string>();
    if (pos.size() != 1 || pos[0] < 'a' || pos[0] > 'c')
      throw ArgumentError("rc position must be a, b or c");
    return rc(p.at("triple").get<std::int64_t>(), pos[0] - 'a');
  }
  if (tag == "rz-rational") return rz(Rat::parse(p.at("value").get<std::string>()));
  if (tag == "fresh")
    return fresh(p.at("stage").get<std::int64_t>(), p.at("reason").get<std::string>(),
                 p.at("role").get<std::int64_t>());
  throw ArgumentError("unknown atom tag: " + tag);
}

}  // namespace chlab
