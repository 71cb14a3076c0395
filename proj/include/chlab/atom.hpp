#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace chlab {

// Exact rational, normalized (den > 0, gcd(|num|, den) == 1).
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n, std::int64_t d);

  static Rat parse(const std::string& s);  // "p/q" or "p"
  std::string str() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b);
};

Rat midpoint(const Rat& a, const Rat& b);

enum class AtomTag : std::uint8_t { Base, RnTuple, RcPos, RzRational, Fresh };

// Ground element of a model universe. Structural identity on (tag, payload);
// copies are cheap (shared immutable payload).
//
// Payloads:
//   Base       id
//   RnTuple    level >= 1, component tuple (atoms of lower levels), eps bit
//   RcPos      triple index, position 0/1/2 (printed a/b/c)
//   RzRational exact rational value
//   Fresh      stage, reason string, serial  (construction provenance)
class Atom {
 public:
  static Atom base(std::int64_t id);
  static Atom rn_tuple(std::int64_t level, std::vector<Atom> parts, int eps);
  static Atom rc(std::int64_t triple, int pos);
  static Atom rz(Rat value);
  static Atom fresh(std::int64_t stage, std::string reason, std::int64_t serial);

  AtomTag tag() const { return d_->tag; }
  std::int64_t id() const { return d_->i0; }               // Base
  std::int64_t level() const { return d_->i0; }            // RnTuple
  const std::vector<Atom>& parts() const { return d_->parts; }
  int eps() const { return static_cast<int>(d_->i1); }     // RnTuple
  std::int64_t triple() const { return d_->i0; }           // RcPos
  int pos() const { return static_cast<int>(d_->i1); }     // RcPos
  Rat value() const { return Rat(d_->i0, d_->i1); }        // RzRational
  std::int64_t stage() const { return d_->i0; }            // Fresh
  const std::string& reason() const { return d_->s; }      // Fresh
  std::int64_t serial() const { return d_->i1; }           // Fresh

  // Total order: by tag, then payload (tuples lexicographically).
  int compare(const Atom& other) const;
  friend bool operator==(const Atom& a, const Atom& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Atom& a, const Atom& b) { return a.compare(b) != 0; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.compare(b) < 0; }

  std::string str() const;
  nlohmann::json to_json() const;
  static Atom from_json(const nlohmann::json& j);

 private:
  struct Data {
    AtomTag tag;
    std::int64_t i0 = 0;
    std::int64_t i1 = 0;
    std::string s;
    std::vector<Atom> parts;
  };
  explicit Atom(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Allocates fresh atoms with (stage, reason, serial) provenance. Serials are
// unique per forge, so every block minted through one forge is disjoint from
// every other by construction.
class AtomForge {
 public:
  explicit AtomForge(std::int64_t stage = 0) : stage_(stage) {}
  void set_stage(std::int64_t stage) { stage_ = stage; }
  std::int64_t stage() const { return stage_; }
  Atom fresh(const std::string& reason) {
    return Atom::fresh(stage_, reason, serial_++);
  }

 private:
  std::int64_t stage_;
  std::int64_t serial_ = 0;
};

}  // namespace chlab
