#include <functional>
#include <map>
#include <set>
#include <vector>

#include "chlab/errors.hpp"
#include "chlab/kinds.hpp"
#include "doctest.h"

using namespace chlab;

namespace {

std::vector<Atom> ground(int k) {
  std::vector<Atom> g;
  for (int i = 0; i < k; ++i) g.push_back(Atom::base(i));
  return g;
}

// Independent oracle: count repetition-free sequences over a k-set by direct
// backtracking, no shared code with the library enumerators.
std::uint64_t brute_injseq_count(int k) {
  std::uint64_t total = 0;
  std::vector<bool> used(k, false);
  std::function<void(int)> rec = [&](int len) {
    ++total;  // the word built so far
    if (len == k) return;
    for (int v = 0; v < k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      rec(len + 1);
      used[v] = false;
    }
  };
  rec(0);
  return total;
}

std::vector<std::vector<int>> brute_all_seqs(int k, int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> w;
  std::function<void()> rec = [&]() {
    out.push_back(w);
    if ((int)w.size() == maxlen) return;
    for (int v = 0; v < k; ++v) {
      w.push_back(v);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("count_kind frozen values") {
  CHECK(count_kind(KindTag::FinSubsets, 5) == 32);
  CHECK(count_kind(KindTag::UnorderedPairs, 0) == 0);
  CHECK(count_kind(KindTag::OrderedPairs, 5) == 25);
  CHECK(brute_injseq_count(5) == 326);  // oracle pins the value
  CHECK(count_kind(KindTag::InjSeq, 5) == 326);
  CHECK(count_kind(KindTag::UnorderedPairs, 5) == 10);
  CHECK(count_kind(KindTag::Seq, 3, 2) == 1 + 3 + 9);
  CHECK_THROWS_AS(count_kind(KindTag::Seq, 3), ArgumentError);
}

TEST_CASE("finite chain holds from 5 and fails at 4") {
  for (std::uint64_t k = 5; k <= 10; ++k) {
    CHECK(count_kind(KindTag::UnorderedPairs, k) < count_kind(KindTag::OrderedPairs, k));
    CHECK(count_kind(KindTag::OrderedPairs, k) < count_kind(KindTag::FinSubsets, k));
    CHECK(count_kind(KindTag::FinSubsets, k) < count_kind(KindTag::InjSeq, k));
  }
  CHECK(count_kind(KindTag::OrderedPairs, 4) == 16);
  CHECK(count_kind(KindTag::FinSubsets, 4) == 16);  // chain breaks here
}

TEST_CASE("enum_kind canonical orders") {
  auto g2 = ground(2);
  auto fin = enum_kind(KindTag::FinSubsets, g2);
  REQUIRE(fin.size() == 4);
  CHECK(fin[0] == HF::empty_set());
  CHECK(fin[1] == HF::set_of_atoms({g2[0]}));
  CHECK(fin[2] == HF::set_of_atoms({g2[1]}));
  CHECK(fin[3] == HF::set_of_atoms({g2[0], g2[1]}));

  auto g3 = ground(3);
  auto p2 = enum_kind(KindTag::UnorderedPairs, g3);
  REQUIRE(p2.size() == 3);
  CHECK(p2[0] == HF::set_of_atoms({g3[0], g3[1]}));
  CHECK(p2[1] == HF::set_of_atoms({g3[0], g3[2]}));
  CHECK(p2[2] == HF::set_of_atoms({g3[1], g3[2]}));

  auto iseq = enum_kind(KindTag::InjSeq, g2);
  REQUIRE(iseq.size() == 5);
  CHECK(iseq[0] == HF::seq_of_atoms({}));
  CHECK(iseq[1] == HF::seq_of_atoms({g2[0]}));
  CHECK(iseq[2] == HF::seq_of_atoms({g2[1]}));
  CHECK(iseq[3] == HF::seq_of_atoms({g2[0], g2[1]}));
  CHECK(iseq[4] == HF::seq_of_atoms({g2[1], g2[0]}));

  CHECK_THROWS_AS(enum_kind(KindTag::FinSubsets, {Atom::base(0), Atom::base(0)}),
                  ArgumentError);
}

TEST_CASE("enum_kind emits exactly count_kind objects, no duplicates") {
  for (int k = 0; k <= 6; ++k) {
    auto g = ground(k);
    for (KindTag kind : {KindTag::FinSubsets, KindTag::OrderedPairs,
                         KindTag::UnorderedPairs, KindTag::InjSeq, KindTag::Seq}) {
      std::optional<std::uint64_t> maxlen;
      if (kind == KindTag::Seq) maxlen = 3;
      auto all = enum_kind(kind, g, maxlen);
      CHECK(all.size() == count_kind(kind, k, maxlen));
      std::set<HF> dedup(all.begin(), all.end());
      CHECK(dedup.size() == all.size());
    }
  }
}

TEST_CASE("lower_to_sets is injective across all enumerated objects") {
  for (int k = 1; k <= 4; ++k) {
    auto g = ground(k);
    std::map<HF, HF> lowered;  // image -> original
    std::set<HF> originals;    // kinds overlap (2-sets are finite sets, etc.)
    for (KindTag kind : {KindTag::FinSubsets, KindTag::OrderedPairs,
                         KindTag::UnorderedPairs, KindTag::InjSeq, KindTag::Seq}) {
      std::optional<std::uint64_t> maxlen;
      if (kind == KindTag::Seq) maxlen = 3;
      for (const auto& x : enum_kind(kind, g, maxlen)) {
        HF low = HF::lower_to_sets(x);
        auto [it, fresh] = lowered.emplace(low, x);
        if (!fresh) CHECK(it->second == x);  // only structurally equal objects may collide
        originals.insert(x);
      }
    }
    CHECK(lowered.size() == originals.size());
  }
}

TEST_CASE("seq_code over a fixed enumerated range") {
  auto g3 = ground(3);

  CHECK(seq_code({}) == 0);
  CHECK(seq_code({}, g3) == cantor_pair(0, 0));

  // all sequences of length <= 3 over the enumerated 3-set get pairwise
  // distinct codes, in particular those sharing a range
  auto words = brute_all_seqs(3, 3);
  std::set<std::uint64_t> codes;
  for (const auto& w : words) {
    std::vector<Atom> s;
    for (int v : w) s.push_back(g3[v]);
    CHECK(codes.insert(seq_code(s, g3)).second);
  }
  CHECK(codes.size() == words.size());

  // for fixed range size n and length l there are exactly n^l codes
  for (int l = 0; l <= 3; ++l) {
    std::set<std::uint64_t> at_len;
    for (const auto& w : brute_all_seqs(3, 3)) {
      if ((int)w.size() != l) continue;
      std::vector<Atom> s;
      for (int v : w) s.push_back(g3[v]);
      at_len.insert(seq_code(s, g3));
    }
    std::uint64_t expect = 1;
    for (int i = 0; i < l; ++i) expect *= 3;
    CHECK(at_len.size() == expect);
  }
}

TEST_CASE("seq_code fibers within a fixed range are singletons") {
  auto g3 = ground(3);
  std::map<std::uint64_t, std::vector<int>> fiber;
  for (const auto& w : brute_all_seqs(3, 3)) {
    std::vector<Atom> s;
    for (int v : w) s.push_back(g3[v]);
    auto code = seq_code(s, g3);
    auto it = fiber.find(code);
    if (it == fiber.end())
      fiber.emplace(code, w);
    else
      CHECK(it->second == w);
  }
}

TEST_CASE("default-range seq_code distinguishes length") {
  Atom a = Atom::base(7);
  CHECK(seq_code({a}) != seq_code({a, a}));
  // same order pattern over the induced enumeration -> same code
  Atom b = Atom::base(8);
  CHECK(seq_code({a, b}) == seq_code({b, a}));
}

TEST_CASE("atom and hf json round-trips") {
  Atom t = Atom::rn_tuple(1, {Atom::base(0), Atom::base(1)}, 1);
  CHECK(Atom::from_json(t.to_json()) == t);
  Atom c = Atom::rc(3, 2);
  CHECK(Atom::from_json(c.to_json()) == c);
  CHECK(c.to_json()["payload"]["pos"] == "c");
  Atom q = Atom::rz(Rat(3, 4));
  CHECK(q.to_json()["payload"]["value"] == "3/4");
  CHECK(Atom::from_json(q.to_json()) == q);
  Atom f = Atom::fresh(2, "pair", 5);
  CHECK(Atom::from_json(f.to_json()) == f);

  HF x = HF::set({HF::pair_of_atoms(t, c), HF::seq_of_atoms({c, f}), HF::atom(q)});
  CHECK(HF::from_json(x.to_json()) == x);
  // sets serialize members in canonical order
  auto j = x.to_json();
  REQUIRE(j.contains("set"));
  CHECK(HF::from_json(j["set"][0]) < HF::from_json(j["set"][1]));
}
