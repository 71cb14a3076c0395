#include "chlab/kinds.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chlab/errors.hpp"

namespace chlab {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw ResourceError("count overflows 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > UINT64_MAX - a) throw ResourceError("count overflows 64 bits");
  return a + b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

void require_unique(const std::vector<Atom>& ground) {
  std::set<Atom> seen;
  for (const auto& a : ground)
    if (!seen.insert(a).second)
      throw ArgumentError("duplicate ground atom: " + a.str());
}

// Size-s index combinations of {0..n-1} in colex order.
void for_each_combination(std::size_t n, std::size_t s,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit,
                          bool& stop) {
  if (s > n) return;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) {
      stop = true;
      return;
    }
    // colex successor: bump the lowest index that has room below its upper
    // neighbour, reset everything beneath it
    std::size_t j = 0;
    while (j < s) {
      std::size_t limit = (j + 1 < s) ? idx[j + 1] : n;
      if (idx[j] + 1 < limit) break;
      ++j;
    }
    if (j == s) return;
    ++idx[j];
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  }
}

// Length-l position words, lexicographic; injective words only when inj.
void for_each_word(std::size_t n, std::size_t l, bool inj,
                   const std::function<bool(const std::vector<std::size_t>&)>& visit,
                   bool& stop) {
  if (inj && l > n) return;
  std::vector<std::size_t> w(l, 0);
  std::vector<bool> used(n, false);
  // recursive descent kept iterative via explicit position stack
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == l) return visit(w);
    for (std::size_t v = 0; v < n; ++v) {
      if (inj && used[v]) continue;
      w[pos] = v;
      if (inj) used[v] = true;
      bool go = rec(pos + 1);
      if (inj) used[v] = false;
      if (!go) return false;
    }
    return true;
  };
  if (!rec(0)) stop = true;
}

}  // namespace

const char* kind_name(KindTag k) {
  switch (k) {
    case KindTag::FinSubsets: return "fin";
    case KindTag::OrderedPairs: return "square";
    case KindTag::UnorderedPairs: return "pairs2";
    case KindTag::InjSeq: return "iseq";
    case KindTag::Seq: return "seq";
  }
  return "?";
}

KindTag kind_from_name(const std::string& name) {
  if (name == "fin") return KindTag::FinSubsets;
  if (name == "square") return KindTag::OrderedPairs;
  if (name == "pairs2") return KindTag::UnorderedPairs;
  if (name == "iseq") return KindTag::InjSeq;
  if (name == "seq") return KindTag::Seq;
  throw ArgumentError("unknown kind: " + name);
}

std::uint64_t count_kind(KindTag kind, std::uint64_t k,
                         std::optional<std::uint64_t> maxlen) {
  switch (kind) {
    case KindTag::FinSubsets:
      if (k >= 64) throw ResourceError("count overflows 64 bits", k);
      return std::uint64_t{1} << k;
    case KindTag::OrderedPairs:
      return checked_mul(k, k);
    case KindTag::UnorderedPairs:
      return k < 2 ? 0 : (k % 2 == 0 ? checked_mul(k / 2, k - 1) : checked_mul(k, (k - 1) / 2));
    case KindTag::InjSeq: {
      std::uint64_t total = 0, falling = 1;
      total = checked_add(total, falling);  // length 0
      for (std::uint64_t l = 1; l <= k; ++l) {
        falling = checked_mul(falling, k - (l - 1));
        total = checked_add(total, falling);
      }
      return total;
    }
    case KindTag::Seq: {
      if (!maxlen) throw ArgumentError("seq counting requires maxlen");
      std::uint64_t total = 0;
      for (std::uint64_t l = 0; l <= *maxlen; ++l)
        total = checked_add(total, checked_pow(k, l));
      return total;
    }
  }
  throw InternalInvariantError("unreachable kind");
}

void for_each_subset(const std::vector<Atom>& ground,
                     std::optional<std::size_t> max_size,
                     const std::function<bool(const HF&)>& visit) {
  require_unique(ground);
  std::size_t n = ground.size();
  std::size_t top = max_size ? std::min(*max_size, n) : n;
  bool stop = false;
  for (std::size_t s = 0; s <= top && !stop; ++s) {
    for_each_combination(n, s, [&](const std::vector<std::size_t>& idx) {
      std::vector<HF> ms;
      ms.reserve(idx.size());
      for (auto i : idx) ms.push_back(HF::atom(ground[i]));
      return visit(HF::set(std::move(ms)));
    }, stop);
  }
}

void for_each_injseq(const std::vector<Atom>& ground,
                     std::optional<std::uint64_t> max_len,
                     const std::function<bool(const HF&)>& visit) {
  require_unique(ground);
  std::size_t n = ground.size();
  std::size_t top = max_len ? std::min<std::size_t>(*max_len, n) : n;
  bool stop = false;
  for (std::size_t l = 0; l <= top && !stop; ++l) {
    for_each_word(n, l, true, [&](const std::vector<std::size_t>& w) {
      std::vector<HF> items;
      items.reserve(w.size());
      for (auto i : w) items.push_back(HF::atom(ground[i]));
      return visit(HF::seq(std::move(items)));
    }, stop);
  }
}

void for_each_kind(KindTag kind, const std::vector<Atom>& ground,
                   std::optional<std::uint64_t> maxlen,
                   const std::function<bool(const HF&)>& visit) {
  require_unique(ground);
  std::size_t n = ground.size();
  bool stop = false;
  switch (kind) {
    case KindTag::FinSubsets:
      for_each_subset(ground, std::nullopt, visit);
      return;
    case KindTag::UnorderedPairs:
      for_each_combination(n, 2, [&](const std::vector<std::size_t>& idx) {
        return visit(HF::set({HF::atom(ground[idx[0]]), HF::atom(ground[idx[1]])}));
      }, stop);
      return;
    case KindTag::OrderedPairs:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!visit(HF::pair_of_atoms(ground[i], ground[j]))) return;
      return;
    case KindTag::InjSeq:
      for_each_injseq(ground, std::nullopt, visit);
      return;
    case KindTag::Seq: {
      if (!maxlen) throw ArgumentError("seq enumeration requires maxlen");
      for (std::size_t l = 0; l <= *maxlen && !stop; ++l) {
        if (n == 0 && l > 0) break;
        for_each_word(n, l, false, [&](const std::vector<std::size_t>& w) {
          std::vector<HF> items;
          items.reserve(w.size());
          for (auto i : w) items.push_back(HF::atom(ground[i]));
          return visit(HF::seq(std::move(items)));
        }, stop);
      }
      return;
    }
  }
}

std::vector<HF> enum_kind(KindTag kind, const std::vector<Atom>& ground,
                          std::optional<std::uint64_t> maxlen) {
  std::vector<HF> out;
  for_each_kind(kind, ground, maxlen, [&](const HF& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = checked_add(x, y);
  std::uint64_t tri = (s % 2 == 0) ? checked_mul(s / 2, s + 1) : checked_mul(s, (s + 1) / 2);
  return checked_add(tri, y);
}

std::vector<Atom> first_occurrence_range(const std::vector<Atom>& s) {
  std::vector<Atom> range;
  std::set<Atom> seen;
  for (const auto& a : s)
    if (seen.insert(a).second) range.push_back(a);
  return range;
}

std::uint64_t seq_code(const std::vector<Atom>& s, const std::vector<Atom>& range) {
  require_unique(range);
  std::uint64_t n = range.size();
  std::uint64_t value = 0;
  for (const auto& a : s) {
    auto it = std::find(range.begin(), range.end(), a);
    if (it == range.end())
      throw ArgumentError("sequence entry outside its enumerated range: " + a.str());
    value = checked_add(checked_mul(value, n),
                        static_cast<std::uint64_t>(it - range.begin()));
  }
  return cantor_pair(s.size(), value);
}

std::uint64_t seq_code(const std::vector<Atom>& s) {
  return seq_code(s, first_occurrence_range(s));
}

}  // namespace chlab
