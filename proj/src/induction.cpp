#include "wwm/induction.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace wwm {

namespace {

KeySide key_side(const RecordSide& s) { return KeySide{s.tag, s.dif}; }

Slot meet(const Slot* a, const Slot* b) {
  if (!a || !b || a->kind == SlotKind::Optional || b->kind == SlotKind::Optional) {
    return Slot::optional();
  }
  if (a->kind == SlotKind::Literal && b->kind == SlotKind::Literal && a->ch == b->ch) return *a;
  return Slot::required();
}

void union_witnesses(std::vector<WitnessPair>& acc, const std::vector<WitnessPair>& more) {
  if (more.size() == 1) {
    auto it = std::lower_bound(acc.begin(), acc.end(), more.front());
    if (it == acc.end() || *it != more.front()) acc.insert(it, more.front());
    return;
  }
  std::vector<WitnessPair> out;
  out.reserve(acc.size() + more.size());
  std::set_union(acc.begin(), acc.end(), more.begin(), more.end(), std::back_inserter(out));
  acc = std::move(out);
}

struct Entry {
  StrategyKey key;
  ComparisonRecord rec;
};

void sweep(const Lexicon& lex, const CompareConfig& cfg, std::size_t first, std::size_t stride,
           std::vector<Entry>& out) {
  const auto& words = lex.entries();
  for (std::size_t i = first; i < words.size(); i += stride) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto dir = select_direction(words[i], words[j], cfg);
      if (!dir) continue;
      auto rec = compare_pair(words[i], static_cast<WordId>(i), words[j], static_cast<WordId>(j), *dir);
      auto key = canonical_key(rec);
      out.push_back({std::move(key), canonicalize(std::move(rec))});
    }
  }
}

}  // namespace

bool is_canonical(const ComparisonRecord& r) {
  return std::tie(r.side1.tag, r.side1.dif) <= std::tie(r.side2.tag, r.side2.dif);
}

StrategyKey canonical_key(const ComparisonRecord& r) {
  if (is_canonical(r)) return StrategyKey{key_side(r.side1), key_side(r.side2), r.direction};
  return StrategyKey{key_side(r.side2), key_side(r.side1), r.direction};
}

ComparisonRecord canonicalize(ComparisonRecord r) {
  if (!is_canonical(r)) r.swap_sides();
  return r;
}

SimTemplate merge_templates(const SimTemplate& a, const SimTemplate& b, Direction d) {
  const std::size_t n = std::max(a.size(), b.size());
  SimTemplate out;
  out.slots.reserve(n);
  // Forward records differ at the right edge, so they are right-aligned.
  const std::size_t pad_a = d == Direction::Forward ? n - a.size() : 0;
  const std::size_t pad_b = d == Direction::Forward ? n - b.size() : 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Slot* sa = (i >= pad_a && i - pad_a < a.size()) ? &a.slots[i - pad_a] : nullptr;
    const Slot* sb = (i >= pad_b && i - pad_b < b.size()) ? &b.slots[i - pad_b] : nullptr;
    out.slots.push_back(meet(sa, sb));
  }
  return out;
}

void merge_into(ComparisonRecord& acc, const ComparisonRecord& b) {
  if (acc.direction != b.direction) throw std::invalid_argument("merge_records: key mismatch");
  const auto same = [](const RecordSide& x, const RecordSide& y) {
    return x.tag == y.tag && x.dif == y.dif;
  };

  if (same(acc.side1, b.side1) && same(acc.side2, b.side2)) {
    acc.side1.sim = merge_templates(acc.side1.sim, b.side1.sim, acc.direction);
    acc.side2.sim = merge_templates(acc.side2.sim, b.side2.sim, acc.direction);
    union_witnesses(acc.witnesses, b.witnesses);
  } else if (same(acc.side1, b.side2) && same(acc.side2, b.side1)) {
    acc.side1.sim = merge_templates(acc.side1.sim, b.side2.sim, acc.direction);
    acc.side2.sim = merge_templates(acc.side2.sim, b.side1.sim, acc.direction);
    std::vector<WitnessPair> flipped;
    flipped.reserve(b.witnesses.size());
    for (const auto& [x, y] : b.witnesses) flipped.emplace_back(y, x);
    std::sort(flipped.begin(), flipped.end());
    union_witnesses(acc.witnesses, flipped);
  } else {
    throw std::invalid_argument("merge_records: key mismatch");
  }
}

ComparisonRecord merge_records(const ComparisonRecord& a, const ComparisonRecord& b) {
  ComparisonRecord out = a;
  merge_into(out, b);
  return out;
}

RecordMap accumulate(const Lexicon& lex, const CompareConfig& cfg, unsigned jobs) {
  jobs = std::max(1u, jobs);
  std::vector<std::vector<Entry>> partials(jobs);
  if (jobs == 1) {
    sweep(lex, cfg, 0, 1, partials.front());
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] { sweep(lex, cfg, t, jobs, partials[t]); });
    }
  }

  std::vector<Entry> entries = std::move(partials.front());
  for (std::size_t t = 1; t < partials.size(); ++t) {
    std::move(partials[t].begin(), partials[t].end(), std::back_inserter(entries));
    partials[t] = {};
  }

  // Sorting groups equal keys; the merge is order-insensitive, so the
  // grouping order within a key does not matter.
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return entries[a].key < entries[b].key; });

  RecordMap out;
  for (std::size_t k = 0; k < order.size();) {
    Entry& head = entries[order[k]];
    std::size_t next = k + 1;
    while (next < order.size() && entries[order[next]].key == head.key) {
      merge_into(head.rec, entries[order[next]].rec);
      ++next;
    }
    out.emplace_hint(out.end(), std::move(head.key), std::move(head.rec));
    k = next;
  }
  return out;
}

std::vector<Strategy> extract_strategies(const RecordMap& records, std::size_t min_support) {
  if (min_support == 0) throw std::invalid_argument("min_support must be >= 1");
  std::vector<Strategy> out;
  for (const auto& [key, rec] : records) {
    if (rec.count() < min_support) continue;
    Strategy s;
    s.id = out.size();
    s.key = key;
    s.sim1 = rec.side1.sim;
    s.sim2 = rec.side2.sim;
    s.witnesses = rec.witnesses;
    out.push_back(std::move(s));
  }
  return out;
}

ParadigmIndex::ParadigmIndex(std::size_t n) { resize(n); }

void ParadigmIndex::resize(std::size_t n) {
  for (std::size_t i = parent_.size(); i < n; ++i) {
    parent_.push_back(static_cast<WordId>(i));
    weight_.push_back(1);
  }
}

WordId ParadigmIndex::paradigm(WordId id) const {
  while (parent_[id] != id) id = parent_[id];
  return id;
}

void ParadigmIndex::unite(WordId a, WordId b) {
  a = paradigm(a);
  b = paradigm(b);
  if (a == b) return;
  if (weight_[a] < weight_[b] || (weight_[a] == weight_[b] && b < a)) std::swap(a, b);
  parent_[b] = a;
  weight_[a] += weight_[b];
}

ParadigmIndex build_paradigms(std::span<const Strategy> strategies, const Lexicon& lex) {
  ParadigmIndex index(lex.size());
  for (const auto& s : strategies)
    for (const auto& [a, b] : s.witnesses) index.unite(a, b);
  return index;
}

}  // namespace wwm
