#include "wwm/comparison.hpp"

#include <algorithm>

namespace wwm {

namespace {

constexpr Grapheme kRequiredGlyph = U'#';
constexpr Grapheme kOptionalGlyph = U'*';

struct PairDiff {
  DiffPattern dif1, dif2;
  SimTemplate sim1, sim2;
};

// Left-anchored walk. Matching positions collapse into a variable run;
// mismatching positions and the longer word's overhang become literals.
PairDiff compare_left_anchored(std::u32string_view a, std::u32string_view b) {
  PairDiff out;
  auto& d1 = out.dif1.symbols;
  auto& d2 = out.dif2.symbols;
  const std::size_t common = std::min(a.size(), b.size());
  d1.reserve(a.size());
  d2.reserve(b.size());
  out.sim1.slots.reserve(a.size());
  out.sim2.slots.reserve(b.size());

  for (std::size_t x = 0; x < common; ++x) {
    if (a[x] == b[x]) {
      out.sim1.slots.push_back(Slot::literal(a[x]));
      out.sim2.slots.push_back(Slot::literal(b[x]));
      if (d1.empty() || !d1.back().is_var) {
        d1.push_back(DiffSymbol::var(1));
        d2.push_back(DiffSymbol::var(1));
      } else {
        ++d1.back().run;
        ++d2.back().run;
      }
    } else {
      d1.push_back(DiffSymbol::literal(a[x]));
      d2.push_back(DiffSymbol::literal(b[x]));
      out.sim1.slots.push_back(Slot::required());
      out.sim2.slots.push_back(Slot::required());
    }
  }
  for (std::size_t x = common; x < a.size(); ++x) {
    d1.push_back(DiffSymbol::literal(a[x]));
    out.sim1.slots.push_back(Slot::required());
  }
  for (std::size_t x = common; x < b.size(); ++x) {
    d2.push_back(DiffSymbol::literal(b[x]));
    out.sim2.slots.push_back(Slot::required());
  }

  // The run on the anchored edge is the free variable.
  if (!d1.empty() && d1.front().is_var) {
    d1.front().run = 0;
    d2.front().run = 0;
  }
  return out;
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

std::string DiffPattern::render() const {
  Form f;
  f.reserve(symbols.size());
  for (const auto& s : symbols) f.push_back(s.is_var ? DiffSymbol::kVarCode : s.code);
  return to_utf8(f);
}

std::size_t DiffPattern::literal_count() const {
  return static_cast<std::size_t>(
      std::count_if(symbols.begin(), symbols.end(), [](const DiffSymbol& s) { return !s.is_var; }));
}

std::size_t DiffPattern::var_count() const { return symbols.size() - literal_count(); }

std::size_t SimTemplate::optional_count() const {
  return static_cast<std::size_t>(std::count_if(
      slots.begin(), slots.end(), [](const Slot& s) { return s.kind == SlotKind::Optional; }));
}

Form SimTemplate::literals() const {
  Form f;
  for (const auto& s : slots)
    if (s.kind == SlotKind::Literal) f.push_back(s.ch);
  return f;
}

std::string SimTemplate::render() const {
  Form f;
  f.reserve(slots.size());
  for (const auto& s : slots) {
    switch (s.kind) {
      case SlotKind::Literal: f.push_back(s.ch); break;
      case SlotKind::Required: f.push_back(kRequiredGlyph); break;
      case SlotKind::Optional: f.push_back(kOptionalGlyph); break;
    }
  }
  return to_utf8(f);
}

SimTemplate SimTemplate::parse(std::u32string_view rendered) {
  SimTemplate t;
  t.slots.reserve(rendered.size());
  for (Grapheme g : rendered) {
    if (g == kRequiredGlyph)
      t.slots.push_back(Slot::required());
    else if (g == kOptionalGlyph)
      t.slots.push_back(Slot::optional());
    else
      t.slots.push_back(Slot::literal(g));
  }
  return t;
}

void ComparisonRecord::swap_sides() {
  std::swap(side1, side2);
  for (auto& w : witnesses) std::swap(w.first, w.second);
  std::sort(witnesses.begin(), witnesses.end());
}

Anchor shared_anchor(std::u32string_view a, std::u32string_view b) {
  const auto prefix = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  const auto suffix = std::mismatch(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  return {static_cast<std::size_t>(prefix.first - a.begin()),
          static_cast<std::size_t>(suffix.first - a.rbegin())};
}

std::optional<Direction> select_direction(const TaggedWord& w1, const TaggedWord& w2,
                                          const CompareConfig& cfg) {
  if (w1.form.size() < cfg.min_word_len || w2.form.size() < cfg.min_word_len) return std::nullopt;
  if (w1.form == w2.form) {
    if (w1.tag == w2.tag || !cfg.allow_conversion) return std::nullopt;
    return Direction::Forward;
  }
  const Anchor anchor = shared_anchor(w1.form, w2.form);
  if (anchor.prefix_len >= cfg.min_anchor) return Direction::Forward;
  if (anchor.suffix_len >= cfg.min_anchor) return Direction::Backward;
  return std::nullopt;
}

ComparisonRecord compare_pair(const TaggedWord& w1, WordId id1, const TaggedWord& w2, WordId id2,
                              Direction d) {
  PairDiff diff;
  if (d == Direction::Forward) {
    diff = compare_left_anchored(w1.form, w2.form);
  } else {
    // Mirror: walk the reversed words, then restore reading order.
    const Form r1(w1.form.rbegin(), w1.form.rend());
    const Form r2(w2.form.rbegin(), w2.form.rend());
    diff = compare_left_anchored(r1, r2);
    std::reverse(diff.dif1.symbols.begin(), diff.dif1.symbols.end());
    std::reverse(diff.dif2.symbols.begin(), diff.dif2.symbols.end());
    std::reverse(diff.sim1.slots.begin(), diff.sim1.slots.end());
    std::reverse(diff.sim2.slots.begin(), diff.sim2.slots.end());
  }

  ComparisonRecord rec;
  rec.side1 = RecordSide{w1.tag, std::move(diff.dif1), std::move(diff.sim1)};
  rec.side2 = RecordSide{w2.tag, std::move(diff.dif2), std::move(diff.sim2)};
  rec.direction = d;
  rec.witnesses.emplace_back(id1, id2);
  return rec;
}

}  // namespace wwm
