#pragma once

// Folding of comparison records into word-formation strategies.

#include <map>
#include <span>
#include <vector>

#include "wwm/comparison.hpp"

namespace wwm {

struct KeySide {
  Tag tag;
  DiffPattern dif;

  auto operator<=>(const KeySide&) const = default;
  bool operator==(const KeySide&) const = default;
};

/// Identity of a record up to its similarity templates. Sides are ordered so
/// that side1 <= side2 by (tag label, rendered difference pattern).
struct StrategyKey {
  KeySide side1;
  KeySide side2;
  Direction direction = Direction::Forward;

  auto operator<=>(const StrategyKey&) const = default;
  bool operator==(const StrategyKey&) const = default;
};

StrategyKey canonical_key(const ComparisonRecord& r);
bool is_canonical(const ComparisonRecord& r);
/// Swaps sides when needed so that the record is in canonical order.
ComparisonRecord canonicalize(ComparisonRecord r);

/// Positionwise meet of two templates aligned at the difference edge
/// (right edge for Forward, left edge for Backward).
SimTemplate merge_templates(const SimTemplate& a, const SimTemplate& b, Direction d);

/// Merges b into acc. Both must share a canonical key; b may be in either
/// side order. Throws std::invalid_argument otherwise.
void merge_into(ComparisonRecord& acc, const ComparisonRecord& b);
ComparisonRecord merge_records(const ComparisonRecord& a, const ComparisonRecord& b);

using RecordMap = std::map<StrategyKey, ComparisonRecord>;

/// Compares every unordered pair at most once and folds the records by key.
/// `jobs` > 1 splits the pair sweep across threads; the result is the same.
RecordMap accumulate(const Lexicon& lex, const CompareConfig& cfg, unsigned jobs = 1);

struct Strategy {
  std::size_t id = 0;
  StrategyKey key;
  SimTemplate sim1;
  SimTemplate sim2;
  std::vector<WitnessPair> witnesses;

  std::size_t count() const noexcept { return witnesses.size(); }
  Direction direction() const noexcept { return key.direction; }
  const KeySide& key_side(int side) const { return side == 1 ? key.side1 : key.side2; }
  const SimTemplate& sim(int side) const { return side == 1 ? sim1 : sim2; }
};

/// Records with count >= min_support, numbered in key order.
std::vector<Strategy> extract_strategies(const RecordMap& records, std::size_t min_support);

/// Union-find partition of lexicon ids into paradigms.
class ParadigmIndex {
 public:
  ParadigmIndex() = default;
  explicit ParadigmIndex(std::size_t n);

  /// Extends the forest with singleton ids up to n.
  void resize(std::size_t n);
  void unite(WordId a, WordId b);
  WordId paradigm(WordId id) const;
  bool same(WordId a, WordId b) const { return paradigm(a) == paradigm(b); }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<WordId> parent_;
  std::vector<std::uint32_t> weight_;
};

ParadigmIndex build_paradigms(std::span<const Strategy> strategies, const Lexicon& lex);

}  // namespace wwm
