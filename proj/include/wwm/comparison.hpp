#pragma once

// Edge-anchored letter-by-letter comparison of two tagged words.
//
// A pair sharing a beginning is walked left to right (Forward); a pair
// sharing only an ending is walked right to left (Backward). Matching
// positions become shared material (a variable X in the difference pattern,
// a literal in the similarity template); mismatching positions are kept as
// literals in the difference pattern and as '#' in the template.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wwm/types.hpp"

namespace wwm {

enum class Direction : std::uint8_t { Forward, Backward };

std::string_view to_string(Direction d);

/// One symbol of a difference pattern: a literal grapheme or the variable X.
///
/// A variable that sits on the anchored edge of the word (leading for
/// Forward, trailing for Backward) stands for a run of any length >= 1 and
/// has run == 0. Every other variable covers exactly `run` graphemes; the
/// run length is part of the pattern's identity so that the difference
/// literals sit at fixed offsets from the difference edge.
struct DiffSymbol {
  static constexpr Grapheme kVarCode = U'X';

  Grapheme code = 0;
  bool is_var = false;
  std::uint32_t run = 0;

  static DiffSymbol literal(Grapheme g) { return {g, false, 0}; }
  static DiffSymbol var(std::uint32_t run) { return {kVarCode, true, run}; }

  auto operator<=>(const DiffSymbol&) const = default;
  bool operator==(const DiffSymbol&) const = default;
};

struct DiffPattern {
  std::vector<DiffSymbol> symbols;

  /// Literal graphemes verbatim, every variable as "X".
  std::string render() const;
  std::size_t literal_count() const;
  std::size_t var_count() const;

  auto operator<=>(const DiffPattern&) const = default;
  bool operator==(const DiffPattern&) const = default;
};

enum class SlotKind : std::uint8_t { Literal, Required, Optional };

struct Slot {
  SlotKind kind = SlotKind::Required;
  Grapheme ch = 0;

  static Slot literal(Grapheme g) { return {SlotKind::Literal, g}; }
  static Slot required() { return {SlotKind::Required, 0}; }
  static Slot optional() { return {SlotKind::Optional, 0}; }

  auto operator<=>(const Slot&) const = default;
  bool operator==(const Slot&) const = default;
};

/// Full-word pattern: literals, '#' (must be instantiated) and '*' (may be).
struct SimTemplate {
  std::vector<Slot> slots;

  std::size_t size() const noexcept { return slots.size(); }
  std::size_t optional_count() const;
  /// Shortest admitted word length.
  std::size_t required_length() const { return size() - optional_count(); }
  std::size_t max_length() const { return size(); }
  /// Literal slots in order.
  Form literals() const;

  /// "*##ce###" notation.
  std::string render() const;
  static SimTemplate parse(std::u32string_view rendered);

  auto operator<=>(const SimTemplate&) const = default;
  bool operator==(const SimTemplate&) const = default;
};

struct RecordSide {
  Tag tag;
  DiffPattern dif;
  SimTemplate sim;

  bool operator==(const RecordSide&) const = default;
};

/// Witness pair: lexicon id on side 1, lexicon id on side 2.
using WitnessPair = std::pair<WordId, WordId>;

struct ComparisonRecord {
  RecordSide side1;
  RecordSide side2;
  Direction direction = Direction::Forward;
  /// Sorted, duplicate-free.
  std::vector<WitnessPair> witnesses;

  std::size_t count() const noexcept { return witnesses.size(); }
  void swap_sides();

  bool operator==(const ComparisonRecord&) const = default;
};

struct CompareConfig {
  std::size_t min_anchor = 2;
  std::size_t min_word_len = 3;
  bool allow_conversion = false;
  bool lowercase = false;
};

struct Anchor {
  std::size_t prefix_len = 0;
  std::size_t suffix_len = 0;

  bool operator==(const Anchor&) const = default;
};

Anchor shared_anchor(std::u32string_view a, std::u32string_view b);

/// std::nullopt means the pair is not compared.
std::optional<Direction> select_direction(const TaggedWord& w1, const TaggedWord& w2,
                                          const CompareConfig& cfg);

/// Builds the fresh comparison record of one pair (count 1).
ComparisonRecord compare_pair(const TaggedWord& w1, WordId id1, const TaggedWord& w2, WordId id2,
                              Direction d);

}  // namespace wwm
