#pragma once

// Applying strategies to lexicon words: unification, word creation,
// paradigm blocking and iterated creation cycles.

#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "wwm/induction.hpp"

namespace wwm {

enum class Side : int { One = 1, Two = 2 };

constexpr Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }
constexpr int index(Side s) { return static_cast<int>(s); }

struct MatchBinding {
  Side side = Side::One;
  /// Graphemes covered by each variable of the matched difference pattern,
  /// in reading order.
  std::vector<Form> runs;

  Form variable_material() const;
};

/// Matches `w` against one side of `s`. The word is aligned at the
/// difference edge; its length must lie in the side's admitted range, its
/// graphemes at literal template slots and at difference literals must
/// agree.
std::optional<MatchBinding> unify(const TaggedWord& w, const Strategy& s, Side side);

/// Rewrites a unified word into the other side of the strategy.
TaggedWord create(const Strategy& s, const MatchBinding& b);

/// Lookup of lexicon words by (paradigm, tag).
class BlockingIndex {
 public:
  BlockingIndex(const Lexicon& lex, const ParadigmIndex& paradigms);

  /// A lexicon word other than `source`, in the source's paradigm, carrying
  /// `tag`; std::nullopt if there is none.
  std::optional<WordId> blocker(WordId source, const Tag& tag) const;

 private:
  const ParadigmIndex* paradigms_;
  std::unordered_map<std::string, std::vector<WordId>> groups_;
};

bool is_blocked(WordId source, const TaggedWord& candidate, const ParadigmIndex& paradigms,
                const Lexicon& lex);

struct GenerationOptions {
  bool blocking = false;
  std::size_t cycles = 1;
  bool reapply_only = false;
};

struct NewWord {
  TaggedWord word;
  TaggedWord source;
  std::size_t strategy_id = 0;
};

struct BlockedWord {
  TaggedWord word;
  TaggedWord source;
  TaggedWord blocker;
};

struct GenerationReport {
  std::vector<NewWord> new_words;
  std::vector<BlockedWord> blocked;
  std::size_t regenerated_count = 0;
  std::map<std::size_t, std::size_t> per_strategy_counts;
  std::size_t cycles_run = 0;

  std::vector<TaggedWord> words() const;
};

/// Single creation pass: every word x every strategy x side 1 then side 2.
GenerationReport generate(const Lexicon& lex, std::span<const Strategy> strategies,
                          const ParadigmIndex& paradigms, const GenerationOptions& opts);

struct PipelineOptions {
  CompareConfig compare;
  GenerationOptions generation;
  std::size_t min_support = 3;
  unsigned jobs = 1;
};

struct PipelineResult {
  /// Strategies in force during the last cycle, ordered by id.
  std::vector<Strategy> strategies;
  GenerationReport report;
  /// Original lexicon followed by every generated word, in creation order.
  Lexicon working;
};

/// Strategy discovery only.
std::vector<Strategy> learn(const Lexicon& lex, const PipelineOptions& opts);

/// Discovery and creation, repeated for `generation.cycles` rounds or until
/// a round creates nothing. New words are reported relative to `lex`.
PipelineResult run_cycles(const Lexicon& lex, const PipelineOptions& opts);

}  // namespace wwm
