#pragma once

// Precision of generated words against a reference list, and the text
// renderings of strategies and run reports.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wwm/generation.hpp"
#include "wwm/lexio.hpp"

namespace wwm {

/// Set of attested words. Matches on form alone unless built with tags.
class ReferenceList {
 public:
  /// One form per line, or "form,TAG" per line when `with_tags` is set.
  static ReferenceList parse(std::string_view text, bool with_tags = false,
                             const ParseOptions& opts = {});
  static ReferenceList from_forms(std::span<const Form> forms);

  bool attests(const TaggedWord& w) const;
  bool matches_tags() const noexcept { return with_tags_; }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  bool with_tags_ = false;
  std::unordered_set<std::string> keys_;
};

struct PrecisionReport {
  std::size_t generated = 0;
  std::size_t attested = 0;
  /// Empty when nothing was generated.
  std::optional<double> precision;
  std::vector<std::string> unattested_sample;
};

PrecisionReport precision(std::span<const TaggedWord> new_words, const ReferenceList& reference,
                          std::size_t sample_limit = 20);

/// TSV: dif1, cat1, dif2, cat2, sim1, sim2, count, examples. Header first,
/// then one row per strategy by descending count, ties in key order.
std::string strategy_table(std::span<const Strategy> strategies, const Lexicon& lex,
                           std::size_t max_examples = 3);

enum class ReportFormat { Text, Structured };

std::string render_report(const PipelineResult& run, std::size_t lexicon_size,
                          const std::optional<PrecisionReport>& precision, ReportFormat format);

/// "word,TAG<TAB>source,TAG<TAB>blocker,TAG" per line, sorted.
std::string write_blocked(std::span<const BlockedWord> blocked);

}  // namespace wwm
