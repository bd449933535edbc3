#include "wwm/generation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace wwm {

namespace {

std::string group_key(WordId root, const Tag& tag) {
  std::string key = std::to_string(root);
  key.push_back('\0');
  key += tag.label;
  return key;
}

std::string word_key(const TaggedWord& w) {
  std::string key = to_utf8(w.form);
  key.push_back('\0');
  key += w.tag.label;
  return key;
}

// Graphemes of the pattern outside the free anchored variable.
std::size_t fixed_length(const DiffPattern& p) {
  std::size_t n = 0;
  for (const auto& s : p.symbols) n += s.is_var ? s.run : 1;
  return n;
}

bool has_free_var(const DiffPattern& p) {
  return std::any_of(p.symbols.begin(), p.symbols.end(),
                     [](const DiffSymbol& s) { return s.is_var && s.run == 0; });
}

}  // namespace

Form MatchBinding::variable_material() const {
  Form out;
  for (const auto& r : runs) out += r;
  return out;
}

std::optional<MatchBinding> unify(const TaggedWord& w, const Strategy& s, Side side) {
  const KeySide& ks = s.key_side(index(side));
  const SimTemplate& sim = s.sim(index(side));
  if (w.tag != ks.tag) return std::nullopt;

  const Form& form = w.form;
  const std::size_t len = form.size();
  if (len < sim.required_length() || len > sim.max_length()) return std::nullopt;

  const std::size_t fixed = fixed_length(ks.dif);
  const bool free_var = has_free_var(ks.dif);
  if (free_var ? len <= fixed : len != fixed) return std::nullopt;

  // Forward templates are right-aligned with the word, Backward left-aligned.
  const std::size_t offset = s.direction() == Direction::Forward ? sim.size() - len : 0;
  for (std::size_t k = 0; k < len; ++k) {
    const Slot& slot = sim.slots[k + offset];
    if (slot.kind == SlotKind::Literal && slot.ch != form[k]) return std::nullopt;
  }

  MatchBinding b;
  b.side = side;
  const std::size_t free_len = len - fixed;
  std::size_t pos = 0;
  for (const auto& sym : ks.dif.symbols) {
    if (sym.is_var) {
      const std::size_t n = sym.run == 0 ? free_len : sym.run;
      b.runs.emplace_back(form, pos, n);
      pos += n;
    } else {
      if (form[pos] != sym.code) return std::nullopt;
      ++pos;
    }
  }
  return b;
}

TaggedWord create(const Strategy& s, const MatchBinding& b) {
  const KeySide& target = s.key_side(index(other(b.side)));
  TaggedWord out;
  out.tag = target.tag;
  std::size_t next = 0;
  for (const auto& sym : target.dif.symbols) {
    if (sym.is_var) {
      if (next >= b.runs.size()) throw std::logic_error("create: binding has too few runs");
      out.form += b.runs[next++];
    } else {
      out.form.push_back(sym.code);
    }
  }
  return out;
}

BlockingIndex::BlockingIndex(const Lexicon& lex, const ParadigmIndex& paradigms)
    : paradigms_(&paradigms) {
  for (WordId id = 0; id < lex.size(); ++id) {
    groups_[group_key(paradigms.paradigm(id), lex[id].tag)].push_back(id);
  }
}

std::optional<WordId> BlockingIndex::blocker(WordId source, const Tag& tag) const {
  auto it = groups_.find(group_key(paradigms_->paradigm(source), tag));
  if (it == groups_.end()) return std::nullopt;
  for (WordId id : it->second)
    if (id != source) return id;
  return std::nullopt;
}

bool is_blocked(WordId source, const TaggedWord& candidate, const ParadigmIndex& paradigms,
                const Lexicon& lex) {
  const WordId root = paradigms.paradigm(source);
  for (WordId id = 0; id < lex.size(); ++id) {
    if (id != source && lex[id].tag == candidate.tag && paradigms.paradigm(id) == root) return true;
  }
  return false;
}

std::vector<TaggedWord> GenerationReport::words() const {
  std::vector<TaggedWord> out;
  out.reserve(new_words.size());
  for (const auto& nw : new_words) out.push_back(nw.word);
  return out;
}

GenerationReport generate(const Lexicon& lex, std::span<const Strategy> strategies,
                          const ParadigmIndex& paradigms, const GenerationOptions& opts) {
  if (paradigms.size() < lex.size()) throw std::invalid_argument("paradigm index too small");

  // Candidate (strategy, side) pairs per tag, in strategy order, side 1 first.
  std::unordered_map<std::string, std::vector<std::pair<const Strategy*, Side>>> by_tag;
  for (const auto& s : strategies) {
    by_tag[s.key.side1.tag.label].emplace_back(&s, Side::One);
    by_tag[s.key.side2.tag.label].emplace_back(&s, Side::Two);
  }

  std::optional<BlockingIndex> blocking;
  if (opts.blocking) blocking.emplace(lex, paradigms);

  GenerationReport report;
  report.cycles_run = 1;
  std::unordered_set<std::string> emitted;
  std::unordered_set<std::string> blocked_seen;

  for (WordId id = 0; id < lex.size(); ++id) {
    const TaggedWord& word = lex[id];
    auto it = by_tag.find(word.tag.label);
    if (it == by_tag.end()) continue;
    for (const auto& [strategy, side] : it->second) {
      auto binding = unify(word, *strategy, side);
      if (!binding) continue;
      TaggedWord candidate = create(*strategy, *binding);

      if (lex.contains(candidate)) {
        ++report.regenerated_count;
        continue;
      }
      auto key = word_key(candidate);
      if (emitted.contains(key)) {
        ++report.per_strategy_counts[strategy->id];
        continue;
      }
      if (blocking) {
        if (auto by = blocking->blocker(id, candidate.tag)) {
          if (blocked_seen.insert(key).second) {
            report.blocked.push_back({std::move(candidate), word, lex[*by]});
          }
          continue;
        }
      }
      ++report.per_strategy_counts[strategy->id];
      emitted.insert(std::move(key));
      report.new_words.push_back({std::move(candidate), word, strategy->id});
    }
  }

  std::erase_if(report.blocked,
                [&](const BlockedWord& b) { return emitted.contains(word_key(b.word)); });
  return report;
}

std::vector<Strategy> learn(const Lexicon& lex, const PipelineOptions& opts) {
  return extract_strategies(accumulate(lex, opts.compare, opts.jobs), opts.min_support);
}

PipelineResult run_cycles(const Lexicon& lex, const PipelineOptions& opts) {
  if (opts.generation.cycles < 1) throw std::invalid_argument("cycles must be >= 1");

  PipelineResult result;
  result.working = lex;
  Lexicon& working = result.working;

  auto strategies = learn(working, opts);
  ParadigmIndex paradigms = build_paradigms(strategies, working);

  // Strategy ids stay stable across rediscovery rounds.
  std::map<StrategyKey, std::size_t> registry;
  for (const auto& s : strategies) registry.emplace(s.key, s.id);

  std::vector<std::pair<WordId, WordId>> source_links;
  std::unordered_set<std::string> blocked_seen;
  GenerationReport& total = result.report;

  for (std::size_t cycle = 1; cycle <= opts.generation.cycles; ++cycle) {
    if (cycle > 1 && !opts.generation.reapply_only) {
      strategies = learn(working, opts);
      std::vector<Strategy*> fresh;
      for (auto& s : strategies) {
        if (auto it = registry.find(s.key); it != registry.end())
          s.id = it->second;
        else
          fresh.push_back(&s);
      }
      for (auto* s : fresh) {
        s->id = registry.size();
        registry.emplace(s->key, s->id);
      }
      std::sort(strategies.begin(), strategies.end(),
                [](const Strategy& a, const Strategy& b) { return a.id < b.id; });
      paradigms = build_paradigms(strategies, working);
      for (const auto& [a, b] : source_links) paradigms.unite(a, b);
    }

    GenerationReport round = generate(working, strategies, paradigms, opts.generation);
    total.cycles_run = cycle;
    total.regenerated_count += round.regenerated_count;
    for (const auto& [id, n] : round.per_strategy_counts) total.per_strategy_counts[id] += n;
    for (auto& b : round.blocked) {
      if (blocked_seen.insert(word_key(b.word)).second) total.blocked.push_back(std::move(b));
    }
    if (round.new_words.empty()) break;

    for (auto& nw : round.new_words) {
      const WordId source = *working.id_of(nw.source);
      const WordId id = working.add(nw.word);
      paradigms.resize(working.size());
      paradigms.unite(id, source);
      source_links.emplace_back(id, source);
      total.new_words.push_back(std::move(nw));
    }
  }

  std::erase_if(total.blocked, [&](const BlockedWord& b) { return working.contains(b.word); });
  result.strategies = std::move(strategies);
  return result;
}

}  // namespace wwm
