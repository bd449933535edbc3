#include "wwm/evaluation.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace wwm {

namespace {

std::string form_key(const Form& f) { return to_utf8(f); }

std::string tagged_key(const Form& f, const Tag& t) {
  std::string k = to_utf8(f);
  k.push_back('\0');
  k += t.label;
  return k;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

ReferenceList ReferenceList::parse(std::string_view text, bool with_tags, const ParseOptions& opts) {
  ReferenceList ref;
  ref.with_tags_ = with_tags;
  if (with_tags) {
    for (const auto& w : parse_lexicon(text, opts)) ref.keys_.insert(tagged_key(w.form, w.tag));
  } else {
    for (const auto& f : parse_word_list(text, opts)) ref.keys_.insert(form_key(f));
  }
  return ref;
}

ReferenceList ReferenceList::from_forms(std::span<const Form> forms) {
  ReferenceList ref;
  for (const auto& f : forms) ref.keys_.insert(form_key(f));
  return ref;
}

bool ReferenceList::attests(const TaggedWord& w) const {
  return keys_.contains(with_tags_ ? tagged_key(w.form, w.tag) : form_key(w.form));
}

PrecisionReport precision(std::span<const TaggedWord> new_words, const ReferenceList& reference,
                          std::size_t sample_limit) {
  PrecisionReport r;
  r.generated = new_words.size();
  std::vector<std::string> missing;
  for (const auto& w : new_words) {
    if (reference.attests(w))
      ++r.attested;
    else
      missing.push_back(to_string(w));
  }
  if (r.generated > 0)
    r.precision = static_cast<double>(r.attested) / static_cast<double>(r.generated);
  std::sort(missing.begin(), missing.end());
  if (missing.size() > sample_limit) missing.resize(sample_limit);
  r.unattested_sample = std::move(missing);
  return r;
}

std::string strategy_table(std::span<const Strategy> strategies, const Lexicon& lex,
                           std::size_t max_examples) {
  std::vector<const Strategy*> rows;
  for (const auto& s : strategies) rows.push_back(&s);
  std::stable_sort(rows.begin(), rows.end(), [](const Strategy* a, const Strategy* b) {
    if (a->count() != b->count()) return a->count() > b->count();
    return a->key < b->key;
  });

  std::string out = "dif1\tcat1\tdif2\tcat2\tsim1\tsim2\tcount\texamples\n";
  for (const Strategy* s : rows) {
    out += s->key.side1.dif.render() + '\t' + s->key.side1.tag.label + '\t';
    out += s->key.side2.dif.render() + '\t' + s->key.side2.tag.label + '\t';
    out += s->sim1.render() + '\t' + s->sim2.render() + '\t';
    out += std::to_string(s->count()) + '\t';
    for (std::size_t i = 0; i < s->witnesses.size() && i < max_examples; ++i) {
      if (i) out += ", ";
      const auto& [a, b] = s->witnesses[i];
      out += to_utf8(lex[a].form) + '/' + to_utf8(lex[b].form);
    }
    out += '\n';
  }
  return out;
}

std::string write_blocked(std::span<const BlockedWord> blocked) {
  std::vector<std::string> lines;
  lines.reserve(blocked.size());
  for (const auto& b : blocked)
    lines.push_back(to_string(b.word) + '\t' + to_string(b.source) + '\t' + to_string(b.blocker));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out.push_back('\n');
    out += lines[i];
  }
  return out;
}

std::string render_report(const PipelineResult& run, std::size_t lexicon_size,
                          const std::optional<PrecisionReport>& prec, ReportFormat format) {
  const auto& rep = run.report;
  if (format == ReportFormat::Structured) {
    nlohmann::ordered_json j;
    j["schema"] = "wwm-report/1";
    j["lexicon_entries"] = lexicon_size;
    j["strategies"] = run.strategies.size();
    j["cycles_run"] = rep.cycles_run;
    j["new_words"] = rep.new_words.size();
    j["blocked"] = rep.blocked.size();
    j["regenerated"] = rep.regenerated_count;
    auto per = nlohmann::ordered_json::array();
    for (const auto& [id, n] : rep.per_strategy_counts) per.push_back({{"id", id}, {"count", n}});
    j["per_strategy"] = std::move(per);
    if (prec) {
      nlohmann::ordered_json p;
      p["status"] = prec->precision ? "ok" : "no_new_words";
      p["generated"] = prec->generated;
      p["attested"] = prec->attested;
      if (prec->precision)
        p["value"] = *prec->precision;
      else
        p["value"] = nullptr;
      p["unattested_sample"] = prec->unattested_sample;
      j["precision"] = std::move(p);
    }
    return j.dump(2) + '\n';
  }

  std::string out;
  out += "lexicon entries: " + std::to_string(lexicon_size) + '\n';
  out += "strategies:      " + std::to_string(run.strategies.size()) + '\n';
  out += "cycles run:      " + std::to_string(rep.cycles_run) + '\n';
  out += "new words:       " + std::to_string(rep.new_words.size()) + '\n';
  out += "blocked:         " + std::to_string(rep.blocked.size()) + '\n';
  out += "regenerated:     " + std::to_string(rep.regenerated_count) + '\n';
  if (prec) {
    if (prec->precision) {
      out += "precision:       " + fixed4(*prec->precision) + " (" + std::to_string(prec->attested) +
             "/" + std::to_string(prec->generated) + ")\n";
    } else {
      out += "precision:       n/a (no new words)\n";
    }
    for (const auto& w : prec->unattested_sample) out += "  unattested: " + w + '\n';
  }
  return out;
}

}  // namespace wwm
