#include "wwm/wwm.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "wwm/evaluation.hpp"
#include "wwm/generation.hpp"
#include "wwm/lexio.hpp"

struct wwm_lexicon {
  wwm::Lexicon lex;
};

struct wwm_result {
  wwm::PipelineResult run;
  std::size_t lexicon_size = 0;
  std::optional<wwm::PrecisionReport> precision;
};

namespace {

thread_local std::string g_last_error;

wwm_status fail(wwm_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

wwm_status ok() {
  g_last_error.clear();
  return WWM_OK;
}

wwm_status export_string(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return fail(WWM_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  *out = buf;
  return ok();
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
wwm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const wwm::ParseError& e) {
    return fail(WWM_ERR_PARSE, e.what());
  } catch (const wwm::EncodingError& e) {
    return fail(WWM_ERR_ENCODING, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(WWM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WWM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WWM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WWM_ERR_INTERNAL, "unknown error");
  }
}

wwm_status to_pipeline(const wwm_options* in, wwm::PipelineOptions& out) {
  wwm_options defaults;
  wwm_options_init(&defaults);
  const wwm_options& o = in ? *in : defaults;
  if (o.min_anchor == 0) return fail(WWM_ERR_INVALID_ARGUMENT, "min_anchor must be positive");
  if (o.min_word_len == 0) return fail(WWM_ERR_INVALID_ARGUMENT, "min_word_len must be positive");
  if (o.min_support == 0) return fail(WWM_ERR_INVALID_ARGUMENT, "min_support must be positive");
  if (o.cycles == 0) return fail(WWM_ERR_INVALID_ARGUMENT, "cycles must be positive");
  if (o.jobs == 0) return fail(WWM_ERR_INVALID_ARGUMENT, "jobs must be positive");
  out.compare.min_anchor = o.min_anchor;
  out.compare.min_word_len = o.min_word_len;
  out.compare.allow_conversion = o.allow_conversion != 0;
  out.min_support = o.min_support;
  out.jobs = o.jobs;
  out.generation.cycles = o.cycles;
  out.generation.blocking = o.blocking != 0;
  out.generation.reapply_only = o.reapply_only != 0;
  return WWM_OK;
}

}  // namespace

extern "C" {

uint32_t wwm_abi_version(void) { return WWM_ABI_VERSION; }

const char* wwm_version_string(void) { return "0.1.0"; }

const char* wwm_last_error(void) { return g_last_error.c_str(); }

void wwm_options_init(wwm_options* opts) {
  if (!opts) return;
  opts->min_anchor = 2;
  opts->min_word_len = 3;
  opts->min_support = 3;
  opts->cycles = 1;
  opts->jobs = 1;
  opts->allow_conversion = 0;
  opts->blocking = 0;
  opts->reapply_only = 0;
}

wwm_status wwm_lexicon_parse(const char* text, size_t len, int lowercase, wwm_lexicon** out,
                             size_t* error_line) {
  if (!out || (!text && len > 0)) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (error_line) *error_line = 0;
  return guarded([&] {
    try {
      wwm::ParseOptions opts;
      opts.lowercase = lowercase != 0;
      auto lex = wwm::parse_lexicon(std::string_view(text ? text : "", len), opts);
      *out = new wwm_lexicon{std::move(lex)};
      return ok();
    } catch (const wwm::ParseError& e) {
      if (error_line) *error_line = e.line();
      throw;
    } catch (const wwm::EncodingError& e) {
      if (error_line) *error_line = e.line();
      throw;
    }
  });
}

size_t wwm_lexicon_size(const wwm_lexicon* lex) { return lex ? lex->lex.size() : 0; }

void wwm_lexicon_free(wwm_lexicon* lex) { delete lex; }

wwm_status wwm_learn(const wwm_lexicon* lex, const wwm_options* opts, wwm_result** out) {
  if (!lex || !out) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  wwm::PipelineOptions po;
  if (auto st = to_pipeline(opts, po); st != WWM_OK) return st;
  return guarded([&] {
    auto res = std::make_unique<wwm_result>();
    res->run.strategies = wwm::learn(lex->lex, po);
    res->run.working = lex->lex;
    res->lexicon_size = lex->lex.size();
    *out = res.release();
    return ok();
  });
}

wwm_status wwm_generate(const wwm_lexicon* lex, const wwm_options* opts, wwm_result** out) {
  if (!lex || !out) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  wwm::PipelineOptions po;
  if (auto st = to_pipeline(opts, po); st != WWM_OK) return st;
  return guarded([&] {
    auto res = std::make_unique<wwm_result>();
    res->run = wwm::run_cycles(lex->lex, po);
    res->lexicon_size = lex->lex.size();
    *out = res.release();
    return ok();
  });
}

size_t wwm_result_strategy_count(const wwm_result* res) {
  return res ? res->run.strategies.size() : 0;
}

size_t wwm_result_new_word_count(const wwm_result* res) {
  return res ? res->run.report.new_words.size() : 0;
}

size_t wwm_result_blocked_count(const wwm_result* res) {
  return res ? res->run.report.blocked.size() : 0;
}

size_t wwm_result_regenerated_count(const wwm_result* res) {
  return res ? res->run.report.regenerated_count : 0;
}

wwm_status wwm_result_strategy_table(const wwm_result* res, char** out) {
  if (!res || !out) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return export_string(wwm::strategy_table(res->run.strategies, res->run.working), out);
  });
}

wwm_status wwm_result_new_words(const wwm_result* res, char** out) {
  if (!res || !out) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return export_string(wwm::write_words(res->run.report.words()), out); });
}

wwm_status wwm_result_blocked_words(const wwm_result* res, char** out) {
  if (!res || !out) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return export_string(wwm::write_blocked(res->run.report.blocked), out); });
}

wwm_status wwm_result_evaluate(wwm_result* res, const char* reference, size_t len, int match_tags,
                               double* precision) {
  if (!res || (!reference && len > 0)) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto ref = wwm::ReferenceList::parse(std::string_view(reference ? reference : "", len),
                                         match_tags != 0);
    const auto words = res->run.report.words();
    res->precision = wwm::precision(words, ref);
    if (precision) *precision = res->precision->precision.value_or(-1.0);
    return ok();
  });
}

wwm_status wwm_result_report(const wwm_result* res, wwm_format format, char** out) {
  if (!res || !out) return fail(WWM_ERR_INVALID_ARGUMENT, "null argument");
  if (format != WWM_FORMAT_TEXT && format != WWM_FORMAT_STRUCTURED)
    return fail(WWM_ERR_INVALID_ARGUMENT, "unknown report format");
  return guarded([&] {
    const auto fmt =
        format == WWM_FORMAT_TEXT ? wwm::ReportFormat::Text : wwm::ReportFormat::Structured;
    return export_string(wwm::render_report(res->run, res->lexicon_size, res->precision, fmt), out);
  });
}

void wwm_result_free(wwm_result* res) { delete res; }

void wwm_string_free(char* s) { std::free(s); }

}  // extern "C"
