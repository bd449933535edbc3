// wwm: learn word-formation strategies from a tagged lexicon, generate new
// words, and score them against a reference list.
//
//   wwm learn    --lexicon FILE [--out-strategies FILE]
//   wwm generate --lexicon FILE [--out-words FILE] [--out-blocked FILE] ...
//   wwm eval     --lexicon FILE --reference FILE [--format text|structured] ...
//
// Exit status: 0 success, 1 usage error, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wwm/wwm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string lexicon_path;
  uint32_t min_anchor = 2;
  uint32_t min_word_len = 3;
  uint32_t min_support = 3;
  bool blocking = false;
  uint32_t cycles = 1;
  bool reapply_only = false;
  bool allow_conversion = false;
  bool lowercase = false;
  bool match_tags = false;
  std::string reference_path;
  std::string out_words;
  std::string out_blocked;
  std::string out_strategies;
  std::string out_report;
  std::string format = "text";
  uint32_t jobs = 1;
};

struct LexiconDeleter {
  void operator()(wwm_lexicon* p) const { wwm_lexicon_free(p); }
};
struct ResultDeleter {
  void operator()(wwm_result* p) const { wwm_result_free(p); }
};
using LexiconPtr = std::unique_ptr<wwm_lexicon, LexiconDeleter>;
using ResultPtr = std::unique_ptr<wwm_result, ResultDeleter>;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// Word lists come back without a trailing newline.
std::string as_lines(std::string s) {
  if (!s.empty()) s.push_back('\n');
  return s;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  wwm_string_free(s);
  return out;
}

void check(wwm_status st, const std::string& context) {
  if (st == WWM_OK) return;
  throw InputError(context + ": " + wwm_last_error());
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lexicon", cfg.lexicon_path, "Tagged lexicon, one form,TAG per line")
      ->required();
  cmd->add_option("--min-anchor", cfg.min_anchor, "Shared prefix/suffix length to compare a pair")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-word-len", cfg.min_word_len, "Shortest form considered")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-support", cfg.min_support, "Witness pairs needed to keep a strategy")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--allow-conversion", cfg.allow_conversion,
                "Compare identical forms carrying different tags");
  cmd->add_flag("--lowercase", cfg.lowercase, "Fold forms to lower case");
  cmd->add_option("--out-strategies", cfg.out_strategies, "Write the strategy table (TSV)");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads for the pair sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_generation(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--blocking", cfg.blocking, "Suppress words whose paradigm already has the tag");
  cmd->add_option("--cycles", cfg.cycles, "Rounds of creation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--reapply-only", cfg.reapply_only,
                "Later cycles reuse the first strategies instead of rediscovering");
  cmd->add_option("--out-words", cfg.out_words, "Write new words (form,TAG per line)");
  cmd->add_option("--out-blocked", cfg.out_blocked, "Write blocked words");
  cmd->add_option("--out-report", cfg.out_report, "Write the run report");
  cmd->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

std::optional<std::string> duplicate_path(const RunConfig& cfg) {
  std::set<std::string> seen{cfg.lexicon_path};
  for (const auto* p : {&cfg.reference_path, &cfg.out_words, &cfg.out_blocked,
                        &cfg.out_strategies, &cfg.out_report}) {
    if (p->empty() || *p == "-") continue;
    if (!seen.insert(*p).second) return *p;
  }
  return std::nullopt;
}

int run(const std::string& command, const RunConfig& cfg) {
  const std::string text = read_file(cfg.lexicon_path);
  wwm_lexicon* raw_lex = nullptr;
  size_t bad_line = 0;
  if (wwm_lexicon_parse(text.data(), text.size(), cfg.lowercase ? 1 : 0, &raw_lex, &bad_line) !=
      WWM_OK) {
    throw InputError(cfg.lexicon_path + ": " + wwm_last_error());
  }
  LexiconPtr lex(raw_lex);

  wwm_options opts;
  wwm_options_init(&opts);
  opts.min_anchor = cfg.min_anchor;
  opts.min_word_len = cfg.min_word_len;
  opts.min_support = cfg.min_support;
  opts.cycles = cfg.cycles;
  opts.jobs = cfg.jobs;
  opts.allow_conversion = cfg.allow_conversion ? 1 : 0;
  opts.blocking = cfg.blocking ? 1 : 0;
  opts.reapply_only = cfg.reapply_only ? 1 : 0;

  wwm_result* raw_res = nullptr;
  if (command == "learn") {
    check(wwm_learn(lex.get(), &opts, &raw_res), "learn");
    ResultPtr res(raw_res);
    char* table = nullptr;
    check(wwm_result_strategy_table(res.get(), &table), "strategy table");
    write_output(cfg.out_strategies, take(table));
    return kExitOk;
  }

  check(wwm_generate(lex.get(), &opts, &raw_res), command);
  ResultPtr res(raw_res);

  if (!cfg.out_strategies.empty()) {
    char* table = nullptr;
    check(wwm_result_strategy_table(res.get(), &table), "strategy table");
    write_output(cfg.out_strategies, take(table));
  }
  if (!cfg.out_blocked.empty()) {
    char* blocked = nullptr;
    check(wwm_result_blocked_words(res.get(), &blocked), "blocked words");
    write_output(cfg.out_blocked, as_lines(take(blocked)));
  }

  char* words = nullptr;
  check(wwm_result_new_words(res.get(), &words), "new words");
  const std::string word_text = as_lines(take(words));

  if (command == "eval") {
    const std::string reference = read_file(cfg.reference_path);
    double precision = 0.0;
    if (wwm_result_evaluate(res.get(), reference.data(), reference.size(), cfg.match_tags ? 1 : 0,
                            &precision) != WWM_OK) {
      throw InputError(cfg.reference_path + ": " + wwm_last_error());
    }
    if (!cfg.out_words.empty()) write_output(cfg.out_words, word_text);
  } else {
    write_output(cfg.out_words, word_text);
  }

  const auto fmt = cfg.format == "structured" ? WWM_FORMAT_STRUCTURED : WWM_FORMAT_TEXT;
  char* report = nullptr;
  check(wwm_result_report(res.get(), fmt, &report), "report");
  if (command == "eval" || !cfg.out_report.empty()) {
    write_output(cfg.out_report, take(report));
  } else {
    std::cerr << take(report);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whole-word morphology learner: discover word-formation strategies in a tagged "
               "lexicon and generate new words"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wwm_version_string()));

  RunConfig cfg;
  auto* learn = app.add_subcommand("learn", "Discover strategies and write the strategy table");
  add_common(learn, cfg);

  auto* generate = app.add_subcommand("generate", "Discover strategies and create new words");
  add_common(generate, cfg);
  add_generation(generate, cfg);

  auto* eval = app.add_subcommand("eval", "Generate, then measure precision against a reference");
  add_common(eval, cfg);
  add_generation(eval, cfg);
  eval->add_option("--reference", cfg.reference_path, "Reference word list, one form per line")
      ->required();
  eval->add_flag("--match-tags", cfg.match_tags, "Reference lines are form,TAG and tags must match");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (auto dup = duplicate_path(cfg)) {
    std::cerr << "error: path '" << *dup << "' is used for more than one file\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
