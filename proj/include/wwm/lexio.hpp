#pragma once

// Reading and writing of tagged word lists.
//
// Lexicon file: UTF-8, one "form,TAG" entry per line. Lines whose first
// non-blank characters are "//" are comments; blank lines are skipped.
// Whitespace around either field is trimmed.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wwm/types.hpp"

namespace wwm {

struct ParseOptions {
  bool lowercase = false;
};

/// NFC-normalizes (and optionally lowercases) one UTF-8 form.
Form normalize_form(std::string_view utf8, bool lowercase = false);

/// Throws ParseError on a malformed line and EncodingError on invalid UTF-8.
Lexicon parse_lexicon(std::string_view text, const ParseOptions& opts = {});

/// One "form,TAG" line per word, sorted by (form, tag), '\n'-separated with
/// no trailing newline.
std::string write_words(std::span<const TaggedWord> words);

/// Bare word list (one form per line, comments and blanks skipped).
std::vector<Form> parse_word_list(std::string_view text, const ParseOptions& opts = {});

bool is_valid_tag(std::string_view label);

}  // namespace wwm
