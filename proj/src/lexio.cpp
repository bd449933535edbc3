#include "wwm/lexio.hpp"

#include <algorithm>

#include <unicode/normalizer2.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace wwm {

namespace {

constexpr std::string_view kBlank = " \t\r\f\v";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

// Validates strict UTF-8; returns the byte offset of the first bad sequence.
std::optional<std::size_t> first_invalid_utf8(std::string_view s) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, len, c);
    if (c < 0) return static_cast<std::size_t>(at);
  }
  return std::nullopt;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    fn(line_no, text.substr(pos, nl - pos));
    pos = nl + 1;
  }
}

bool is_comment_or_blank(std::string_view line) {
  return line.empty() || line.starts_with("//");
}

}  // namespace

std::string to_utf8(std::u32string_view form) {
  std::string out;
  out.reserve(form.size());
  for (char32_t c : form) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool err = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), err);
    if (err) throw std::invalid_argument("not a Unicode scalar value");
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  }
  return out;
}

Form from_utf8(std::string_view text) {
  if (auto bad = first_invalid_utf8(text)) {
    throw EncodingError(1, "invalid UTF-8 at byte " + std::to_string(*bad));
  }
  Form out;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto len = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(bytes, i, len, c);
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_string(const TaggedWord& w) { return to_utf8(w.form) + "," + w.tag.label; }

std::string Lexicon::index_key(const TaggedWord& w) {
  std::string key = to_utf8(w.form);
  key.push_back('\0');
  key += w.tag.label;
  return key;
}

WordId Lexicon::add(TaggedWord w) {
  auto key = index_key(w);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<WordId>(entries_.size());
  entries_.push_back(std::move(w));
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<WordId> Lexicon::id_of(const TaggedWord& w) const {
  if (auto it = index_.find(index_key(w)); it != index_.end()) return it->second;
  return std::nullopt;
}

const TaggedWord* Lexicon::find(const TaggedWord& w) const {
  auto id = id_of(w);
  return id ? &entries_[*id] : nullptr;
}

Form normalize_form(std::string_view utf8, bool lowercase) {
  if (auto bad = first_invalid_utf8(utf8)) {
    throw EncodingError(1, "invalid UTF-8 at byte " + std::to_string(*bad));
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");

  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (lowercase) s.toLower(icu::Locale::getRoot());
  icu::UnicodeString normalized = nfc->normalize(s, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");

  Form out;
  out.reserve(static_cast<std::size_t>(normalized.length()));
  for (int32_t i = 0; i < normalized.length();) {
    const UChar32 c = normalized.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

bool is_valid_tag(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ',' || c == '#' || c == '*' || c == ' ' || c == '\t' || c == '\r' ||
           c == '\n' || c == '\f' || c == '\v';
  });
}

Lexicon parse_lexicon(std::string_view text, const ParseOptions& opts) {
  Lexicon lex;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    if (auto bad = first_invalid_utf8(raw)) {
      throw EncodingError(line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const auto line = trim(raw);
    if (is_comment_or_blank(line)) return;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError(line_no, "expected form,TAG");
    const auto form = trim(line.substr(0, comma));
    const auto tag = trim(line.substr(comma + 1));
    if (form.empty()) throw ParseError(line_no, "empty form");
    if (tag.empty()) throw ParseError(line_no, "empty tag");
    if (!is_valid_tag(tag)) throw ParseError(line_no, "invalid tag '" + std::string(tag) + "'");

    lex.add(TaggedWord{normalize_form(form, opts.lowercase), Tag{std::string(tag)}});
  });
  return lex;
}

std::string write_words(std::span<const TaggedWord> words) {
  std::vector<const TaggedWord*> sorted;
  sorted.reserve(words.size());
  for (const auto& w : words) sorted.push_back(&w);
  std::sort(sorted.begin(), sorted.end(),
            [](const TaggedWord* a, const TaggedWord* b) { return *a < *b; });

  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out.push_back('\n');
    out += to_string(*sorted[i]);
  }
  return out;
}

std::vector<Form> parse_word_list(std::string_view text, const ParseOptions& opts) {
  std::vector<Form> out;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    if (auto bad = first_invalid_utf8(raw)) {
      throw EncodingError(line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const auto line = trim(raw);
    if (is_comment_or_blank(line)) return;
    out.push_back(normalize_form(line, opts.lowercase));
  });
  return out;
}

}  // namespace wwm
