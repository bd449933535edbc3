#pragma once

// Core value types shared by every stage of the pipeline.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wwm {

/// One grapheme is one Unicode scalar value of an NFC-normalized form.
using Grapheme = char32_t;
using Form = std::u32string;
using WordId = std::uint32_t;

/// Opaque category label ("Ns", "V3s", "INF" ...). Compared bytewise.
struct Tag {
  std::string label;

  Tag() = default;
  explicit Tag(std::string l) : label(std::move(l)) {}

  auto operator<=>(const Tag&) const = default;
  bool operator==(const Tag&) const = default;
};

struct TaggedWord {
  Form form;
  Tag tag;

  auto operator<=>(const TaggedWord&) const = default;
  bool operator==(const TaggedWord&) const = default;
};

std::string to_utf8(std::u32string_view form);

/// Decodes strict UTF-8 into scalar values without normalization.
/// Throws EncodingError on malformed input.
Form from_utf8(std::string_view text);

/// UTF-8 rendering of a tagged word as "form,TAG".
std::string to_string(const TaggedWord& w);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EncodingError : public std::runtime_error {
 public:
  EncodingError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Ordered, duplicate-free list of tagged words. Ids are positions in input order.
class Lexicon {
 public:
  Lexicon() = default;

  /// Appends the word unless the exact (form, tag) pair is present.
  /// Returns the id of the (possibly pre-existing) entry.
  WordId add(TaggedWord w);

  const TaggedWord* find(const TaggedWord& w) const;
  std::optional<WordId> id_of(const TaggedWord& w) const;
  bool contains(const TaggedWord& w) const { return id_of(w).has_value(); }

  const TaggedWord& operator[](WordId id) const { return entries_[id]; }
  const std::vector<TaggedWord>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  static std::string index_key(const TaggedWord& w);

  std::vector<TaggedWord> entries_;
  std::unordered_map<std::string, WordId> index_;
};

}  // namespace wwm
