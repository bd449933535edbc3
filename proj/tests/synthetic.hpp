#pragma once

// Seeded artificial languages for precision measurements. Each returns a
// sample lexicon and the complete set of words the language licenses.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wwm/types.hpp"

namespace wwm::testing {

struct SyntheticLanguage {
  Lexicon lexicon;
  std::vector<TaggedWord> closure;
};

namespace detail {

inline std::string random_stem(std::mt19937& rng, std::size_t len) {
  static const std::string letters = "bcdfghjklmnpqrstvwxz";
  static const std::string vowels = "aeiou";
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    const std::string& pool = i % 2 ? vowels : letters;
    s.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
  }
  return s;
}

inline std::vector<std::string> distinct_stems(std::mt19937& rng, std::size_t n, std::size_t min_len,
                                               std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> length(min_len, max_len);
  std::vector<std::string> out;
  std::set<std::string> seen;
  while (out.size() < n) {
    std::string s = random_stem(rng, length(rng));
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// One inflection class: every stem takes every tag's suffix. The sample
/// keeps each form with probability `keep`.
inline SyntheticLanguage regular_language(std::uint32_t seed, std::size_t stems, double keep = 0.6) {
  const std::vector<std::pair<std::string, std::string>> paradigm = {
      {"", "N"}, {"a", "Npl"}, {"om", "Ngen"}, {"ish", "ADJ"}, {"ule", "DIM"}, {"arto", "ADV"}};
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(keep);
  SyntheticLanguage lang;
  for (const auto& stem : detail::distinct_stems(rng, stems, 6, 6)) {
    for (const auto& [suffix, tag] : paradigm) {
      TaggedWord w{from_utf8(stem + suffix), Tag{tag}};
      lang.closure.push_back(w);
      if (coin(rng)) lang.lexicon.add(w);
    }
  }
  return lang;
}

/// Two verb classes whose second-singular forms both end in -s, so a
/// second-singular form alone does not reveal its class:
///   e-class  stem+es, stem+er, stem+ons, stem+ez
///   r-class  stem+s,  stem+re, stem+ons, stem+ez
inline SyntheticLanguage ambiguous_language(std::uint32_t seed, std::size_t stems, double keep = 0.6) {
  const std::vector<std::pair<std::string, std::string>> e_class = {
      {"es", "V2s"}, {"er", "INF"}, {"ons", "V1p"}, {"ez", "V2p"}};
  const std::vector<std::pair<std::string, std::string>> r_class = {
      {"s", "V2s"}, {"re", "INF"}, {"ons", "V1p"}, {"ez", "V2p"}};
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(keep);
  SyntheticLanguage lang;
  // Varying stem lengths let each class's templates admit the other class's
  // second-singular forms. Even-length stems end in a vowel (e-class), odd
  // ones in a consonant (r-class), so the classes never share a form.
  const auto all = detail::distinct_stems(rng, stems, 4, 9);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string& stem = all[i];
    const bool r_verb = stem.size() % 2 == 1;
    for (const auto& [suffix, tag] : r_verb ? r_class : e_class) {
      TaggedWord w{from_utf8(stem + suffix), Tag{tag}};
      lang.closure.push_back(w);
      if (coin(rng)) lang.lexicon.add(w);
    }
  }
  return lang;
}

}  // namespace wwm::testing
