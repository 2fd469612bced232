#include "mwpx/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace mwpx::text {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Abbreviations whose trailing period does not end a sentence.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "mr",  "mrs", "ms",  "dr",  "prof", "st", "vs", "etc", "e.g", "i.e",
      "no",  "fig", "jr",  "sr",  "inc",  "ltd", "co", "approx"};
  return set;
}

std::string word_before(const std::string& s, std::size_t dot) {
  std::size_t end = dot;
  std::size_t begin = end;
  while (begin > 0 && (is_word_char(s[begin - 1]) || s[begin - 1] == '.')) --begin;
  std::string w = s.substr(begin, end - begin);
  while (!w.empty() && w.back() == '.') w.pop_back();
  return to_lower(w);
}

}  // namespace

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_sentences(const std::string& input) {
  std::vector<std::string> out;
  const std::string& s = input;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (c == '.') {
      // Decimal point: digit on both sides.
      if (i > 0 && i + 1 < s.size() && is_digit(s[i - 1]) && is_digit(s[i + 1]))
        continue;
      if (!word_before(s, i).empty() && abbreviations().count(word_before(s, i)))
        continue;
    }
    std::size_t end = i + 1;
    // Group runs of terminators ("?!") and attach closing quotes.
    while (end < s.size() && (s[end] == '.' || s[end] == '!' || s[end] == '?'))
      ++end;
    while (end < s.size() && (s[end] == '"' || s[end] == '\'' || s[end] == ')'))
      ++end;
    std::string seg = trim(s.substr(start, end - start));
    if (!seg.empty()) out.push_back(seg);
    start = end;
    i = end - 1;
  }
  std::string tail = trim(s.substr(start));
  if (!tail.empty()) out.push_back(tail);
  if (out.empty()) out.push_back(trim(s).empty() ? s : trim(s));
  return out;
}

std::vector<std::string> word_tokens(const std::string& input) {
  std::vector<std::string> out;
  const std::string& s = input;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_word_char(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size()) {
      if (is_word_char(s[j])) {
        ++j;
      } else if ((s[j] == '.' || s[j] == ',' || s[j] == '/') && j > i &&
                 is_digit(s[j - 1]) && j + 1 < s.size() && is_digit(s[j + 1])) {
        ++j;  // keep "4.20", "1,234", "3/4" together
      } else {
        break;
      }
    }
    out.push_back(to_lower(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::size_t count_words(const std::string& input) {
  return word_tokens(input).size();
}

bool is_stopword(const std::string& t) {
  static const std::unordered_set<std::string> set = {
      "a",   "an",  "the", "and", "or",   "but", "if",   "of",
      "to",  "in",  "on",  "at",  "by",   "for", "with", "from",
      "as",  "into", "is", "are", "was",  "were", "be",  "been",
      "that", "this", "then"};
  return set.count(t) > 0;
}

std::vector<std::string> content_words(const std::string& input) {
  std::vector<std::string> out;
  for (auto& t : word_tokens(input))
    if (!is_stopword(t)) out.push_back(t);
  return out;
}

std::string normalize_whitespace(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      if (i + 1 < s.size() && s[i + 1] == '\n') continue;
      t.push_back('\n');
    } else {
      t.push_back(s[i]);
    }
  }
  std::string out;
  out.reserve(t.size());
  int pending_newlines = 0;
  bool pending_space = false;
  for (char c : t) {
    if (c == '\n') {
      ++pending_newlines;
      pending_space = false;
    } else if (c == ' ' || c == '\t') {
      pending_space = true;
    } else {
      if (!out.empty()) {
        if (pending_newlines > 0)
          out.append(pending_newlines >= 2 ? "\n\n" : "\n");
        else if (pending_space)
          out.push_back(' ');
      }
      pending_newlines = 0;
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace mwpx::text
