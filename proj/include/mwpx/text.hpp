#pragma once

#include <string>
#include <vector>

namespace mwpx::text {

// Deterministic sentence splitter on . ! ? with guards for decimals
// ("$4.20"), common abbreviations, and terminators inside closing quotes.
// Never returns empty segments; concatenating the segments (modulo
// whitespace) reproduces the input.
std::vector<std::string> split_sentences(const std::string& input);

// Lowercased word tokens: maximal runs of alphanumerics (any non-ASCII byte
// counts as a letter), with . , / kept inside when flanked by digits so
// "4.20" and "1,234" stay single tokens.
std::vector<std::string> word_tokens(const std::string& input);

// word_tokens().size(); the "words-v1" token counter.
std::size_t count_words(const std::string& input);
inline const char* kWordCounterName = "words-v1";

bool is_stopword(const std::string& lowercased_token);

// word_tokens minus stopwords.
std::vector<std::string> content_words(const std::string& input);

std::string trim(const std::string& s);

// Trims, normalizes line endings to \n, collapses runs of spaces/tabs, and
// caps blank runs at one empty line. Keeps single newlines so step structure
// survives.
std::string normalize_whitespace(const std::string& s);

std::string to_lower(std::string s);

}  // namespace mwpx::text
