#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwpx/rational.hpp"

namespace mwpx::corpus {

// One math word problem: a seed (round 0) or one of its extended variants.
// All problems sharing seed_id share one exact ground truth.
struct Problem {
  std::string id;
  std::string seed_id;
  int round = 0;
  std::string text;
  Rational ground_truth;
  std::size_t token_count = 0;
  std::string token_counter;

  void validate() const;
};

// A seed plus its round-indexed variants, contiguous from round 0.
struct Lineage {
  std::string seed_id;
  std::map<int, Problem> variants;

  int max_round() const { return variants.empty() ? -1 : variants.rbegin()->first; }
  const Problem& at(int round) const { return variants.at(round); }
};

struct RoundSet {
  int round = 0;
  std::vector<Problem> problems;
};

enum class PromptMethod { CoT8, ZeroCoT, PS, PSplus, CoRe, SftEval };

std::string to_string(PromptMethod m);
PromptMethod prompt_method_from_string(const std::string& s);

enum class ExtractionRoute { rule, llm, failed };

std::string to_string(ExtractionRoute r);
ExtractionRoute extraction_route_from_string(const std::string& s);

// A model response to one problem, graded against the ground truth.
struct GradedSolution {
  std::string problem_id;
  std::string model_name;
  PromptMethod prompt_method = PromptMethod::ZeroCoT;
  std::string raw_response;
  std::optional<Rational> extracted_answer;
  bool correct = false;
  ExtractionRoute extraction_route = ExtractionRoute::failed;
};

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSONL, one self-contained record per line. Loading validates per-record
// invariants and cross-record ground-truth consistency per seed.
std::vector<Problem> load_problems(const std::string& path);
void save_problems(std::vector<Problem> problems, const std::string& path);

std::vector<GradedSolution> load_solutions(const std::string& path);
void save_solutions(std::vector<GradedSolution> solutions, const std::string& path);

// Groups problems by seed_id, enforcing the chain invariant (round 0 present,
// no gaps). Output sorted by seed_id.
std::vector<Lineage> build_lineages(const std::vector<Problem>& problems);

// Problems at one round across all lineages that reach it.
RoundSet round_set(const std::vector<Lineage>& lineages, int round);

}  // namespace mwpx::corpus
