#include "mwpx/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace mwpx::corpus {

using nlohmann::json;

void Problem::validate() const {
  if (text.empty()) throw CorpusError("problem " + id + ": text is empty");
  if (round < 0) throw CorpusError("problem " + id + ": negative round");
  if (round == 0 && id != seed_id)
    throw CorpusError("problem " + id + ": round 0 requires id == seed_id");
}

std::string to_string(PromptMethod m) {
  switch (m) {
    case PromptMethod::CoT8: return "CoT8";
    case PromptMethod::ZeroCoT: return "ZeroCoT";
    case PromptMethod::PS: return "PS";
    case PromptMethod::PSplus: return "PSplus";
    case PromptMethod::CoRe: return "CoRe";
    case PromptMethod::SftEval: return "SftEval";
  }
  throw CorpusError("unknown prompt method");
}

PromptMethod prompt_method_from_string(const std::string& s) {
  if (s == "CoT8") return PromptMethod::CoT8;
  if (s == "ZeroCoT") return PromptMethod::ZeroCoT;
  if (s == "PS") return PromptMethod::PS;
  if (s == "PSplus") return PromptMethod::PSplus;
  if (s == "CoRe") return PromptMethod::CoRe;
  if (s == "SftEval") return PromptMethod::SftEval;
  throw CorpusError("unknown prompt method: " + s);
}

std::string to_string(ExtractionRoute r) {
  switch (r) {
    case ExtractionRoute::rule: return "rule";
    case ExtractionRoute::llm: return "llm";
    case ExtractionRoute::failed: return "failed";
  }
  throw CorpusError("unknown extraction route");
}

ExtractionRoute extraction_route_from_string(const std::string& s) {
  if (s == "rule") return ExtractionRoute::rule;
  if (s == "llm") return ExtractionRoute::llm;
  if (s == "failed") return ExtractionRoute::failed;
  throw CorpusError("unknown extraction route: " + s);
}

namespace {

Rational parse_ground_truth(const std::string& s, const std::string& where) {
  auto r = Rational::parse(s);
  if (!r) throw CorpusError(where + ": unparseable ground_truth \"" + s + "\"");
  return *r;
}

Problem problem_from_json(const json& j, const std::string& where) {
  Problem p;
  try {
    p.id = j.at("id").get<std::string>();
    p.seed_id = j.at("seed_id").get<std::string>();
    p.round = j.at("round").get<int>();
    p.text = j.at("text").get<std::string>();
    p.ground_truth = parse_ground_truth(j.at("ground_truth").get<std::string>(), where);
    p.token_count = j.at("token_count").get<std::size_t>();
    p.token_counter = j.at("token_counter").get<std::string>();
  } catch (const json::exception& e) {
    throw CorpusError(where + ": " + e.what());
  }
  p.validate();
  return p;
}

json problem_to_json(const Problem& p) {
  return json{{"id", p.id},
              {"seed_id", p.seed_id},
              {"round", p.round},
              {"text", p.text},
              {"ground_truth", p.ground_truth.to_string()},
              {"token_count", p.token_count},
              {"token_counter", p.token_counter}};
}

GradedSolution solution_from_json(const json& j, const std::string& where) {
  GradedSolution s;
  try {
    s.problem_id = j.at("problem_id").get<std::string>();
    s.model_name = j.at("model").get<std::string>();
    s.prompt_method = prompt_method_from_string(j.at("method").get<std::string>());
    s.raw_response = j.at("raw_response").get<std::string>();
    if (j.contains("extracted_answer") && !j.at("extracted_answer").is_null()) {
      auto r = Rational::parse(j.at("extracted_answer").get<std::string>());
      if (!r) throw CorpusError(where + ": unparseable extracted_answer");
      s.extracted_answer = *r;
    }
    s.correct = j.at("correct").get<bool>();
    s.extraction_route =
        extraction_route_from_string(j.at("extraction_route").get<std::string>());
  } catch (const json::exception& e) {
    throw CorpusError(where + ": " + e.what());
  }
  if (s.correct && !s.extracted_answer)
    throw CorpusError(where + ": correct=true but extracted_answer missing");
  return s;
}

json solution_to_json(const GradedSolution& s) {
  json j{{"problem_id", s.problem_id},
         {"model", s.model_name},
         {"method", to_string(s.prompt_method)},
         {"raw_response", s.raw_response},
         {"correct", s.correct},
         {"extraction_route", to_string(s.extraction_route)}};
  if (s.extracted_answer)
    j["extracted_answer"] = s.extracted_answer->to_string();
  else
    j["extracted_answer"] = nullptr;
  return j;
}

bool blank_line(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<json> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path);
  std::vector<json> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_line(line)) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw CorpusError(path + ":" + std::to_string(lineno) + ": malformed record");
    records.push_back(std::move(j));
  }
  return records;
}

void check_ground_truth_consistency(const std::vector<Problem>& problems) {
  std::map<std::string, const Problem*> first;
  for (const auto& p : problems) {
    auto [it, inserted] = first.emplace(p.seed_id, &p);
    if (!inserted && it->second->ground_truth != p.ground_truth)
      throw CorpusError("seed " + p.seed_id + ": ground_truth differs between " +
                        it->second->id + " and " + p.id);
  }
}

}  // namespace

bool text_is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<Problem> load_problems(const std::string& path) {
  std::vector<Problem> out;
  std::size_t idx = 0;
  for (const auto& j : read_jsonl(path)) {
    ++idx;
    out.push_back(problem_from_json(j, path + " record " + std::to_string(idx)));
  }
  check_ground_truth_consistency(out);
  return out;
}

void save_problems(std::vector<Problem> problems, const std::string& path) {
  for (const auto& p : problems) p.validate();
  check_ground_truth_consistency(problems);
  std::sort(problems.begin(), problems.end(), [](const Problem& a, const Problem& b) {
    return std::tie(a.seed_id, a.round) < std::tie(b.seed_id, b.round);
  });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CorpusError("cannot write " + path);
  for (const auto& p : problems) out << problem_to_json(p).dump() << "\n";
  if (!out) throw CorpusError("write failure on " + path);
}

std::vector<GradedSolution> load_solutions(const std::string& path) {
  std::vector<GradedSolution> out;
  std::size_t idx = 0;
  for (const auto& j : read_jsonl(path)) {
    ++idx;
    out.push_back(solution_from_json(j, path + " record " + std::to_string(idx)));
  }
  return out;
}

void save_solutions(std::vector<GradedSolution> solutions, const std::string& path) {
  std::sort(solutions.begin(), solutions.end(),
            [](const GradedSolution& a, const GradedSolution& b) {
              return std::tie(a.problem_id, a.model_name, a.prompt_method) <
                     std::tie(b.problem_id, b.model_name, b.prompt_method);
            });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CorpusError("cannot write " + path);
  for (const auto& s : solutions) out << solution_to_json(s).dump() << "\n";
  if (!out) throw CorpusError("write failure on " + path);
}

std::vector<Lineage> build_lineages(const std::vector<Problem>& problems) {
  check_ground_truth_consistency(problems);
  std::map<std::string, Lineage> by_seed;
  for (const auto& p : problems) {
    p.validate();
    auto& lin = by_seed[p.seed_id];
    lin.seed_id = p.seed_id;
    auto [it, inserted] = lin.variants.emplace(p.round, p);
    if (!inserted)
      throw CorpusError("seed " + p.seed_id + ": duplicate round " +
                        std::to_string(p.round));
  }
  std::vector<Lineage> out;
  out.reserve(by_seed.size());
  for (auto& [seed_id, lin] : by_seed) {
    if (!lin.variants.count(0))
      throw CorpusError("seed " + seed_id + ": missing round 0");
    int expected = 0;
    for (const auto& [round, p] : lin.variants) {
      if (round != expected)
        throw CorpusError("seed " + seed_id + ": gap before round " +
                          std::to_string(round));
      ++expected;
    }
    out.push_back(std::move(lin));
  }
  return out;
}

RoundSet round_set(const std::vector<Lineage>& lineages, int round) {
  RoundSet rs;
  rs.round = round;
  for (const auto& lin : lineages) {
    auto it = lin.variants.find(round);
    if (it != lin.variants.end()) rs.problems.push_back(it->second);
  }
  return rs;
}

}  // namespace mwpx::corpus
