#include "fatpoints/json_io.hpp"

#include <string>

namespace fatpoints {

using nlohmann::json;

json table_json(const DegreeTable& table) {
  json j = json::object();
  for (auto [t, n] : table) j[std::to_string(t)] = n;
  return j;
}

DegreeTable table_from_json(const json& j) {
  DegreeTable table;
  for (auto it = j.begin(); it != j.end(); ++it) table[std::stoi(it.key())] = it.value().get<int>();
  return table;
}

json to_json(const CohomologySummary& s) {
  json j{{"h0", s.h0},       {"h1", s.h1},          {"h2", s.h2},
         {"chi", s.chi},     {"effective", s.effective}, {"nef", s.nef}};
  if (s.ample_defined)
    j["ample"] = s.ample;
  else
    j["ample"] = nullptr;
  return j;
}

json to_json(const MuStep& step) {
  json j{{"step", to_string(step.kind)}, {"after", format_class(step.after)}};
  if (step.curve) j["curve"] = format_class(*step.curve);
  if (step.kind == MuStepKind::Contract) j["point"] = step.index;
  switch (step.kind) {
    case MuStepKind::FewSections:
    case MuStepKind::ConicPerp:
    case MuStepKind::Pencil:
    case MuStepKind::Ample: j["ker"] = step.ker; break;
    default: break;
  }
  return j;
}

json to_json(const MuReport& report) {
  json trace = json::array();
  for (const auto& s : report.trace) trace.push_back(to_json(s));
  return json{{"ker", report.ker},
              {"cok", report.cok},
              {"lambda_prime", report.lambda_prime},
              {"lambda", report.lambda},
              {"t", report.t},
              {"maximal_rank", report.maximal_rank},
              {"trace", trace}};
}

json to_json(const ResolutionSummary& s) {
  return json{{"r", s.r},
              {"mults", s.mults},
              {"alpha", s.alpha},
              {"beta", s.beta},
              {"degenerate", s.degenerate},
              {"hilbert", table_json(s.hilbert)},
              {"generators", table_json(s.generators)},
              {"syzygies", table_json(s.syzygies)},
              {"display", s.display}};
}

json to_json(const OracleReport& report) {
  auto j = to_json(report.summary);
  j["prime"] = report.prime;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  json per = json::array();
  for (const auto& tb : report.per_trial)
    per.push_back(json{{"hilbert", tb.hilbert},
                       {"mu_ranks", tb.mu_ranks},
                       {"generators", tb.generators},
                       {"alpha", tb.alpha},
                       {"beta", tb.beta}});
  j["per_trial"] = per;
  j["disagreements"] = report.disagreements;
  return j;
}

}  // namespace fatpoints
