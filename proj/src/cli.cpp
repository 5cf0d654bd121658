#include "fatpoints/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "fatpoints/cohom.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/json_io.hpp"
#include "fatpoints/mu.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

using nlohmann::json;

SweepReport sweep(int max_degree) {
  if (max_degree <= 0) throw ArgumentError("sweep needs a positive degree bound");
  SweepReport report;
  for (const auto& f : sorted_nef_classes(7, max_degree)) {
    const auto general = mu_dims(f);
    const auto fast = fast_path_nef7(f);
    SweepRow row;
    row.f = f;
    row.t = general.t;
    row.lambda = general.lambda;
    row.ker = general.ker;
    row.cok = general.cok;
    row.maximal_rank = general.maximal_rank;
    row.exception = is_nef7_exception(f);
    row.predicted_failure = max_rank_failure(f);
    row.fast_path_agrees = fast.ker == general.ker && fast.cok == general.cok;
    report.failures += row.maximal_rank ? 0 : 1;
    report.exceptions += row.exception ? 1 : 0;
    report.max_deficiency = std::max(report.max_deficiency, row.cok - row.lambda);
    report.fast_path_mismatches += row.fast_path_agrees ? 0 : 1;
    report.prediction_mismatches += row.predicted_failure == !row.maximal_rank ? 0 : 1;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (c == ' ' || c == '\t' || c == '\r')) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (quoted) throw ArgumentError("unterminated quote in batch line");
  if (have) out.push_back(cur);
  return out;
}

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

struct Request {
  std::string format = "text";
  std::string class_text;
  int r = 0;
  std::string mults_text;
  std::optional<int> degree;
  OracleConfig oracle;
  int max_degree = 0;
};

FatPointScheme scheme_from(const Request& req) {
  auto mults = parse_int_list(req.mults_text);
  if (static_cast<int>(mults.size()) != req.r)
    throw ArgumentError("-r " + std::to_string(req.r) + " does not match " +
                        std::to_string(mults.size()) + " multiplicities");
  return FatPointScheme(std::move(mults));
}

void emit(std::ostream& out, const Request& req, const json& j, const std::string& text) {
  if (req.format == "json")
    out << j.dump() << '\n';
  else
    out << text;
}

void run_class_query(const std::string& cmd, const Request& req, std::ostream& out) {
  const auto f = parse_class(req.class_text);
  json j{{"command", cmd}, {"class", format_class(f)}};
  std::ostringstream text;
  if (cmd == "mu") {
    const auto rep = mu_dims(f);
    j.update(to_json(rep));
    text << "ker " << rep.ker << "\ncok " << rep.cok << "\nlambda' " << rep.lambda_prime
         << "\nlambda " << rep.lambda << "\nt " << rep.t << "\nmaximal_rank "
         << bool_text(rep.maximal_rank) << "\ntrace:\n"
         << render_trace(rep.trace);
  } else if (cmd == "nef" || cmd == "ample") {
    const bool v = cmd == "nef" ? is_nef(f) : is_ample(f);
    j["value"] = v;
    text << bool_text(v) << '\n';
  } else {
    int v = 0;
    if (cmd == "h0") v = h0(f);
    if (cmd == "h1") v = h1(f);
    if (cmd == "h2") v = h2(f);
    if (cmd == "chi") v = chi(f);
    j["value"] = v;
    text << v << '\n';
  }
  emit(out, req, j, text.str());
}

std::string render_tables(const ResolutionSummary& s) {
  std::ostringstream os;
  os << s.display << '\n';
  os << "alpha " << s.alpha << "\nbeta " << s.beta << '\n';
  if (s.degenerate) os << "degenerate (unit ideal)\n";
  os << "t\thilbert\tgenerators\tsyzygies\n";
  for (auto [t, h] : s.hilbert) {
    auto g = s.generators.count(t) ? s.generators.at(t) : 0;
    auto z = s.syzygies.count(t) ? s.syzygies.at(t) : 0;
    os << t << '\t' << h << '\t' << g << '\t' << z << '\n';
  }
  return os.str();
}

void run_scheme_query(const std::string& cmd, const Request& req, std::ostream& out) {
  const auto z = scheme_from(req);
  json j{{"command", cmd}};
  std::ostringstream text;
  if (cmd == "resolve") {
    const auto s = resolve(z);
    j.update(to_json(s));
    text << render_tables(s);
  } else {
    const auto rep = oracle_resolve(z, req.oracle);
    j.update(to_json(rep));
    text << render_tables(rep.summary);
    text << "prime " << rep.prime << "\nseed " << rep.seed << "\ntrials " << rep.trials << '\n';
    for (const auto& d : rep.disagreements) text << "disagreement: " << d << '\n';
  }
  if (req.degree) {
    const int t = *req.degree;
    const auto f = degree_class(z, t);
    json at{{"t", t}, {"class", format_class(f)}, {"hilbert", hilbert_function(z, t)}};
    text << "degree " << t << ": class " << format_class(f) << ", dim I_t "
         << hilbert_function(z, t);
    if (z.r() <= 7) {
      const auto rep = mu_dims(f);
      at["ker"] = rep.ker;
      at["cok"] = rep.cok;
      text << ", ker " << rep.ker << ", cok " << rep.cok;
    }
    text << '\n';
    j["degree"] = at;
  }
  emit(out, req, j, text.str());
}

void run_sweep(const Request& req, std::ostream& out) {
  const auto rep = sweep(req.max_degree);
  json rows = json::array();
  std::ostringstream csv;
  csv << "class,t,lambda,ker,cok,maximal_rank,exception,predicted_failure,fast_path_agrees\n";
  for (const auto& row : rep.rows) {
    rows.push_back(json{{"class", format_class(row.f)},
                        {"t", row.t},
                        {"lambda", row.lambda},
                        {"ker", row.ker},
                        {"cok", row.cok},
                        {"maximal_rank", row.maximal_rank},
                        {"exception", row.exception},
                        {"predicted_failure", row.predicted_failure},
                        {"fast_path_agrees", row.fast_path_agrees}});
    csv << '"' << format_class(row.f) << "\"," << row.t << ',' << row.lambda << ',' << row.ker
        << ',' << row.cok << ',' << bool_text(row.maximal_rank) << ',' << bool_text(row.exception)
        << ',' << bool_text(row.predicted_failure) << ',' << bool_text(row.fast_path_agrees)
        << '\n';
  }
  json summary{{"rows", rep.rows.size()},
               {"failures", rep.failures},
               {"exceptions", rep.exceptions},
               {"max_deficiency", rep.max_deficiency},
               {"fast_path_mismatches", rep.fast_path_mismatches},
               {"prediction_mismatches", rep.prediction_mismatches}};
  csv << "# rows " << rep.rows.size() << ", failures " << rep.failures << ", exceptions "
      << rep.exceptions << ", max_deficiency " << rep.max_deficiency << ", fast_path_mismatches "
      << rep.fast_path_mismatches << ", prediction_mismatches " << rep.prediction_mismatches
      << '\n';
  emit(out, req, json{{"command", "sweep"}, {"rows", rows}, {"summary", summary}}, csv.str());
}

int run_batch(std::istream& in, std::ostream& out, std::ostream& err) {
  int worst = kExitOk;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> args;
    std::ostringstream sub_out, sub_err;
    int status = kExitOk;
    try {
      args = split_command_line(line);
    } catch (const ArgumentError& e) {
      sub_err << e.what();
      status = kExitInputError;
    }
    if (status == kExitOk && !args.empty() && args.front() == "batch") {
      sub_err << "batch cannot be nested";
      status = kExitInputError;
    }
    if (status == kExitOk) {
      args.push_back("--format");
      args.push_back("json");
      std::istringstream no_input;
      status = run_cli(args, no_input, sub_out, sub_err);
    }
    if (status == kExitOk) {
      out << sub_out.str();
    } else {
      // first line only; the usage text that follows is noise in JSON lines
      auto msg = sub_err.str();
      msg = msg.substr(0, msg.find('\n'));
      out << json{{"error", msg}, {"status", status}, {"input", line}}.dump() << '\n';
      worst = std::max(worst, status);
    }
  }
  (void)err;
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cohomology, multiplication maps and resolutions for fat points in the plane",
               "fatpoints"};
  app.require_subcommand(1);
  app.fallthrough();
  Request req;
  app.add_option("--format", req.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::pair<std::string, CLI::App*>> subs;
  const std::vector<std::pair<std::string, std::string>> class_cmds = {
      {"h0", "dim H^0 of a class"},
      {"h1", "dim H^1 of a class"},
      {"h2", "dim H^2 of a class"},
      {"chi", "Euler characteristic of a class"},
      {"nef", "whether a class is nef"},
      {"ample", "whether a class is ample"},
      {"mu", "kernel and cokernel of the multiplication map by linear forms"}};
  for (const auto& [name, help] : class_cmds) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--class", req.class_text, "Class \"d;m1,...,mr\"")->required();
    subs.emplace_back(name, sub);
  }
  for (const std::string name : {"resolve", "oracle"}) {
    auto* sub = app.add_subcommand(
        name, name == "resolve" ? "minimal free resolution of a fat point ideal"
                                : "finite-field cross-check of the resolution data");
    sub->add_option("-r", req.r, "Number of points")->required()->check(CLI::Range(0, 8));
    sub->add_option("-m", req.mults_text, "Multiplicities m1,...,mr");
    sub->add_option("-t", req.degree, "Also report the given degree");
    sub->add_option("--prime", req.oracle.prime, "Oracle modulus");
    sub->add_option("--seed", req.oracle.seed, "Oracle seed");
    sub->add_option("--trials", req.oracle.trials, "Oracle trials");
    subs.emplace_back(name, sub);
  }
  auto* sweep_cmd = app.add_subcommand("sweep", "classify nef classes on the 7-point blow-up");
  sweep_cmd->add_option("--max-degree", req.max_degree, "Degree bound")->required();
  subs.emplace_back("sweep", sweep_cmd);
  auto* batch_cmd = app.add_subcommand("batch", "one query per input line, JSON lines out");
  subs.emplace_back("batch", batch_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInputError;
  }

  std::string cmd;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cmd = name;

  try {
    if (cmd == "batch") return run_batch(in, out, err);
    if (cmd == "sweep")
      run_sweep(req, out);
    else if (cmd == "resolve" || cmd == "oracle")
      run_scheme_query(cmd, req, out);
    else
      run_class_query(cmd, req, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace fatpoints
