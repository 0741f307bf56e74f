// arcver: build triangulations and arc-complex windows of compact surfaces
// with boundary, run the verification reports, search for arc
// configurations, and export flip-graph balls / complex windows.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 invalid invocation.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "arcc/io.hpp"
#include "arcc/verify.hpp"

namespace {

// JSON config files mirror the flags; nested objects name subcommands, e.g.
// {"verify": {"suite": {"genus": 2, "radius": 3}}}.
class ConfigJson : public CLI::Config {
public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    arcc::ordered_json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (!opt->get_lnames().empty() && opt->get_configurable()) {
        std::string name = opt->get_lnames()[0];
        if (opt->get_type_size() != 0) {
          if (opt->count() == 1)
            j[name] = opt->results().at(0);
          else if (opt->count() > 1)
            j[name] = opt->results();
          else if (default_also && !opt->get_default_str().empty())
            j[name] = opt->get_default_str();
        } else if (opt->count() > 0 || default_also) {
          j[name] = opt->count() > 0;
        }
      }
    }
    for (const CLI::App* sub : app->get_subcommands({}))
      j[sub->get_name()] = arcc::ordered_json::parse(to_config(sub, default_also, false, ""));
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    arcc::ordered_json j;
    try {
      input >> j;
    } catch (const arcc::ordered_json::exception& e) {
      throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
    }
    return collect(j, {});
  }

private:
  std::vector<CLI::ConfigItem> collect(const arcc::ordered_json& j,
                                       std::vector<std::string> prefix) const {
    std::vector<CLI::ConfigItem> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object()) {
        auto deeper = prefix;
        deeper.push_back(it.key());
        auto sub = collect(*it, deeper);
        out.insert(out.end(), sub.begin(), sub.end());
        continue;
      }
      CLI::ConfigItem item;
      item.parents = prefix;
      item.name = it.key();
      if (it->is_boolean())
        item.inputs = {it->get<bool>() ? "true" : "false"};
      else if (it->is_string())
        item.inputs = {it->get<std::string>()};
      else if (it->is_array())
        for (const auto& e : *it) item.inputs.push_back(e.dump());
      else
        item.inputs = {it->dump()};
      out.push_back(std::move(item));
    }
    return out;
  }
};

struct CommonArgs {
  int genus = 2;
  int boundary = 2;
  bool orientable = false;
  int radius = 3;
  std::size_t max_nodes = 500000;
};

void add_signature_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--genus", args.genus, "genus G");
  cmd->add_option("--boundary", args.boundary, "boundary circles R");
  cmd->add_flag("--orientable", args.orientable, "orientable surface (default nonorientable)");
  cmd->add_option("--radius", args.radius, "flip-graph ball radius");
  cmd->add_option("--max-nodes", args.max_nodes, "ball node cap (truncation is reported)");
}

int emit_report(const arcc::Report& report, bool as_json) {
  if (as_json) {
    arcc::ordered_json j;
    j["case"] = report.case_id;
    j["pass"] = report.pass();
    j["seconds"] = report.seconds;
    j["notes"] = report.notes;
    arcc::ordered_json checks = arcc::ordered_json::array();
    for (const auto& c : report.checks)
      checks.push_back(arcc::ordered_json{{"name", c.name},
                                          {"expected", c.expected},
                                          {"observed", c.observed},
                                          {"pass", c.pass}});
    j["checks"] = std::move(checks);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << arcc::format_report(report);
  }
  return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"arc complex engine and verifier for compact surfaces with boundary"};
  app.set_config("--config", "", "read options from a JSON config file");
  app.config_formatter(std::make_shared<ConfigJson>());
  app.fallthrough(true);
  app.require_subcommand(1);

  // verify small-case / verify suite
  auto* verify = app.add_subcommand("verify", "run verification reports");
  verify->fallthrough(true);
  verify->require_subcommand(1);

  std::string case_arg = "1,2";
  bool as_json = false;
  auto* small = verify->add_subcommand("small-case", "reproduce one paper small case");
  small->add_option("--case", case_arg, "one of 1,1  1,2  2,1")->required();
  small->add_flag("--json", as_json, "emit the report as JSON");

  CommonArgs suite_args;
  int samples = 1000;
  std::uint64_t seed = 1;
  bool suite_json = false;
  auto* suite = verify->add_subcommand("suite", "invariant sweep over a flip-graph ball");
  add_signature_flags(suite, suite_args);
  suite->add_option("--samples", samples, "sampled (node, arc) pairs");
  suite->add_option("--seed", seed, "RNG seed");
  suite->add_flag("--json", suite_json, "emit the report as JSON");

  // find-config
  CommonArgs fc_args;
  std::string pattern_path;
  auto* fc = app.add_subcommand("find-config", "search a ball for an arc configuration");
  fc->add_option("--pattern", pattern_path, "pattern JSON file")->required();
  add_signature_flags(fc, fc_args);

  // export
  CommonArgs ex_args;
  std::string what = "complex", format = "json", out_path;
  auto* ex = app.add_subcommand("export", "export a ball or complex window");
  ex->add_option("--what", what, "ball | complex")->required();
  ex->add_option("--format", format, "dot | json")->required();
  ex->add_option("--out", out_path, "output path")->required();
  add_signature_flags(ex, ex_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (small->parsed()) {
      arcc::SmallCase c;
      if (case_arg == "1,1")
        c = arcc::SmallCase::n11;
      else if (case_arg == "1,2")
        c = arcc::SmallCase::n12;
      else if (case_arg == "2,1")
        c = arcc::SmallCase::n21;
      else {
        std::cerr << "unknown case " << case_arg << " (expected 1,1 or 1,2 or 2,1)\n";
        return 2;
      }
      return emit_report(arcc::run_small_case_report(c), as_json);
    }
    if (suite->parsed()) {
      arcc::SuiteParams params;
      params.genus = suite_args.genus;
      params.boundary = suite_args.boundary;
      params.orientable = suite_args.orientable;
      params.radius = suite_args.radius;
      params.samples = samples;
      params.seed = seed;
      params.max_nodes = suite_args.max_nodes;
      return emit_report(arcc::run_invariant_suite(params), suite_json);
    }
    if (fc->parsed()) {
      auto pattern = arcc::pattern_from_json_text(arcc::read_file(pattern_path));
      auto witness = arcc::find_configuration(pattern, fc_args.genus, fc_args.boundary,
                                              fc_args.radius, fc_args.orientable);
      if (witness.found) {
        std::cout << "witness found (radius " << witness.radius << "):\n";
        for (const auto& [label, key] : witness.keys)
          std::cout << "  " << label << " -> " << key << "\n";
      } else {
        std::cout << "not found within radius " << witness.radius << "\n";
      }
      return 0;
    }
    if (ex->parsed()) {
      if (what == "ball") {
        arcc::Triangulation root =
            arcc::build_surface(ex_args.genus, ex_args.boundary, ex_args.orientable);
        arcc::BallLimits limits;
        limits.max_nodes = ex_args.max_nodes;
        auto ball = arcc::flip_graph_ball(root, ex_args.radius, limits);
        arcc::export_graph(ball, format, out_path);
        if (ball.truncated) std::cout << "note: ball truncated at the node cap\n";
      } else if (what == "complex") {
        arcc::BallLimits limits;
        limits.max_nodes = ex_args.max_nodes;
        auto w = arcc::build_complex(ex_args.genus, ex_args.boundary, ex_args.orientable,
                                     ex_args.radius, limits);
        arcc::export_graph(w, format, out_path);
      } else {
        std::cerr << "unknown --what " << what << " (expected ball or complex)\n";
        return 2;
      }
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }
  } catch (const arcc::rejected_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const arcc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
