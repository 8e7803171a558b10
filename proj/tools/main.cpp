#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "groupoidal/error.hpp"
#include "jobs.hpp"

using namespace groupoidal;
using namespace groupoidal::cli;

namespace {

int emit(const Report& r, const std::string& json_path) {
  std::cout << r.text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return kInputError;
    }
    out << r.to_json().dump(2) << "\n";
  }
  return r.exit_code();
}

int list_demos(std::ostream& os) {
  os << "available demos:\n";
  for (const auto& d : demo_registry()) os << "  " << d.name << "  " << d.topic << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groupoidal: inverse semigroups, their groupoids and convolution algebras"};
  app.require_subcommand(1);

  Settings settings;
  std::string json_path;
  std::int64_t window = 0;
  std::size_t cap = 0, word_length = 0;
  auto add_flags = [&](CLI::App* sub) {
    sub->add_option("--json", json_path, "write the JSON report to this path");
    sub->add_option("--window", window, "window radius")->check(CLI::Range(1, 64));
    sub->add_option("--cap", cap, "element cap for closures")->check(CLI::PositiveNumber);
    sub->add_option("--word-length", word_length, "maximal word length")->check(CLI::Range(0, 8));
    sub->add_option("--seed", settings.seed, "seed for sampled audits");
  };

  std::string spec_path;
  auto* run = app.add_subcommand("run", "run a job file");
  run->add_option("spec", spec_path, "job file (JSON)")->required();
  add_flags(run);

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "run a built-in example");
  demo->add_option("name", demo_name, "demo name");
  add_flags(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (window) settings.window = window;
  if (cap) settings.cap = cap;
  if (word_length) settings.word_length = word_length;

  try {
    if (*run) {
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "error: cannot read " << spec_path << "\n";
        return kInputError;
      }
      json job;
      try {
        job = json::parse(in);
      } catch (const json::parse_error& e) {
        std::cerr << "error: " << spec_path << ": " << e.what() << "\n";
        return kInputError;
      }
      return emit(run_job(job, settings), json_path);
    }
    for (const auto& d : demo_registry())
      if (d.name == demo_name) {
        std::cout << d.topic << "\n";
        return emit(run_demo(d, settings), json_path);
      }
    if (!demo_name.empty()) std::cerr << "unknown demo '" << demo_name << "'\n";
    return list_demos(std::cout);
  } catch (const InputError& e) {
    std::cerr << "input error at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const GrowthError& e) {
    std::cerr << "input error: " << e.what() << " (raise --cap or GROUPOIDAL_MAX_ELEMENTS)\n";
    return kInputError;
  } catch (const UndecidedError& e) {
    std::cout << "[UNDECIDED] " << e.what() << "\n";
    return kUndecided;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAuditFailure;
  }
}
