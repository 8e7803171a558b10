#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace groupoidal::cli {

using nlohmann::json;

enum ExitCode : int { kPass = 0, kAuditFailure = 1, kUndecided = 2, kInputError = 3 };

// Malformed job file; path is a JSON pointer into the document.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what)
      : std::runtime_error(what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Settings {
  std::optional<std::int64_t> window;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> word_length;
  std::uint64_t seed = 1;
};

class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void check(const std::string& name, bool ok, json witness = nullptr);
  void info(const std::string& line) { lines_.push_back("  " + line); }
  void undecided(const std::string& what);
  void set(const std::string& key, json value) { data_[key] = std::move(value); }

  int exit_code() const;
  std::string text() const;
  json to_json() const;

 private:
  std::string title_;
  std::vector<std::string> lines_;
  json data_ = json::object();
  json checks_ = json::array();
  bool failed_ = false;
  bool undecided_ = false;
};

// Reads a job document {"kind": ..., "parameters": {...}, "window": ..., "cap": ...}.
Report run_job(const json& job, const Settings& flags);

struct Demo {
  std::string name;
  std::string topic;
  json job;        // empty when the demo is not a plain job
};

const std::vector<Demo>& demo_registry();
Report run_demo(const Demo& demo, const Settings& flags);

}  // namespace groupoidal::cli
