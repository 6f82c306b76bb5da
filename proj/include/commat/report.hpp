// Result record for the identity checks, with text and JSON rendering.
#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace commat {

struct VerifyReport {
  std::string check;
  nlohmann::json config = nlohmann::json::object();
  std::string lhs;
  std::string rhs;
  bool equal = false;
  // Set when an infinite configuration was verified only on a finite window.
  bool windowed = false;
  unsigned check_depth = 0;
  std::vector<std::string> row_diag;
  double ms = 0.0;

  std::string to_text() const {
    std::string out = check + ": " + (equal ? "equal" : "NOT EQUAL") + "\n";
    out += "  config: " + config.dump() + "\n";
    out += "  lhs: " + lhs + "\n";
    out += "  rhs: " + rhs + "\n";
    if (windowed)
      out += "  windowed check, depth " + std::to_string(check_depth) + "\n";
    for (const auto& d : row_diag) out += "  " + d + "\n";
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["config"] = config;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["equal"] = equal;
    j["windowed"] = windowed;
    if (windowed) j["check_depth"] = check_depth;
    if (!row_diag.empty()) j["rows"] = row_diag;
    j["ms"] = ms;
    return j;
  }
};

namespace detail {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace detail

} // namespace commat
