#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace infl {

enum class Verdict { pass, fail, refused };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::refused: return "refused";
  }
  return "?";
}

/// Outcome of one verification; failures are data, not exceptions.
struct VerificationReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::pass;
  std::string computed;
  std::string expected;
  std::optional<std::string> counterexample;
  std::string assumption;
  double millis = 0;

  bool ok() const { return verdict != Verdict::fail; }

  /// Records a failed sub-check; the first one becomes the counterexample.
  void fail(const std::string& what) {
    verdict = Verdict::fail;
    if (!counterexample) counterexample = what;
    ++failures;
  }
  void refuse(const std::string& why) {
    if (verdict == Verdict::pass) verdict = Verdict::refused;
    if (!counterexample) counterexample = why;
  }
  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }

  int failures = 0;
  int checked = 0;
};

/// Times a report-producing callable and stores the elapsed milliseconds.
template <class F>
VerificationReport timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = f();
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace infl
