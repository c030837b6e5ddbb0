#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace lieq {

struct ReportItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

enum class ReportStatus { pass, fail, partial };

inline std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::partial: return "partial";
  }
  return "?";
}

struct Report {
  std::string command;
  std::vector<ReportItem> items;
  std::int64_t timing_ms = 0;

  void add(std::string name, std::string expected, std::string actual, bool pass) {
    items.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }

  /// Convenience for checks whose expected/actual are equal-or-not strings.
  void check(std::string name, const std::string& expected, const std::string& actual) {
    bool ok = expected == actual;
    add(std::move(name), expected, actual, ok);
  }

  void append(const Report& other, const std::string& prefix = "") {
    for (const auto& it : other.items) {
      items.push_back({prefix + it.name, it.expected, it.actual, it.pass});
    }
  }

  std::size_t passed() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; }));
  }

  /// pass iff every item passes; partial when some but not all pass.
  ReportStatus status() const {
    std::size_t ok = passed();
    if (ok == items.size()) return ReportStatus::pass;
    return ok == 0 ? ReportStatus::fail : ReportStatus::partial;
  }

  bool ok() const { return status() == ReportStatus::pass; }

  std::string to_text() const {
    std::size_t w = 4;
    for (const auto& it : items) w = std::max(w, it.name.size());
    std::ostringstream os;
    os << command << ": " << lieq::to_string(status()) << " (" << passed() << "/"
       << items.size() << ", " << timing_ms << " ms)\n";
    for (const auto& it : items) {
      os << "  [" << (it.pass ? "PASS" : "FAIL") << "] " << it.name
         << std::string(w - it.name.size(), ' ') << "  expected=" << it.expected
         << "  actual=" << it.actual << "\n";
    }
    return os.str();
  }
};

/// Measures wall time into report.timing_ms on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    report_.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace lieq
