#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace g2kit {

enum class CaseStatus { Pass, Fail, Error };

/// Outcome of one identity check.
struct CaseResult {
  std::string suite;
  std::string id;
  CaseStatus status = CaseStatus::Pass;
  std::string tuple;    // 1-based index tuple, e.g. "(1,2,3)"
  std::string lhs;      // canonical scalar text
  std::string rhs;
  std::string what;     // which sub-check, when a case has several
  std::string message;  // error text
  std::vector<std::string> notes;

  bool ok() const noexcept { return status == CaseStatus::Pass; }
};

/// Per-case records of one or more suites plus wall time.
struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double wall_seconds = 0;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.ok();
    return n;
  }
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }

  const CaseResult* find(const std::string& id) const {
    for (const auto& c : cases)
      if (c.id == id) return &c;
    return nullptr;
  }

  /// Line-oriented text; wall time is left out so output is reproducible.
  void write(std::ostream& os) const {
    std::string current;
    for (const auto& c : cases) {
      if (c.suite != current) {
        current = c.suite;
        os << "SUITE " << current << "\n";
      }
      os << "CASE " << c.id << (c.ok() ? " PASS" : " FAIL");
      if (!c.tuple.empty()) os << " tuple=" << c.tuple;
      if (!c.lhs.empty()) os << " lhs=" << c.lhs;
      if (!c.rhs.empty()) os << " rhs=" << c.rhs;
      if (!c.what.empty()) os << " what=" << c.what;
      if (c.status == CaseStatus::Error) os << " error=\"" << c.message << "\"";
      os << "\n";
      for (const auto& n : c.notes) os << "NOTE " << c.id << " " << n << "\n";
    }
    os << "SUMMARY suite=" << suite << " cases=" << cases.size() << " passed=" << passed() << " failed=" << failed()
       << "\n";
  }

  std::string str() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }
};

}  // namespace g2kit
