#pragma once

#include <string>
#include <vector>

namespace oat {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckRecord {
  std::string id;
  std::string anchor;  // construction the check traces back to
  CheckStatus status = CheckStatus::Pass;
  double residual = 0.0;
  std::string message;
};

// Accumulates per-check records; overall pass iff no record failed.
class Report {
 public:
  void add(CheckRecord rec);
  void check(const std::string& id, const std::string& anchor, bool ok,
             double residual = 0.0, const std::string& message = "");
  // Passes when residual <= bound.
  void residual_check(const std::string& id, const std::string& anchor,
                      double residual, double bound,
                      const std::string& message = "");
  void skip(const std::string& id, const std::string& anchor,
            const std::string& message);
  void merge(const Report& other, const std::string& prefix = "");

  bool passed() const;
  double max_residual() const;
  const std::vector<CheckRecord>& records() const { return records_; }
  std::vector<CheckRecord> sorted_records() const;
  std::string summary() const;

 private:
  std::vector<CheckRecord> records_;
};

std::string to_string(CheckStatus s);

}  // namespace oat
