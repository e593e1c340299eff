#include "oat/report.hpp"

#include <algorithm>
#include <sstream>

namespace oat {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    default:
      return "skip";
  }
}

void Report::add(CheckRecord rec) { records_.push_back(std::move(rec)); }

void Report::check(const std::string& id, const std::string& anchor, bool ok,
                   double residual, const std::string& message) {
  records_.push_back({id, anchor, ok ? CheckStatus::Pass : CheckStatus::Fail,
                      residual, message});
}

void Report::residual_check(const std::string& id, const std::string& anchor,
                            double residual, double bound,
                            const std::string& message) {
  check(id, anchor, residual <= bound, residual, message);
}

void Report::skip(const std::string& id, const std::string& anchor,
                  const std::string& message) {
  records_.push_back({id, anchor, CheckStatus::Skip, 0.0, message});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto rec : other.records_) {
    rec.id = prefix + rec.id;
    records_.push_back(std::move(rec));
  }
}

bool Report::passed() const {
  return std::none_of(records_.begin(), records_.end(), [](const auto& r) {
    return r.status == CheckStatus::Fail;
  });
}

double Report::max_residual() const {
  double m = 0.0;
  for (const auto& r : records_) m = std::max(m, r.residual);
  return m;
}

std::vector<CheckRecord> Report::sorted_records() const {
  auto recs = records_;
  std::stable_sort(recs.begin(), recs.end(),
                   [](const auto& a, const auto& b) { return a.id < b.id; });
  return recs;
}

std::string Report::summary() const {
  std::ostringstream os;
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : records_) {
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Fail) ++fail;
    if (r.status == CheckStatus::Skip) ++skip;
  }
  os << (passed() ? "PASS" : "FAIL") << " (" << pass << " passed, " << fail
     << " failed, " << skip << " skipped)";
  return os.str();
}

}  // namespace oat
