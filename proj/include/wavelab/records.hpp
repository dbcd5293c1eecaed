#pragma once

#include "wavelab/regress.hpp"
#include "wavelab/sharpness.hpp"

#include <string>
#include <vector>

namespace wavelab {

struct SummaryRow {
  std::string case_id;
  int n = 2;
  double p = 0.0, q = 0.0, m = 0.0;
  SlopeFit fit;
  std::string verdict;  // PASS / FAIL / INFO
};

/// Append-only sink for experiment records and fitted summaries; written by
/// a single coordinator.
class RecordStore {
 public:
  void add(const CaseResult& result, std::string verdict);
  void add_records(const std::vector<ExperimentRecord>& records);
  void add_summary(SummaryRow row);
  bool empty() const { return records_.empty() && summaries_.empty(); }
  const std::vector<ExperimentRecord>& records() const { return records_; }
  const std::vector<SummaryRow>& summaries() const { return summaries_; }

  /// One JSON object per line, records then summaries.
  void write_jsonl(const std::string& path) const;
  /// Schema: case,n,p,q,m,j,value,ratio,slope,stderr,r2,verdict.
  /// Record rows leave the fit columns empty; summary rows leave j/value
  /// empty. Rows sorted by (case, p, q, j).
  void write_csv(const std::string& path) const;
  /// Two-column (j, log2 value) blocks per series.
  void write_plotdata(const std::string& path) const;

 private:
  std::vector<ExperimentRecord> records_;
  std::vector<SummaryRow> summaries_;
};

}  // namespace wavelab
