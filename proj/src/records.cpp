#include "wavelab/records.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

namespace wavelab {

namespace {
using nlohmann::json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace

void RecordStore::add(const CaseResult& result, std::string verdict) {
  add_records(result.records);
  if (result.records.empty()) return;
  const ExperimentRecord& first = result.records.front();
  SummaryRow row;
  row.case_id = first.case_id;
  row.n = first.n;
  row.p = first.p;
  row.q = first.q;
  row.m = first.m;
  row.fit = result.fit;
  row.verdict = std::move(verdict);
  add_summary(std::move(row));
}

void RecordStore::add_records(const std::vector<ExperimentRecord>& records) {
  records_.insert(records_.end(), records.begin(), records.end());
}

void RecordStore::add_summary(SummaryRow row) {
  summaries_.push_back(std::move(row));
}

void RecordStore::write_jsonl(const std::string& path) const {
  if (empty()) throw std::runtime_error("record store is empty");
  std::ofstream out = open_out(path);
  for (const auto& r : records_) {
    json o{{"type", "record"},     {"case", r.case_id},
           {"n", r.n},             {"p", num(r.p)},
           {"q", num(r.q)},        {"m", r.m},
           {"j", r.j},             {"value", r.value},
           {"norm_f", r.norm_f},   {"norm_g", r.norm_g},
           {"norm_out", r.norm_out}, {"seed", r.seed},
           {"grid_samples", r.grid_samples}, {"grid_box", r.grid_box}};
    out << o.dump() << '\n';
  }
  for (const auto& s : summaries_) {
    json o{{"type", "summary"},       {"case", s.case_id},
           {"n", s.n},                {"p", num(s.p)},
           {"q", num(s.q)},           {"m", s.m},
           {"slope", s.fit.slope},    {"intercept", s.fit.intercept},
           {"stderr", s.fit.stderr_slope}, {"r2", s.fit.r2},
           {"points", s.fit.points},  {"verdict", s.verdict}};
    out << o.dump() << '\n';
  }
}

void RecordStore::write_csv(const std::string& path) const {
  if (empty()) throw std::runtime_error("record store is empty");
  struct Row {
    std::string case_id;
    double p, q;
    int j;  // summary rows sort after records of the same series
    std::string text;
  };
  std::vector<Row> rows;
  for (const auto& r : records_) {
    std::string text = r.case_id + "," + std::to_string(r.n) + "," +
                       num(r.p) + "," + num(r.q) + "," + num(r.m) + "," +
                       std::to_string(r.j) + "," + num(r.norm_out) + "," +
                       num(r.value) + ",,,,";
    rows.push_back({r.case_id, r.p, r.q, r.j, std::move(text)});
  }
  for (const auto& s : summaries_) {
    std::string text = s.case_id + "," + std::to_string(s.n) + "," +
                       num(s.p) + "," + num(s.q) + "," + num(s.m) + ",,,," +
                       num(s.fit.slope) + "," + num(s.fit.stderr_slope) +
                       "," + num(s.fit.r2) + "," + s.verdict;
    rows.push_back({s.case_id, s.p, s.q, 1 << 20, std::move(text)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.case_id, a.p, a.q, a.j) <
           std::tie(b.case_id, b.p, b.q, b.j);
  });
  std::ofstream out = open_out(path);
  out << "case,n,p,q,m,j,value,ratio,slope,stderr,r2,verdict\n";
  for (const Row& row : rows) out << row.text << '\n';
}

void RecordStore::write_plotdata(const std::string& path) const {
  if (records_.empty()) throw std::runtime_error("record store is empty");
  std::map<std::string, std::vector<const ExperimentRecord*>> series;
  for (const auto& r : records_) {
    std::string key = r.case_id + " n=" + std::to_string(r.n) +
                      " p=" + num(r.p) + " q=" + num(r.q) + " m=" + num(r.m);
    series[key].push_back(&r);
  }
  std::ofstream out = open_out(path);
  out.precision(15);
  for (auto& [key, recs] : series) {
    std::sort(recs.begin(), recs.end(),
              [](const ExperimentRecord* a, const ExperimentRecord* b) {
                return a->j < b->j;
              });
    out << "# " << key << "\n";
    for (const ExperimentRecord* r : recs)
      out << r->j << ' ' << std::log2(r->value) << '\n';
    out << '\n';
  }
}

}  // namespace wavelab
