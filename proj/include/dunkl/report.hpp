#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunkl/types.hpp"

namespace dunkl {

/// Checked-in table of pinned empirical constants. One record per line:
///   estimate_id k_config grid_id constant timestamp
/// Lines starting with '#' are comments (kept when rewriting with --force).
class FrozenTable {
 public:
  struct Row {
    double constant;
    std::string timestamp;
  };

  static FrozenTable load(const std::string& path);  // missing file -> empty table
  void save(const std::string& path) const;

  std::optional<double> lookup(const std::string& estimate_id, const std::string& k_config,
                               const std::string& grid_id) const;

  /// Returns false if the row exists and force is not set.
  bool insert(const std::string& estimate_id, const std::string& k_config,
              const std::string& grid_id, double constant, const std::string& timestamp,
              bool force);

  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::string, Row> rows_;  // key: id|k|grid
  std::vector<std::string> history_;
};

/// Attach frozen constants to reports and set pass/fail status.
void apply_frozen(std::vector<EstimateReport>& reports, const FrozenTable& table);

std::string status_name(EstimateReport::Status s);

/// Top-level report object {version, config, reports:[...]}.
void write_report_json(const std::string& path, const std::string& config_echo,
                       const std::vector<EstimateReport>& reports);

/// Flat CSV summary, 17 significant digits.
void write_report_csv(const std::string& path, const std::vector<EstimateReport>& reports);

std::string format_double(double v);  // 17 significant digits

}  // namespace dunkl
