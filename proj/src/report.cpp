#include "dunkl/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dunkl {

namespace {

std::string make_key(const std::string& id, const std::string& k, const std::string& g) {
  return id + "|" + k + "|" + g;
}

}  // namespace

FrozenTable FrozenTable::load(const std::string& path) {
  FrozenTable t;
  std::ifstream in(path);
  if (!in) return t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.history_.push_back(line);
      continue;
    }
    std::istringstream ss(line);
    std::string id, k, g, ts;
    double c;
    if (ss >> id >> k >> g >> c >> ts)
      t.rows_[make_key(id, k, g)] = Row{c, ts};
  }
  return t;
}

void FrozenTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("FrozenTable: cannot write " + path);
  for (const auto& h : history_) out << h << "\n";
  for (const auto& [key, row] : rows_) {
    auto p1 = key.find('|');
    auto p2 = key.find('|', p1 + 1);
    out << key.substr(0, p1) << " " << key.substr(p1 + 1, p2 - p1 - 1) << " "
        << key.substr(p2 + 1) << " " << format_double(row.constant) << " "
        << row.timestamp << "\n";
  }
}

std::optional<double> FrozenTable::lookup(const std::string& estimate_id,
                                          const std::string& k_config,
                                          const std::string& grid_id) const {
  auto it = rows_.find(make_key(estimate_id, k_config, grid_id));
  if (it == rows_.end()) return std::nullopt;
  return it->second.constant;
}

bool FrozenTable::insert(const std::string& estimate_id, const std::string& k_config,
                         const std::string& grid_id, double constant,
                         const std::string& timestamp, bool force) {
  std::string key = make_key(estimate_id, k_config, grid_id);
  auto it = rows_.find(key);
  if (it != rows_.end()) {
    if (!force) return false;
    history_.push_back("# replaced " + key + " " + format_double(it->second.constant) +
                       " " + it->second.timestamp);
  }
  rows_[key] = Row{constant, timestamp};
  return true;
}

void apply_frozen(std::vector<EstimateReport>& reports, const FrozenTable& table) {
  for (auto& r : reports) {
    r.frozen_constant = table.lookup(r.estimate_id, r.k_config, r.grid_id);
    r.judge();
  }
}

std::string status_name(EstimateReport::Status s) {
  switch (s) {
    case EstimateReport::Status::pass: return "pass";
    case EstimateReport::Status::fail: return "fail";
    default: return "pinning";
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_report_json(const std::string& path, const std::string& config_echo,
                       const std::vector<EstimateReport>& reports) {
  nlohmann::json j;
  j["version"] = "1.0";
  j["config"] = config_echo;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json e;
    e["estimate_id"] = r.estimate_id;
    e["k_config"] = r.k_config;
    e["grid_id"] = r.grid_id;
    e["empirical_constant"] = r.empirical_constant;
    e["worst_case"] = r.worst_case;
    if (r.frozen_constant)
      e["frozen_constant"] = *r.frozen_constant;
    else
      e["frozen_constant"] = nullptr;
    e["status"] = status_name(r.status);
    j["reports"].push_back(std::move(e));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_report_csv(const std::string& path, const std::vector<EstimateReport>& reports) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "estimate_id,k_config,grid_id,empirical_constant,frozen_constant,status\n";
  for (const auto& r : reports) {
    out << r.estimate_id << ",\"" << r.k_config << "\"," << r.grid_id << ","
        << format_double(r.empirical_constant) << ",";
    if (r.frozen_constant) out << format_double(*r.frozen_constant);
    out << "," << status_name(r.status) << "\n";
  }
}

}  // namespace dunkl
