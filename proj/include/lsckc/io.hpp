#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsckc/driver.hpp"
#include "lsckc/instance.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

/// One row per point, comma or whitespace separated. A first row that does
/// not parse as numbers is taken as a header.
Dataset load_points_csv(const std::string& path, Metric metric);
Dataset parse_points_csv(const std::string& text, Metric metric);

/// Lines of `CL i1 i2 ...` or `ML i1 i2 ...`; `#` starts a comment. Ids are
/// checked against `n` and reported with their line number.
RawConstraints load_constraints(const std::string& path, std::size_t n);
RawConstraints parse_constraints(const std::string& text, std::size_t n);

/// CSV points plus an optional constraint file; normalized and validated.
Instance load_instance(const std::string& points_path, const std::string& constraints_path, int k,
                       Metric metric);

/// JSON bundle {points, cl, ml, k, metric, planted_opt?, ...}; normalized and validated.
Instance load_instance_json(const std::string& path);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& instance);
void save_instance_json(const Instance& instance, const std::string& path);

struct InstanceDigest {
  std::size_t n = 0;
  int k = 0;
  std::size_t dim = 0;
  std::string metric;
  std::size_t num_cl = 0;
  std::size_t num_ml = 0;
  bool disjoint_cl = true;

  bool operator==(const InstanceDigest&) const = default;
};

/// Solver outcome as emitted to disk. Numbers are rounded to 12 significant
/// digits; absent values (no optimum known, no timing) stay empty.
struct Report {
  InstanceDigest instance;
  std::string solver;
  std::optional<double> radius;
  std::optional<double> nearest_center_radius;
  double probed_eta = 0.0;
  std::size_t probe_count = 0;
  std::size_t swaps_applied = 0;
  std::optional<double> wall_time_ms;
  std::string guarantee;
  std::optional<double> opt;
  std::string opt_provenance;
  std::optional<double> ratio;
  std::vector<PointId> centers;
  std::optional<std::vector<PointId>> assignment;
  std::size_t violations = 0;
  std::vector<std::string> errors;

  bool operator==(const Report&) const = default;
};

InstanceDigest digest(const Instance& instance);

/// `optimum` overrides the planted optimum (e.g. an exact oracle value).
Report make_report(const Instance& instance, const Solution& solution, const std::string& solver,
                   std::optional<double> wall_time_ms = std::nullopt, bool emit_assignment = false,
                   std::optional<double> optimum = std::nullopt,
                   const std::string& optimum_provenance = "");

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

enum class ReportFormat { json, csv_row };

/// csv_row column order (also written as a `#` comment on the first line
/// of a new file).
std::string csv_header();
std::string csv_row(const Report& report);
std::string format_number(double x);

/// json overwrites `path`; csv_row appends one row, creating the header
/// comment first when the file is new or empty.
void write_report(const Report& report, const std::string& path, ReportFormat format);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// nlohmann dump with round12 applied to every floating-point value.
std::string dump_json(const nlohmann::json& j);

}  // namespace lsckc
