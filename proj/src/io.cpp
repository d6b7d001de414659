#include "lsckc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lsckc/errors.hpp"
#include "lsckc/synthgen.hpp"

namespace lsckc {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_id(std::string_view s) {
  std::size_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

json number_or_null(const std::optional<double>& v) {
  return v ? json(round12(*v)) : json(nullptr);
}

std::optional<double> optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_array() || j.is_object()) {
    for (auto& v : j) round_numbers(v);
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string dump_json(const json& j) {
  json copy = j;
  round_numbers(copy);
  return copy.dump(2) + "\n";
}

Dataset parse_points_csv(const std::string& text, Metric metric) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    std::vector<double> row;
    bool numeric = true;
    for (auto f : fields) {
      auto v = parse_double(f);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw ParseError("non-numeric coordinate", line_no);
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("expected " + std::to_string(rows.front().size()) + " coordinates, got " +
                           std::to_string(row.size()),
                       line_no);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no points", 0);
  return Dataset(std::move(rows), metric);
}

Dataset load_points_csv(const std::string& path, Metric metric) {
  return parse_points_csv(read_text_file(path), metric);
}

RawConstraints parse_constraints(const std::string& text, std::size_t n) {
  RawConstraints raw;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    const auto fields = split_fields(body);
    if (fields.empty()) continue;
    std::string kind(fields.front());
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::toupper(c); });
    if (kind != "CL" && kind != "ML") throw ParseError("unknown constraint kind '" + std::string(fields.front()) + "'", line_no);
    std::vector<PointId> ids;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto id = parse_id(fields[i]);
      if (!id) throw ParseError("invalid point id '" + std::string(fields[i]) + "'", line_no);
      if (*id >= n) throw ParseError("id out of range: " + std::to_string(*id) + " (n=" + std::to_string(n) + ")", line_no);
      ids.push_back(*id);
    }
    (kind == "CL" ? raw.cl : raw.ml).push_back(std::move(ids));
  }
  return raw;
}

RawConstraints load_constraints(const std::string& path, std::size_t n) {
  return parse_constraints(read_text_file(path), n);
}

Instance load_instance(const std::string& points_path, const std::string& constraints_path, int k,
                       Metric metric) {
  Dataset ds = load_points_csv(points_path, metric);
  RawConstraints raw;
  if (!constraints_path.empty()) raw = load_constraints(constraints_path, ds.size());
  Instance inst = make_instance(std::move(ds), raw, k);
  require_valid(inst);
  return inst;
}

Instance instance_from_json(const json& j) {
  try {
    std::vector<std::vector<double>> rows;
    for (const auto& p : j.at("points")) {
      if (p.is_number())
        rows.push_back({p.get<double>()});
      else
        rows.push_back(p.get<std::vector<double>>());
    }
    Metric metric = Metric::euclidean;
    if (j.contains("metric")) {
      auto m = parse_metric(j.at("metric").get<std::string>());
      if (!m) throw ParseError("unknown metric '" + j.at("metric").get<std::string>() + "'", 0);
      metric = *m;
    }
    RawConstraints raw;
    if (j.contains("cl")) raw.cl = j.at("cl").get<std::vector<std::vector<PointId>>>();
    if (j.contains("ml")) raw.ml = j.at("ml").get<std::vector<std::vector<PointId>>>();
    Dataset ds(std::move(rows), metric);
    // Range-check before normalization so errors name the offending id.
    for (const auto* sets : {&raw.cl, &raw.ml})
      for (const auto& s : *sets)
        for (PointId id : s)
          if (id >= ds.size()) throw ValidationError({"id out of range: " + std::to_string(id)});
    Instance inst = make_instance(std::move(ds), raw, j.at("k").get<int>());
    if (auto opt = optional_number(j, "planted_opt")) {
      PlantedOptimum po;
      po.value = *opt;
      po.provenance = j.value("planted_opt_provenance", std::string("exact"));
      po.r_plant = j.value("r_plant", *opt);
      po.lower_bound = optional_number(j, "planted_lower_bound");
      inst.planted = po;
    }
    require_valid(inst);
    return inst;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what(), 0);
  }
}

Instance load_instance_json(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return instance_from_json(j);
}

json instance_to_json(const Instance& instance) {
  json j;
  j["metric"] = std::string(to_string(instance.data.metric()));
  j["k"] = instance.k;
  json points = json::array();
  for (const auto& p : instance.data.points()) points.push_back(p.coords);
  j["points"] = std::move(points);
  j["cl"] = instance.constraints.cl;
  j["ml"] = instance.constraints.ml;
  if (instance.planted) {
    j["planted_opt"] = instance.planted->value;
    j["planted_opt_provenance"] = instance.planted->provenance;
    j["r_plant"] = instance.planted->r_plant;
    if (instance.planted->lower_bound) j["planted_lower_bound"] = *instance.planted->lower_bound;
  }
  return j;
}

void save_instance_json(const Instance& instance, const std::string& path) {
  write_text_file(path, dump_json(instance_to_json(instance)));
}

InstanceDigest digest(const Instance& instance) {
  return InstanceDigest{instance.data.size(),
                        instance.k,
                        instance.data.dim(),
                        std::string(to_string(instance.data.metric())),
                        instance.constraints.cl.size(),
                        instance.constraints.ml.size(),
                        instance.constraints.disjoint_cl};
}

Report make_report(const Instance& instance, const Solution& solution, const std::string& solver,
                   std::optional<double> wall_time_ms, bool emit_assignment,
                   std::optional<double> optimum, const std::string& optimum_provenance) {
  Report r;
  r.instance = digest(instance);
  r.solver = solver;
  r.probed_eta = round12(solution.probed_eta);
  r.probe_count = solution.probe_count;
  r.swaps_applied = solution.swaps_applied;
  if (wall_time_ms) r.wall_time_ms = round12(*wall_time_ms);
  r.guarantee = std::string(to_string(solution.guarantee));
  r.centers = solution.centers;
  r.errors = solution.errors;

  if (solution.guarantee != Guarantee::infeasible && solution.assignment.size() == instance.data.size()) {
    Assignment a;
    a.center_of = solution.assignment;
    r.radius = round12(clustering_cost(a, instance.data));
    r.nearest_center_radius = round12(nearest_center_radius(solution.centers, instance.data));
    r.violations = verify(a, instance.constraints).size();
    if (emit_assignment) r.assignment = solution.assignment;
  }

  if (optimum) {
    r.opt = round12(*optimum);
    r.opt_provenance = optimum_provenance.empty() ? "exact" : optimum_provenance;
  } else if (instance.planted) {
    r.opt = round12(instance.planted->value);
    r.opt_provenance = instance.planted->provenance;
  }
  if (r.opt && r.radius) {
    if (*r.opt > 0.0)
      r.ratio = round12(*r.radius / *r.opt);
    else if (*r.radius == 0.0)
      r.ratio = 1.0;
  }
  return r;
}

json report_to_json(const Report& r) {
  json j;
  j["instance"] = {{"n", r.instance.n},           {"k", r.instance.k},
                   {"dim", r.instance.dim},       {"metric", r.instance.metric},
                   {"num_cl", r.instance.num_cl}, {"num_ml", r.instance.num_ml},
                   {"disjoint_cl", r.instance.disjoint_cl}};
  j["solver"] = r.solver;
  j["radius"] = number_or_null(r.radius);
  j["nearest_center_radius"] = number_or_null(r.nearest_center_radius);
  j["probed_eta"] = round12(r.probed_eta);
  j["probe_count"] = r.probe_count;
  j["swaps_applied"] = r.swaps_applied;
  j["wall_time_ms"] = number_or_null(r.wall_time_ms);
  j["guarantee"] = r.guarantee;
  j["opt"] = number_or_null(r.opt);
  j["opt_provenance"] = r.opt ? json(r.opt_provenance) : json(nullptr);
  j["ratio"] = number_or_null(r.ratio);
  j["centers"] = r.centers;
  if (r.assignment) j["assignment"] = *r.assignment;
  j["violations"] = r.violations;
  j["errors"] = r.errors;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    const auto& in = j.at("instance");
    r.instance = InstanceDigest{in.at("n").get<std::size_t>(),   in.at("k").get<int>(),
                                in.at("dim").get<std::size_t>(), in.at("metric").get<std::string>(),
                                in.at("num_cl").get<std::size_t>(), in.at("num_ml").get<std::size_t>(),
                                in.at("disjoint_cl").get<bool>()};
    r.solver = j.at("solver").get<std::string>();
    r.radius = optional_number(j, "radius");
    r.nearest_center_radius = optional_number(j, "nearest_center_radius");
    r.probed_eta = j.at("probed_eta").get<double>();
    r.probe_count = j.at("probe_count").get<std::size_t>();
    r.swaps_applied = j.at("swaps_applied").get<std::size_t>();
    r.wall_time_ms = optional_number(j, "wall_time_ms");
    r.guarantee = j.at("guarantee").get<std::string>();
    r.opt = optional_number(j, "opt");
    if (r.opt) r.opt_provenance = j.at("opt_provenance").get<std::string>();
    r.ratio = optional_number(j, "ratio");
    r.centers = j.at("centers").get<std::vector<PointId>>();
    if (j.contains("assignment")) r.assignment = j.at("assignment").get<std::vector<PointId>>();
    r.violations = j.at("violations").get<std::size_t>();
    r.errors = j.at("errors").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what(), 0);
  }
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_header() {
  return "solver,n,k,dim,metric,num_cl,num_ml,disjoint_cl,radius,nearest_center_radius,"
         "probed_eta,probe_count,swaps_applied,wall_time_ms,guarantee,opt,ratio,num_centers,"
         "violations";
}

std::string csv_row(const Report& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  std::ostringstream os;
  os << r.solver << ',' << r.instance.n << ',' << r.instance.k << ',' << r.instance.dim << ','
     << r.instance.metric << ',' << r.instance.num_cl << ',' << r.instance.num_ml << ','
     << (r.instance.disjoint_cl ? "true" : "false") << ',' << opt(r.radius) << ','
     << opt(r.nearest_center_radius) << ',' << format_number(r.probed_eta) << ',' << r.probe_count
     << ',' << r.swaps_applied << ',' << opt(r.wall_time_ms) << ',' << r.guarantee << ','
     << opt(r.opt) << ',' << opt(r.ratio) << ',' << r.centers.size() << ',' << r.violations;
  return os.str();
}

void write_report(const Report& report, const std::string& path, ReportFormat format) {
  if (format == ReportFormat::json) {
    write_text_file(path, dump_json(report_to_json(report)));
    return;
  }
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw InputError("cannot write " + path);
  if (fresh) out << "# " << csv_header() << '\n';
  out << csv_row(report) << '\n';
}

}  // namespace lsckc
