#include "urigid/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace urigid {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t pos = text.find('\n');
    lines.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j[key];
}

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

Configuration config_from_rows(const std::vector<std::vector<double>>& rows, int dim,
                               std::vector<NodeId> labels = {}) {
  if (dim != 2 && dim != 3) throw ParseError("points must be 2D or 3D");
  Eigen::MatrixXd coords(static_cast<Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != dim) throw ParseError("inconsistent point dimension on row " + std::to_string(i));
    for (int a = 0; a < dim; ++a) {
      if (!std::isfinite(rows[i][static_cast<std::size_t>(a)])) throw ParseError("non-finite coordinate on row " + std::to_string(i));
      coords(static_cast<Index>(i), a) = rows[i][static_cast<std::size_t>(a)];
    }
  }
  return Configuration(std::move(coords), std::move(labels));
}

Json points_json(const Configuration& c) {
  Json rows = Json::array();
  for (Index i = 0; i < c.size(); ++i) {
    Json row = Json::array();
    for (int a = 0; a < c.dim(); ++a) row.push_back(c.coords()(i, a));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json pair_json(Index a, Index b) { return Json::array({a, b}); }

Json edges_json(const EdgeList& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(pair_json(e.i, e.j));
  return out;
}

EdgeList edges_from_json(const Json& j) {
  EdgeList edges;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("edges must be index pairs");
    edges.push_back(make_edge(pair[0].get<Index>(), pair[1].get<Index>()));
  }
  return edges;
}

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

Eigen::VectorXd vector_from_json(const Json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
}

Json fan_json(const FanDecomposition& fan) {
  Json j;
  j["kind"] = std::string(to_string(fan.kind));
  j["centers"] = fan.centers;
  j["central_edge"] = fan.central_edge ? pair_json(fan.central_edge->i, fan.central_edge->j) : Json(nullptr);
  j["neighbors"] = pair_json(fan.neighbors.first, fan.neighbors.second);
  j["peripheral_order"] = fan.peripheral_order;
  j["folds"] = edges_json(fan.folds);
  j["closing_edge"] = pair_json(fan.closing_edge.i, fan.closing_edge.j);
  return j;
}

FanDecomposition fan_from_json(const Json& j) {
  FanDecomposition fan;
  fan.kind = fan_kind_from_string(get<std::string>(j, "kind"));
  fan.centers = get<std::vector<Index>>(j, "centers");
  if (j.contains("central_edge") && !j["central_edge"].is_null()) {
    const auto ce = j["central_edge"].get<std::vector<Index>>();
    if (ce.size() != 2) throw ParseError("central_edge must be a pair");
    fan.central_edge = make_edge(ce[0], ce[1]);
  }
  const auto nb = get<std::vector<Index>>(j, "neighbors");
  if (nb.size() != 2) throw ParseError("neighbors must be a pair");
  fan.neighbors = {nb[0], nb[1]};
  fan.peripheral_order = get<std::vector<std::vector<Index>>>(j, "peripheral_order");
  fan.folds = edges_from_json(field(j, "folds"));
  const auto ce = get<std::vector<Index>>(j, "closing_edge");
  if (ce.size() != 2) throw ParseError("closing_edge must be a pair");
  fan.closing_edge = make_edge(ce[0], ce[1]);
  return fan;
}

Json report_json(const RigidityReport& r) {
  Json j;
  j["rank_R"] = r.rank_R;
  j["m"] = r.m;
  j["s"] = r.s;
  j["maxwell_ok"] = r.maxwell_ok;
  j["omega_spectrum"] = vector_json(r.omega_spectrum);
  j["omega_rank"] = r.omega_rank;
  j["psd"] = r.psd;
  j["affine_ok"] = r.affine_ok;
  j["superstable"] = r.superstable;
  j["classification"] = std::string(to_string(r.classification));
  j["stress"] = vector_json(r.stress);
  return j;
}

RigidityReport report_from_json(const Json& j) {
  RigidityReport r;
  r.rank_R = get<Index>(j, "rank_R");
  r.m = get<Index>(j, "m");
  r.s = get<Index>(j, "s");
  r.maxwell_ok = get<bool>(j, "maxwell_ok");
  r.omega_spectrum = vector_from_json(field(j, "omega_spectrum"));
  r.omega_rank = get<Index>(j, "omega_rank");
  r.psd = get<bool>(j, "psd");
  r.affine_ok = get<bool>(j, "affine_ok");
  r.superstable = get<bool>(j, "superstable");
  r.classification = rigidity_class_from_string(get<std::string>(j, "classification"));
  if (j.contains("stress")) r.stress = vector_from_json(j["stress"]);
  return r;
}

std::string_view op_name(EventKind k) {
  switch (k) {
    case EventKind::add: return "add";
    case EventKind::remove: return "remove";
    case EventKind::move: return "move";
  }
  return "add";
}

Json event_json(const Event& e) {
  Json j;
  j["op"] = std::string(op_name(e.kind));
  j["id"] = e.id;
  if (e.kind != EventKind::remove) j["point"] = vector_json(e.point);
  return j;
}

Event event_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("event must be a JSON object");
  Event e;
  const auto op = get<std::string>(j, "op");
  if (op == "add") e.kind = EventKind::add;
  else if (op == "remove") e.kind = EventKind::remove;
  else if (op == "move") e.kind = EventKind::move;
  else throw ParseError("unknown event op: " + op);
  e.id = get<NodeId>(j, "id");
  if (e.kind != EventKind::remove) {
    e.point = vector_from_json(field(j, "point"));
    if (!e.point.allFinite()) throw ParseError("event point is not finite");
  }
  return e;
}

Json id_edges_json(const std::vector<IdEdge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back(Json::array({a, b}));
  return out;
}

std::vector<IdEdge> id_edges_from_json(const Json& j) {
  std::vector<IdEdge> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("log edges must be id pairs");
    out.emplace_back(pair[0].get<NodeId>(), pair[1].get<NodeId>());
  }
  return out;
}

}  // namespace

Configuration parse_points_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  bool first = true;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    bool numeric = true;
    while (true) {
      const std::size_t comma = line.find(',');
      const auto value = parse_double(line.substr(0, comma));
      if (!value) {
        numeric = false;
        break;
      }
      row.push_back(*value);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw ParseError("non-numeric CSV row " + std::to_string(rows.size() + 1));
    }
    first = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no points in CSV input");
  return config_from_rows(rows, static_cast<int>(rows.front().size()));
}

Configuration parse_points_json(std::string_view text) {
  const Json j = parse_json(text, "point file");
  const auto rows = get<std::vector<std::vector<double>>>(j, "points");
  if (rows.empty()) throw ParseError("no points in JSON input");
  const int dim = j.contains("dim") ? j["dim"].get<int>() : static_cast<int>(rows.front().size());
  return config_from_rows(rows, dim);
}

Configuration parse_points(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_points_json(body);
  return parse_points_csv(body);
}

std::string format_framework_file(const FrameworkFile& file) {
  const Framework& fw = file.framework;
  EdgeList edges = fw.edges;
  canonicalize(edges);
  Json j;
  j["dim"] = fw.dim();
  j["points"] = points_json(fw.config);
  if (!fw.config.labels().empty()) j["labels"] = fw.config.labels();
  j["edges"] = edges_json(edges);
  if (file.fan) j["fan"] = fan_json(*file.fan);
  if (file.report) j["report"] = report_json(*file.report);
  return j.dump(2) + "\n";
}

FrameworkFile parse_framework_file(std::string_view text) {
  const Json j = parse_json(text, "framework file");
  if (!j.is_object()) throw ParseError("framework file must be a JSON object");
  const auto rows = get<std::vector<std::vector<double>>>(j, "points");
  const int dim = j.contains("dim") ? j["dim"].get<int>() : (rows.empty() ? 2 : static_cast<int>(rows.front().size()));
  std::vector<NodeId> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<NodeId>>();
  if (!labels.empty() && labels.size() != rows.size()) throw ParseError("label count does not match point count");

  FrameworkFile file;
  file.framework.config = config_from_rows(rows, dim, std::move(labels));
  try {
    file.framework.edges = edges_from_json(field(j, "edges"));
    check_simple_graph(file.framework);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed edge list: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("invalid edge list: ") + e.what());
  }
  canonicalize(file.framework.edges);
  try {
    if (j.contains("fan") && !j["fan"].is_null()) file.fan = fan_from_json(j["fan"]);
    if (j.contains("report") && !j["report"].is_null()) file.report = report_from_json(j["report"]);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed framework file: ") + e.what());
  }
  return file;
}

std::string format_report(const RigidityReport& r, std::size_t spectrum_head) {
  Json j;
  j["rank_R"] = r.rank_R;
  j["m"] = r.m;
  j["s"] = r.s;
  j["maxwell_ok"] = r.maxwell_ok;
  j["omega_rank"] = r.omega_rank;
  j["psd"] = r.psd;
  j["affine_ok"] = r.affine_ok;
  j["superstable"] = r.superstable;
  j["classification"] = std::string(to_string(r.classification));
  Json head = Json::array();
  for (Index k = 0; k < r.omega_spectrum.size() && static_cast<std::size_t>(k) < spectrum_head; ++k)
    head.push_back(r.omega_spectrum(k));
  j["spectrum_head"] = std::move(head);
  return j.dump(2) + "\n";
}

Event parse_event(std::string_view json_line) {
  try {
    return event_from_json(parse_json(json_line, "event"));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed event: ") + e.what());
  }
}

std::string format_event(const Event& event) { return event_json(event).dump(); }

std::vector<Event> parse_events(std::string_view text) {
  std::vector<Event> events;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (!line.empty()) events.push_back(parse_event(line));
  }
  return events;
}

std::string format_log_entry(const LogEntry& entry) {
  Json j;
  j["epoch"] = entry.epoch;
  j["event"] = event_json(entry.event);
  j["added"] = id_edges_json(entry.delta.added);
  j["removed"] = id_edges_json(entry.delta.removed);
  return j.dump();
}

LogEntry parse_log_entry(std::string_view json_line) {
  const Json j = parse_json(json_line, "log entry");
  LogEntry entry;
  try {
    entry.epoch = get<std::uint64_t>(j, "epoch");
    entry.event = event_from_json(field(j, "event"));
    entry.delta.added = id_edges_from_json(field(j, "added"));
    entry.delta.removed = id_edges_from_json(field(j, "removed"));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed log entry: ") + e.what());
  }
  return entry;
}

std::vector<LogEntry> parse_log(std::string_view text) {
  std::vector<LogEntry> out;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (!line.empty()) out.push_back(parse_log_entry(line));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace urigid
