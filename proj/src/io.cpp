#include "mh/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "mh/error.hpp"
#include "mh/families.hpp"

namespace mh {

namespace {

std::string trim(const std::string& text) {
  auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

struct Cell {
  std::string text;
  std::size_t column;  // 1-based character position
};

std::vector<Cell> split_csv(const std::string& line) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    std::string raw = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto lead = raw.find_first_not_of(" \t");
    cells.push_back({trim(raw), start + 1 + (lead == std::string::npos ? 0 : lead)});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool blank(const std::string& line) { return trim(line).empty(); }

}  // namespace

QuasiMetricSpace read_distance_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    for (auto& cell : split_csv(line)) {
      if (cell.text.empty()) throw ParseError("empty label", line_no, cell.column);
      labels.push_back(cell.text);
    }
    break;
  }
  if (labels.empty()) throw ParseError("missing header row of labels", line_no == 0 ? 1 : line_no, 1);
  const std::size_t n = labels.size();

  std::vector<std::vector<ExtDist>> dist;
  while (dist.size() < n && std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto cells = split_csv(line);
    std::size_t offset = 0;
    // an optional leading row label is accepted when it names the row's point
    if (cells.size() == n + 1 && cells[0].text == labels[dist.size()]) offset = 1;
    if (cells.size() - offset != n) {
      throw ParseError("expected " + std::to_string(n) + " cells, found " + std::to_string(cells.size() - offset),
                       line_no, 1);
    }
    std::vector<ExtDist> row;
    for (std::size_t k = offset; k < cells.size(); ++k) {
      auto d = ExtDist::parse(cells[k].text);
      if (!d) throw ParseError("malformed distance '" + cells[k].text + "'", line_no, cells[k].column);
      row.push_back(*d);
    }
    dist.push_back(std::move(row));
  }
  if (dist.size() < n) {
    throw ParseError("expected " + std::to_string(n) + " rows of distances, found " + std::to_string(dist.size()),
                     line_no + 1, 1);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) throw ParseError("unexpected extra row", line_no, 1);
  }
  return QuasiMetricSpace::from_distance_matrix(std::move(dist), std::move(labels));
}

void write_distance_csv(std::ostream& out, const QuasiMetricSpace& space) {
  const auto& labels = space.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
  out << '\n';
  for (const auto& row : space.matrix()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j].to_string();
    out << '\n';
  }
}

QuasiMetricSpace read_edge_list(std::istream& in, bool directed) {
  std::vector<Edge> edges;
  std::size_t vertex_count = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t pos = 0;
    Point ends[2] = {0, 0};
    int found = 0;
    while (true) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' || line[pos] == ','))
        ++pos;
      if (pos == line.size()) break;
      if (found == 2) throw ParseError("more than two vertices on an edge line", line_no, pos + 1);
      Point value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
      if (ec != std::errc()) throw ParseError("expected a vertex index", line_no, pos + 1);
      std::size_t end = static_cast<std::size_t>(ptr - line.data());
      if (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r' && line[end] != ',') {
        throw ParseError("expected a vertex index", line_no, pos + 1);
      }
      ends[found++] = value;
      pos = end;
    }
    if (found == 0) continue;
    if (found == 1) throw ParseError("edge line needs two vertices", line_no, 1);
    edges.emplace_back(ends[0], ends[1]);
    vertex_count = std::max<std::size_t>(vertex_count, std::max(ends[0], ends[1]) + std::size_t{1});
  }
  return from_graph(edges, directed, vertex_count);
}

QuasiMetricSpace read_space_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, 0);
  }
  if (!doc.is_object() || !doc.contains("dist") || !doc["dist"].is_array()) {
    throw ParseError("JSON space needs a \"dist\" array");
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : doc["labels"]) {
      labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
  }
  std::vector<std::vector<ExtDist>> dist;
  std::size_t r = 0;
  for (const auto& row : doc["dist"]) {
    ++r;
    if (!row.is_array()) throw ParseError("dist row " + std::to_string(r) + " is not an array");
    std::vector<ExtDist> out;
    std::size_t c = 0;
    for (const auto& cell : row) {
      ++c;
      std::string text;
      if (cell.is_string()) {
        text = cell.get<std::string>();
      } else if (cell.is_number_integer()) {
        text = cell.dump();
      } else {
        throw ParseError("dist[" + std::to_string(r - 1) + "][" + std::to_string(c - 1) +
                         "] must be an integer or a \"p/q\" / \"inf\" string");
      }
      auto d = ExtDist::parse(text);
      if (!d) {
        throw ParseError("dist[" + std::to_string(r - 1) + "][" + std::to_string(c - 1) + "]: malformed distance '" +
                         text + "'");
      }
      out.push_back(*d);
    }
    dist.push_back(std::move(out));
  }
  return QuasiMetricSpace::from_distance_matrix(std::move(dist), std::move(labels));
}

void write_space_json(std::ostream& out, const QuasiMetricSpace& space) {
  nlohmann::json doc;
  doc["labels"] = space.labels();
  nlohmann::json dist = nlohmann::json::array();
  for (const auto& row : space.matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& d : row) r.push_back(d.to_string());
    dist.push_back(r);
  }
  doc["dist"] = dist;
  doc["directed"] = !space.is_symmetric();
  out << doc.dump(2) << '\n';
}

QuasiMetricSpace load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? read_space_json(in) : read_distance_csv(in);
}

QuasiMetricSpace load_edge_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_edge_list(in, directed);
}

}  // namespace mh
