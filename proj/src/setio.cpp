#include "locc/setio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace locc {

using nlohmann::json;

namespace {

std::pair<long long, long long> parse_factor_term(const std::string& term, std::size_t line_no) {
  // expects "X^s Z^t" with optional surrounding whitespace
  long long s = 0, t = 0;
  char cx = 0, cz = 0, hat1 = 0, hat2 = 0;
  std::istringstream is(term);
  if (!(is >> cx >> hat1 >> s >> cz >> hat2 >> t) || cx != 'X' || cz != 'Z' ||
      hat1 != '^' || hat2 != '^')
    throw std::invalid_argument("set parse error at line " + std::to_string(line_no) +
                                ": expected 'X^s Z^t', got '" + term + "'");
  return {s, t};
}

}  // namespace

MesSet parse_set_text(const std::string& text, const WeylStructure& st) {
  MesSet set;
  set.structure = st;
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<std::pair<long long, long long>> exps;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t bar = line.find('|', start);
      const std::string term = line.substr(start, bar == std::string::npos
                                                      ? std::string::npos
                                                      : bar - start);
      exps.push_back(parse_factor_term(term, line_no));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (exps.size() != st.factors.size())
      throw std::invalid_argument("set parse error at line " + std::to_string(line_no) +
                                  ": wrong number of factors");
    set.labels.push_back(make_label(st, exps));
  }
  return set;
}

MesSet parse_set_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  MesSet set;
  if (j.contains("name")) set.name = j.at("name").get<std::string>();
  if (j.contains("factors")) {
    set.structure.factors = j.at("factors").get<std::vector<unsigned>>();
    for (const auto& member : j.at("members")) {
      std::vector<std::pair<long long, long long>> exps;
      for (const auto& pair : member)
        exps.emplace_back(pair.at(0).get<long long>(), pair.at(1).get<long long>());
      set.labels.push_back(make_label(set.structure, exps));
    }
    return set;
  }
  if (j.contains("dim")) {
    const unsigned dim = j.at("dim").get<unsigned>();
    set.structure = qudit_structure(dim);
    for (const auto& member : j.at("members")) {
      Matrix m = parse_matrix_json(member.dump());
      if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("set json: member dimension mismatch");
      if (!is_unitary(m, 1e-10))
        throw std::invalid_argument("set json: member matrix is not unitary");
      set.matrices.push_back(std::move(m));
    }
    return set;
  }
  throw std::invalid_argument("set json: expected 'factors' or 'dim' key");
}

std::string set_to_json(const MesSet& set) {
  json j;
  if (!set.name.empty()) j["name"] = set.name;
  if (set.label_backed()) {
    j["factors"] = set.structure.factors;
    json members = json::array();
    for (const auto& l : set.labels) {
      json m = json::array();
      for (const auto& [s, t] : l.exps) m.push_back({s, t});
      members.push_back(m);
    }
    j["members"] = members;
  } else {
    j["dim"] = set.structure.total_dim();
    json members = json::array();
    for (const auto& m : set.matrices) members.push_back(json::parse(matrix_to_json(m)));
    j["members"] = members;
  }
  return j.dump(2);
}

Matrix parse_matrix_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix json: entry count mismatch");
  Matrix m(rows, cols);
  Eigen::Index idx = 0;
  for (const auto& e : entries) {
    m(idx / cols, idx % cols) =
        std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
    ++idx;
  }
  return m;
}

std::string matrix_to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  j["entries"] = entries;
  return j.dump();
}

MesSet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_set_json(buf.str());
}

}  // namespace locc
