#include "pfkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pfk {

Matrix read_matrix_text(std::istream& in, const Ring& ring) {
  std::size_t n = 0;
  if (!(in >> n)) throw Error("matrix text: missing dimension line");
  Matrix m(ring, n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw Error("matrix text: missing entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      m.set(i, j, Scalar::parse(ring, tok));
    }
  }
  return m;
}

std::string matrix_to_text(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("text format holds square matrices only");
  std::ostringstream out;
  out << m.rows() << "\n";
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out << " ";
      std::string s = m.at(i, j).to_string();
      if (m.ring().kind() == RingKind::prime_field) s = std::to_string(m.at(i, j).as_residue());
      if (s.find(' ') != std::string::npos)
        throw Error("entry '" + s + "' cannot be written in the text format; use JSON");
      out << s;
    }
    out << "\n";
  }
  return out.str();
}

static Scalar parse_json_entry(const Ring& ring, const nlohmann::json& v) {
  if (v.is_string()) return Scalar::parse(ring, v.get<std::string>());
  if (v.is_number_integer()) return Scalar::integer(ring, v.get<long>());
  throw Error("matrix JSON: entries must be integers or strings");
}

Matrix read_matrix_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("ring"))
    throw Error("matrix JSON: need an object with \"n\" and \"ring\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  std::string ring_id = j.at("ring").get<std::string>();
  if (ring_id == "poly" && j.contains("vars")) {
    std::string id = "poly:";
    bool first = true;
    for (const auto& v : j.at("vars")) {
      if (!first) id += ',';
      id += v.get<std::string>();
      first = false;
    }
    ring_id = id;
  }
  const Ring ring = Ring::parse(ring_id);

  if (j.contains("entries")) {
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) throw Error("matrix JSON: \"entries\" must have n rows");
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n)
        throw Error("matrix JSON: row " + std::to_string(i + 1) + " must have n entries");
      for (std::size_t c = 0; c < n; ++c) m.set(i + 1, c + 1, parse_json_entry(ring, rows[i][c]));
    }
    return m;
  }
  if (j.contains("upper")) {
    const auto& up = j.at("upper");
    if (!up.is_array() || up.size() != n * (n - 1) / 2)
      throw Error("matrix JSON: \"upper\" needs " + std::to_string(n * (n - 1) / 2) + " entries");
    std::vector<Scalar> upper;
    upper.reserve(up.size());
    for (const auto& v : up) upper.push_back(parse_json_entry(ring, v));
    return skew_from_upper(ring, n, upper).matrix();
  }
  throw Error("matrix JSON: need \"entries\" or \"upper\"");
}

std::string matrix_to_json(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("JSON format holds square matrices only");
  nlohmann::ordered_json j;
  j["n"] = m.rows();
  j["ring"] = m.ring().to_string();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 1; c <= m.cols(); ++c) row.push_back(m.at(i, c).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

Matrix read_matrix_file(const std::string& path, const Ring& default_ring) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error("empty matrix file '" + path + "'");
  if (text[first] == '{') return read_matrix_json(text);
  std::istringstream ss(text);
  return read_matrix_text(ss, default_ring);
}

SkewMatrix read_skew_file(const std::string& path, const Ring& default_ring) {
  return SkewMatrix(read_matrix_file(path, default_ring));
}

std::string report_to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["pass"] = r.pass;
  j["dim"] = r.dim;
  j["ring"] = r.ring;
  j["seed"] = r.seed;
  j["lhs"] = r.lhs.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.lhs);
  j["rhs"] = r.rhs.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.rhs);
  j["witness"] = r.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.witness);
  return j.dump();
}

std::string report_to_human(const IdentityReport& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.identity + " dim=" + std::to_string(r.dim) +
                     " ring=" + r.ring + " seed=" + std::to_string(r.seed);
  if (!r.pass) {
    if (!r.lhs.empty()) line += " lhs=" + r.lhs + " rhs=" + r.rhs;
    if (!r.witness.empty()) line += " witness: " + r.witness;
  }
  return line;
}

} // namespace pfk
