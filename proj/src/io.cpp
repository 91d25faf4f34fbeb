#include "masaent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace masaent {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid document");
  return doc;
}

double number_at(const json& value, const char* where) {
  if (!value.is_number()) throw ParseError(std::string(where) + ": expected a number");
  return value.get<double>();
}

}  // namespace

std::string format9(double x) {
  if (x == 0.0) x = 0.0;  // fold -0 into 0 so reports stay byte-stable
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return buffer;
}

CMatrix parse_matrix(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw ParseError("matrix document needs fields 'n' and 'entries'");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("'n' must be a positive integer");
  }
  const int n = doc["n"].get<int>();
  const json& entries = doc["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ParseError("'entries' must hold exactly n*n [re, im] pairs");
  }
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const json& e = entries[static_cast<std::size_t>(i) * n + j];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("matrix entries must be [re, im] pairs");
      }
      m(i, j) = Complex(number_at(e[0], "entry"), number_at(e[1], "entry"));
    }
  }
  if (!m.allFinite()) throw ParseError("matrix entries must be finite");
  return m;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string write_matrix(const CMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  const json doc = {{"n", m.rows()}, {"entries", entries}};
  return doc.dump();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw ParseError("failed while writing: " + path);
}

RVector parse_real_vector(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.empty()) throw ParseError("expected a nonempty list of reals");
  RVector v(static_cast<Eigen::Index>(doc.size()));
  for (std::size_t k = 0; k < doc.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = number_at(doc[k], "list entry");
  }
  return v;
}

std::string write_real_vector(const RVector& v) {
  json list = json::array();
  for (int k = 0; k < v.size(); ++k) list.push_back(v(k));
  return list.dump();
}

std::string write_report(const VariationalReport& r) {
  std::ostringstream out;
  out << "value " << format9(r.best_value) << '\n';
  out << "closed_form " << format9(r.closed_form) << '\n';
  out << "gap " << format9(r.gap) << '\n';
  out << "iterations " << r.iterations << '\n';
  out << "seed " << r.seed << '\n';
  return out.str();
}

}  // namespace masaent
