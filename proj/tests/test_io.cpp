#include "masaent/io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "masaent/matrix.hpp"

using namespace masaent;

TEST_CASE("format9 prints shortest nine-digit forms") {
  CHECK(format9(0.29491179756518615) == "0.294911798");
  CHECK(format9(std::log(4.0)) == "1.38629436");
  CHECK(format9(std::log(2.0)) == "0.693147181");
  CHECK(format9(1e-9) == "1e-09");
  CHECK(format9(0.5) == "0.5");
  CHECK(format9(-0.25) == "-0.25");
  CHECK(format9(1234567890.0) == "1.23456789e+09");
  CHECK(format9(0.0) == "0");
  CHECK(format9(-0.0) == "0");
}

TEST_CASE("matrix documents round-trip exactly") {
  const CMatrix m = random_unitary(3, std::uint64_t{5}).mat();
  const CMatrix back = parse_matrix(write_matrix(m));
  CHECK(back.rows() == 3);
  CHECK(max_abs(back - m) == 0.0);
}

TEST_CASE("parse_matrix accepts the documented layout") {
  const CMatrix m = parse_matrix(
      R"({"n": 2, "entries": [[1, 0], [0, -1], [0, 1], [1, 0]]})");
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(0, 1) == Complex(0, -1));
  CHECK(m(1, 0) == Complex(0, 1));
  CHECK(m(1, 1) == Complex(1, 0));
}

TEST_CASE("parse_matrix rejects malformed documents") {
  CHECK_THROWS_AS(parse_matrix("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 2})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"entries": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 0, "entries": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": -1, "entries": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1.5, "entries": [[1, 0]]})"), ParseError);
  // Three entries cannot fill a 2x2 matrix.
  CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "entries": [[1, 0], [0, 0], [0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "entries": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "entries": [7]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "entries": [["a", 0]]})"), ParseError);
}

TEST_CASE("matrix files") {
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.json"), ParseError);
  const std::string path = "test_io_matrix.json";
  const CMatrix m = fourier_matrix(3).mat();
  write_file(path, write_matrix(m));
  CHECK(max_abs(read_matrix_file(path) - m) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("real vectors round-trip") {
  RVector v(3);
  v << 0.7, 0.3, 0.0;
  const RVector back = parse_real_vector(write_real_vector(v));
  CHECK(back.size() == 3);
  CHECK((back - v).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(parse_real_vector("{}"), ParseError);
  CHECK_THROWS_AS(parse_real_vector("[]"), ParseError);
  CHECK_THROWS_AS(parse_real_vector(R"(["a"])"), ParseError);
}

TEST_CASE("write_report emits fixed key-value lines") {
  VariationalReport r;
  r.best_value = std::log(2.0);
  r.closed_form = std::log(2.0);
  r.gap = 0.0;
  r.iterations = 3;
  r.seed = 42;
  CHECK(write_report(r) ==
        "value 0.693147181\n"
        "closed_form 0.693147181\n"
        "gap 0\n"
        "iterations 3\n"
        "seed 42\n");
}
