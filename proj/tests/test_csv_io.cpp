#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gfswme/csv_io.hpp"
#include "gfswme/errors.hpp"
#include "gfswme/steady_reference.hpp"

using namespace gfswme;

TEST_CASE("%.17g numbers read back to the same double") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double v = U(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("write and read round trip with LF endings") {
  std::ostringstream os;
  write_csv(os, {"a", "b"}, {{1.0, 2.5}, {-3.0, 1e-300}});
  const std::string text = os.str();
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.substr(0, 4) == "a,b\n");
  std::istringstream is(text);
  const CsvTable t = read_csv(is);
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1][1] == 1e-300);
  CHECK(t.column("b") == 1);
  CHECK_THROWS_AS(t.column("c"), InvalidArgument);
  CHECK_THROWS_AS(write_csv(os, {"a"}, {{1.0, 2.0}}), InvalidArgument);
}

TEST_CASE("placeholders and malformed input") {
  std::istringstream ok("x,y,z\r\n1,--,\r\n");
  const CsvTable t = read_csv(ok);
  CHECK(std::isnan(t.rows[0][1]));
  CHECK(std::isnan(t.rows[0][2]));
  std::istringstream bad("x,y\n1,abc\n");
  CHECK_THROWS_AS(read_csv(bad), InvalidArgument);
  std::istringstream ragged("x,y\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), InvalidArgument);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), InvalidArgument);
}

TEST_CASE("solution columns") {
  CHECK(solution_columns(ModelId::SWME1) ==
        std::vector<std::string>{"x", "b", "h", "eta", "u_m", "alpha_1", "hu", "halpha_1"});
  CHECK(solution_columns(ModelId::SWME2).size() == 10);
}

TEST_CASE("solution files restore the state exactly") {
  const Mesh mesh(0.0, 25.0, 30);
  const auto table = QuadratureTable::build(5, mesh.dx());
  const BathymetryField bathy(mesh, table, bump_bathymetry());
  StateField s = lake_at_rest(mesh, bathy, 1.0, ModelId::SWLME2);
  for (int r = 0; r < s.rows(); ++r) {
    s(r, 1) = 0.3 + 1e-3 * r;
    s(r, 2) = 0.01 / (r + 1);
    s(r, 3) = -0.02 / (r + 3);
  }
  const auto dir = std::filesystem::temp_directory_path() / "gfswme_csv_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  const auto path = dir / "state.csv";
  write_solution_csv(path, s, ModelId::SWLME2, bathy);
  const CsvTable t = read_csv(path);
  CHECK(t.rows.size() == 30);
  const int eta = t.column("eta");
  for (const auto& row : t.rows) CHECK(row[eta] == doctest::Approx(1.0));

  const StateField back = state_from_solution(t, mesh, ModelId::SWLME2);
  for (int r = mesh.first_interior(); r <= mesh.last_interior(); ++r)
    for (int v = 0; v < 4; ++v) CHECK(back(r, v) == s(r, v));
  CHECK(back(0, 0) == 0.0);

  const Mesh m2 = mesh_from_solution(t);
  CHECK(m2.n_cells == 30);
  CHECK(m2.x_left == doctest::Approx(0.0).scale(1.0));
  CHECK(m2.x_right == doctest::Approx(25.0));
  CHECK_THROWS_AS(state_from_solution(t, Mesh(0.0, 25.0, 31), ModelId::SWLME2), InvalidArgument);
  std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("missing files throw") {
  CHECK_THROWS_AS(read_csv(std::filesystem::path("/nonexistent/gfswme.csv")), Error);
}
