#include <doctest.h>

#include <cmath>

#include "gfswme/bathymetry.hpp"
#include "gfswme/errors.hpp"
#include "gfswme/mesh_state.hpp"
#include "gfswme/quadrature.hpp"

using namespace gfswme;

namespace {

StateField ramp(const Mesh& mesh, int m) {
  StateField s(mesh, m);
  for (int r = 0; r < s.rows(); ++r)
    for (int v = 0; v < m; ++v) s(r, v) = 1.0 + r + 0.1 * v;
  return s;
}

}  // namespace

TEST_CASE("mesh geometry") {
  const Mesh mesh(0.0, 25.0, 100);
  CHECK(mesh.dx() == doctest::Approx(0.25));
  CHECK(mesh.total() == 100 + 2 * kGhostCells);
  CHECK(mesh.center(mesh.first_interior()) == doctest::Approx(0.125));
  CHECK(mesh.center(mesh.last_interior()) == doctest::Approx(24.875));
  CHECK(mesh.left_edge(mesh.first_interior()) == doctest::Approx(0.0));
  CHECK(mesh.center(0) < 0.0);
  CHECK_THROWS_AS(Mesh(1.0, 0.0, 10), InvalidArgument);
  CHECK_THROWS_AS(Mesh(0.0, 1.0, 0), InvalidArgument);
}

TEST_CASE("state layout and admissibility") {
  const Mesh mesh(0.0, 1.0, 4);
  StateField s(mesh, 3);
  CHECK(s.rows() == mesh.total());
  CHECK(s.n_cells() == 4);
  CHECK_FALSE(s.admissible());
  for (int r = 0; r < s.rows(); ++r) s(r, 0) = 1.0;
  CHECK(s.admissible());
  s(mesh.first_interior(), 1) = NAN;
  CHECK_FALSE(s.admissible());
  s(mesh.first_interior(), 1) = 0.0;
  s.row(mesh.last_interior())[0] = -1.0;
  CHECK_FALSE(s.admissible());
  CHECK_THROWS_AS(StateField(mesh, 0), InvalidArgument);
}

TEST_CASE("periodic ghosts copy the opposite interior cells") {
  const Mesh mesh(0.0, 1.0, 8);
  StateField s = ramp(mesh, 2);
  BoundarySpec bc;
  bc.left.kind = bc.right.kind = BoundaryKind::Periodic;
  fill_ghosts(s, bc);
  const int g = mesh.n_ghost;
  for (int k = 0; k < g; ++k) {
    CHECK(s(k, 0) == s(k + 8, 0));
    CHECK(s(g + 8 + k, 1) == s(g + k, 1));
  }
}

TEST_CASE("inflow, inlet, outlet and transmissive sides") {
  const Mesh mesh(0.0, 1.0, 10);
  StateField s = ramp(mesh, 3);
  BoundarySpec bc;
  bc.left = {BoundaryKind::SupercriticalInflow, {2.0, 24.0, -0.5}};
  bc.right = {BoundaryKind::Transmissive, {}};
  fill_ghosts(s, bc);
  const int g = mesh.n_ghost, last = mesh.last_interior();
  for (int k = 0; k < g; ++k) {
    CHECK(s(k, 0) == 2.0);
    CHECK(s(k, 2) == -0.5);
    for (int v = 0; v < 3; ++v) CHECK(s(last + 1 + k, v) == s(last, v));
  }

  bc.left = {BoundaryKind::SubcriticalInlet, {4.42, 0.1}};
  bc.right = {BoundaryKind::SubcriticalOutlet, {2.0}};
  fill_ghosts(s, bc);
  CHECK(s(0, 0) == s(g, 0));
  CHECK(s(0, 1) == 4.42);
  CHECK(s(last + 1, 0) == 2.0);
  CHECK(s(last + 1, 2) == s(last, 2));
}

TEST_CASE("extrapolated ghost heights keep the free surface") {
  const Mesh mesh(0.0, 25.0, 20);
  const auto table = QuadratureTable::build(5, mesh.dx());
  const BathymetryField bathy(mesh, table, bump_bathymetry());
  StateField s(mesh, 2);
  for (int r = 0; r < s.rows(); ++r) s(r, 0) = 1.0 - bathy.average(r);
  BoundarySpec bc;
  fill_ghosts(s, bc, bathy);
  for (int r = 0; r < s.rows(); ++r) CHECK(s(r, 0) + bathy.average(r) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("boundary validation") {
  BoundarySpec bc;
  bc.left = {BoundaryKind::SupercriticalInflow, {1.0, 2.0}};
  CHECK_THROWS_AS(bc.validate(3), InvalidArgument);
  bc.left = {BoundaryKind::SupercriticalInflow, {0.0, 2.0, 0.0}};
  CHECK_THROWS_AS(bc.validate(3), InvalidArgument);
  bc.left = {BoundaryKind::Periodic, {}};
  CHECK_THROWS_AS(bc.validate(3), InvalidArgument);
  CHECK(prescribed_count(BoundaryKind::SubcriticalInlet, 4) == 3);
  CHECK(parse_boundary_kind(to_string(BoundaryKind::SubcriticalOutlet)) == BoundaryKind::SubcriticalOutlet);
  CHECK_THROWS_AS(parse_boundary_kind("wall"), InvalidArgument);
}

TEST_CASE("grid L2 norm") {
  const Mesh mesh(0.0, 2.0, 4);
  StateField a(mesh, 2), b(mesh, 2);
  for (int r = mesh.first_interior(); r <= mesh.last_interior(); ++r) a(r, 0) = 1.0;
  a(0, 1) = 100.0;  // ghosts are ignored
  const auto e = l2_error(a, b, mesh);
  CHECK(e[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(e[1] == 0.0);
  CHECK_THROWS_AS(l2_error(a, StateField(mesh, 3), mesh), InvalidArgument);
}

TEST_CASE("estimated order") {
  const auto p = estimated_order(1e-4, 1e-4 / 32.0, 2.0);
  REQUIRE(p);
  CHECK(*p == doctest::Approx(5.0));
  CHECK_FALSE(estimated_order(1e-15, 1e-16, 2.0));
  CHECK_THROWS_AS(estimated_order(1.0, 0.5, 1.0), InvalidArgument);
}

TEST_CASE("bathymetry averages use the Gauss rule") {
  const Mesh mesh(0.0, 25.0, 50);
  const auto table = QuadratureTable::build(5, mesh.dx());
  const BathymetryField bathy(mesh, table, bump_bathymetry());
  const int s = mesh.first_interior() + 24;
  double avg = 0.0;
  for (int q = 0; q < 3; ++q) avg += table.weights()[q] * bathy.nodes(s)[q];
  CHECK(bathy.average(s) == doctest::Approx(avg).epsilon(1e-15));
  CHECK(bathy(12.5) == 0.0);
  CHECK(bathy.max_interior() > 0.0);
  CHECK(bathymetry_by_name("flat").elevation(3.0) == 0.0);
  CHECK_THROWS_AS(bathymetry_by_name("step"), InvalidArgument);
}
