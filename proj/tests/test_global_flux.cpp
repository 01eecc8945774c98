#include <doctest.h>

#include <cmath>

#include "gfswme/bathymetry.hpp"
#include "gfswme/global_flux.hpp"
#include "gfswme/reconstruction.hpp"
#include "gfswme/steady_reference.hpp"

using namespace gfswme;

namespace {

InterfaceTrace trace(ModelId id, double h, double u, double a1, double a2, double b) {
  PrimitiveState w;
  w.h = h;
  w.u = u;
  w.alpha = {a1, a2};
  return {to_conserved(id, w), h + b, b};
}

PhysicalParams gravity(double g) {
  PhysicalParams p;
  p.g = g;
  return p;
}

}  // namespace

TEST_CASE("path integral uses the mean of B at the endpoints") {
  const auto l = trace(ModelId::SWME2, 1.0, 0.5, 0.2, 0.1, 0.0);
  const auto r = trace(ModelId::SWME2, 1.2, 0.4, 0.1, -0.1, 0.0);
  const Mat bl = noncons_matrix(ModelId::SWME2, to_primitive(ModelId::SWME2, l.U));
  const Mat br = noncons_matrix(ModelId::SWME2, to_primitive(ModelId::SWME2, r.U));
  const Vec expected = 0.5 * (bl + br) * (r.U - l.U);
  const Vec got = noncons_path_integral(ModelId::SWME2, l, r);
  CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("continuous traces carry no jump") {
  for (ModelId id : {ModelId::SWE, ModelId::SWME1, ModelId::SWME2, ModelId::HSWME2, ModelId::SWLME2}) {
    const auto t = trace(id, 1.3, 0.7, 0.2, -0.1, 0.05);
    CHECK(interface_jump(id, t, t, gravity(9.81)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("a bottom step under a flat surface balances the pressure jump") {
  const double g = 9.81, d = 0.01;
  const auto l = trace(ModelId::SWE, 1.0, 0.0, 0.0, 0.0, 0.0);
  const auto r = trace(ModelId::SWE, 1.0 - d, 0.0, 0.0, 0.0, d);
  const Vec j = interface_jump(ModelId::SWE, l, r, gravity(g));
  const Vec df = flux(ModelId::SWE, to_primitive(ModelId::SWE, r.U), gravity(g)) -
                 flux(ModelId::SWE, to_primitive(ModelId::SWE, l.U), gravity(g));
  CHECK(j(0) == 0.0);
  CHECK(j(1) + df(1) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("trace slots") {
  const double slots[5] = {1.0, 2.0, 3.0, 1.5, 0.5};
  const auto t = make_trace(3, slots);
  CHECK(t.U(2) == 3.0);
  CHECK(t.eta == 1.5);
  CHECK(t.b == 0.5);
}

TEST_CASE("global flux is constant at rest over a bump") {
  const Mesh mesh(0.0, 25.0, 40);
  const auto table = QuadratureTable::build(5, mesh.dx());
  const BathymetryField bathy(mesh, table, bump_bathymetry());
  const StateField s = lake_at_rest(mesh, bathy, 1.0, ModelId::SWME1);
  const WenoConfig cfg;
  const auto recon = reconstruct_field(s, bathy, cfg, table);
  const GlobalFluxAssembler assembler(ModelId::SWME1, gravity(1.0), cfg, table);
  GlobalFluxLayer layer;
  assembler.assemble(recon, layer);
  const double ref = layer.G_face(layer.first_face_row(), 0)[1];
  for (int row = layer.first_face_row(); row <= layer.last_face_row(); ++row) {
    for (int side = 0; side < 2; ++side) {
      CHECK(layer.G_face(row, side)[0] == 0.0);
      CHECK(layer.G_face(row, side)[1] == doctest::Approx(ref).epsilon(1e-14));
    }
  }
}

TEST_CASE("serial and parallel assembly agree bitwise") {
  const Mesh mesh(0.0, 25.0, 64);
  const auto table = QuadratureTable::build(5, mesh.dx());
  const BathymetryField bathy(mesh, table, bump_bathymetry());
  StateField s(mesh, 4);
  for (int r = 0; r < s.rows(); ++r) {
    const double x = mesh.center(r);
    s(r, 0) = 1.0 + 0.1 * std::sin(x);
    s(r, 1) = 0.3 + 0.05 * std::cos(x);
    s(r, 2) = 0.02 * std::sin(2.0 * x);
    s(r, 3) = 0.01;
  }
  PhysicalParams p = gravity(9.81);
  p.friction_enabled = true;
  p.nu = 0.05;
  const WenoConfig cfg;
  const auto rs = reconstruct_field(s, bathy, cfg, table, Execution::Serial);
  const auto rp = reconstruct_field(s, bathy, cfg, table, Execution::Parallel);
  const GlobalFluxAssembler assembler(ModelId::SWME2, p, cfg, table);
  GlobalFluxLayer ls, lp;
  assembler.assemble(rs, ls, Execution::Serial);
  assembler.assemble(rp, lp, Execution::Parallel);
  for (int row = ls.first_face_row(); row <= ls.last_face_row(); ++row)
    for (int v = 0; v < 4; ++v) {
      CHECK(ls.G_face(row, 0)[v] == lp.G_face(row, 0)[v]);
      CHECK(ls.G_face(row, 1)[v] == lp.G_face(row, 1)[v]);
    }
}

TEST_CASE("R telescopes through increments and jumps") {
  const Mesh mesh(0.0, 10.0, 32);
  const auto table = QuadratureTable::build(3, mesh.dx());
  const BathymetryField bathy(mesh, table, bump_bathymetry(5.0));
  StateField s(mesh, 3);
  for (int r = 0; r < s.rows(); ++r) {
    s(r, 0) = 2.0 + 0.2 * std::cos(mesh.center(r));
    s(r, 1) = 1.0;
    s(r, 2) = 0.1 * std::sin(mesh.center(r));
  }
  const WenoConfig cfg{3, 1e-6, WeightMode::Nonlinear};
  const auto recon = reconstruct_field(s, bathy, cfg, table);
  const GlobalFluxAssembler assembler(ModelId::SWME1, gravity(9.81), cfg, table);
  GlobalFluxLayer layer;
  assembler.accumulate_R(recon, layer);
  for (int v = 0; v < 3; ++v) CHECK(layer.R_left(layer.first_row())[v] == 0.0);
  for (int row = layer.first_row(); row < layer.last_row(); ++row)
    for (int v = 0; v < 3; ++v)
      CHECK(layer.R_left(row + 1)[v] ==
            doctest::Approx(layer.R_left(row)[v] + layer.increment(row)[v] + layer.jump(row + 1)[v]).epsilon(1e-14));
}
