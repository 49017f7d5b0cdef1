#pragma once
// Axis-aligned box domains with uniform Cartesian cells (1D/2D): grids,
// cell-averaged fields, boundary face enumeration and discrete norms.
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nifv {

// Rejected input (bad arguments, violated preconditions).
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Internal fault (a state the solver must never produce).
inline void fault_unless(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

using Vec2 = std::array<double, 2>;
using Int2 = std::array<int, 2>;

/// Uniform Cartesian grid on an axis-aligned box. For dim == 1 the second
/// axis is a phantom axis with n[1] == 1 and dx[1] == 1, so cell volumes
/// and face areas follow the same formulas in 1D and 2D.
struct Grid {
  int dim = 1;
  Vec2 lo{0.0, 0.0};
  Vec2 hi{1.0, 1.0};
  Int2 n{1, 1};
  Vec2 dx{1.0, 1.0};

  int cells() const { return n[0] * n[1]; }
  double cell_volume() const { return dx[0] * dx[1]; }
  double face_area(int axis) const { return cell_volume() / dx[axis]; }
  double min_dx() const { return dim == 2 ? std::min(dx[0], dx[1]) : dx[0]; }

  // Row-major by axis order, so results are reproducible across runs.
  int index(int i, int j = 0) const { return i + n[0] * j; }
  Int2 coords(int idx) const { return {idx % n[0], idx / n[0]}; }
  Vec2 center(int idx) const {
    Int2 c = coords(idx);
    return {lo[0] + (c[0] + 0.5) * dx[0], lo[1] + (c[1] + 0.5) * dx[1]};
  }

  bool operator==(const Grid&) const = default;
};

Grid build_grid(double lo, double hi, int n);
Grid build_grid(Vec2 lo, Vec2 hi, Int2 n);

/// Cell-averaged values, one contiguous block per component.
struct CellField {
  Grid grid;
  int components = 1;
  std::vector<double> v;

  CellField() = default;
  CellField(const Grid& g, int comps, double fill = 0.0)
      : grid(g), components(comps),
        v(static_cast<size_t>(g.cells()) * comps, fill) {
    require(comps >= 1, "CellField: components must be >= 1");
  }

  double& at(int cell, int comp = 0) {
    return v[static_cast<size_t>(comp) * grid.cells() + cell];
  }
  double at(int cell, int comp = 0) const {
    return v[static_cast<size_t>(comp) * grid.cells() + cell];
  }
};

/// Sample a function of the cell center into a field.
CellField sample_field(const Grid& g, int comps,
                       const std::function<double(const Vec2&, int)>& fn);

// Throws std::runtime_error if any value is non-finite.
void check_finite(const CellField& f, const std::string& what);

double l1_norm(const CellField& f);
double linf_norm(const CellField& f);

/// One boundary face of the box: the adjacent interior cell, the axis and
/// side it sits on, the outward unit normal, its area and center, and its
/// slot in the per-axis face arrays (see FaceFluxField).
struct BoundaryFace {
  int axis = 0;
  int side = 0;  // 0 = low end of the axis, 1 = high end
  int cell = 0;
  int face_index = 0;
  Vec2 normal{0.0, 0.0};
  double area = 1.0;
  Vec2 center{0.0, 0.0};
};

struct BoundaryFaceSet {
  Grid grid;
  std::vector<BoundaryFace> faces;
};

/// Enumerates all boundary faces in a fixed order: axis ascending, low side
/// before high side, transverse cells row-major.
BoundaryFaceSet boundary_faces(const Grid& g);

/// Per-face scalar values for every face of the grid (interior and boundary),
/// one array per axis, oriented along +axis. Axis-0 faces are indexed
/// i + (n0+1)*j with i in [0, n0]; axis-1 faces i + n0*j with j in [0, n1].
struct FaceFluxField {
  Grid grid;
  std::array<std::vector<double>, 2> g;

  FaceFluxField() = default;
  explicit FaceFluxField(const Grid& gr) : grid(gr) {
    g[0].assign(static_cast<size_t>(gr.n[0] + 1) * gr.n[1], 0.0);
    if (gr.dim == 2) g[1].assign(static_cast<size_t>(gr.n[0]) * (gr.n[1] + 1), 0.0);
  }

  int face_index(int axis, int i, int j) const {
    return axis == 0 ? i + (grid.n[0] + 1) * j : i + grid.n[0] * j;
  }
};

}  // namespace nifv
