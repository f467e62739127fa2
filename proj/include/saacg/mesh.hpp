#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "saacg/common.hpp"

namespace saacg {

/// Regular triangulation of the unit square (0,1)^2.
///
/// Nodes are laid out row-major: node (i,j) has index j*(n+1)+i and sits at
/// (i*h, j*h) with h = 1/n. Each grid square is split along its lower-left
/// to upper-right diagonal into two counterclockwise triangles.
struct Mesh {
  int n = 0;                                  // cells per direction
  std::vector<Eigen::Vector2d> nodes;         // (n+1)^2 node coordinates
  std::vector<std::array<int, 3>> cells;      // 2 n^2 node-index triples, CCW
  std::vector<char> boundary_mask;            // per-node: 1 on the boundary
  double cell_area = 0.0;                     // h^2 / 2, uniform

  // Derived interior-node indexing for Dirichlet elimination.
  std::vector<int> interior_index;            // node -> reduced index or -1
  std::vector<int> interior_nodes;            // reduced index -> node

  int node_count() const { return static_cast<int>(nodes.size()); }
  int cell_count() const { return static_cast<int>(cells.size()); }
  int interior_count() const { return static_cast<int>(interior_nodes.size()); }
  double h() const { return 1.0 / n; }

  Eigen::Vector2d centroid(int cell) const {
    const auto& c = cells[cell];
    return (nodes[c[0]] + nodes[c[1]] + nodes[c[2]]) / 3.0;
  }
};

/// Piecewise linear state with zero boundary trace; one value per node.
struct StateField {
  Eigen::VectorXd values;  // full node vector, boundary entries are 0
};

/// Piecewise constant control; one value per cell.
struct ControlField {
  Eigen::VectorXd values;
};

inline Mesh build_mesh(int n) {
  require(n >= 1, "build_mesh: n must be >= 1");
  Mesh m;
  m.n = n;
  const int np = n + 1;
  const double h = 1.0 / n;
  m.cell_area = 0.5 * h * h;
  m.nodes.reserve(static_cast<std::size_t>(np) * np);
  m.boundary_mask.resize(static_cast<std::size_t>(np) * np);
  for (int j = 0; j < np; ++j) {
    for (int i = 0; i < np; ++i) {
      m.nodes.emplace_back(i * h, j * h);
      m.boundary_mask[static_cast<std::size_t>(j) * np + i] =
          (i == 0 || j == 0 || i == n || j == n) ? 1 : 0;
    }
  }
  m.cells.reserve(static_cast<std::size_t>(2) * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int v00 = j * np + i;
      const int v10 = j * np + i + 1;
      const int v01 = (j + 1) * np + i;
      const int v11 = (j + 1) * np + i + 1;
      // diagonal from v00 to v11, both triangles counterclockwise
      m.cells.push_back({v00, v10, v11});
      m.cells.push_back({v00, v11, v01});
    }
  }
  m.interior_index.assign(m.nodes.size(), -1);
  for (int k = 0; k < m.node_count(); ++k) {
    if (!m.boundary_mask[k]) {
      m.interior_index[k] = static_cast<int>(m.interior_nodes.size());
      m.interior_nodes.push_back(k);
    }
  }
  return m;
}

/// Signed area of a triangle; positive for counterclockwise orientation.
inline double signed_area(const Mesh& m, int cell) {
  const auto& c = m.cells[cell];
  const Eigen::Vector2d a = m.nodes[c[1]] - m.nodes[c[0]];
  const Eigen::Vector2d b = m.nodes[c[2]] - m.nodes[c[0]];
  return 0.5 * (a.x() * b.y() - a.y() * b.x());
}

}  // namespace saacg
