#pragma once

#include <array>
#include <utility>
#include <vector>

namespace trussnet {

struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;
};

/// Normalized incircle determinant. Positive when p lies strictly inside
/// the circumcircle of the CCW triangle (a, b, c), negative outside,
/// near zero when cocircular. The determinant is scaled so the cocircular
/// tolerance (1e-10) is coordinate-magnitude independent.
double incircle_normalized(const std::array<double, 2>& a,
                           const std::array<double, 2>& b,
                           const std::array<double, 2>& c,
                           const std::array<double, 2>& p);

/// Delaunay triangulation via Bowyer-Watson insertion with a super
/// triangle. Cocircular point quadruples are resolved deterministically:
/// the diagonal with the lexicographically smaller (sorted) index pair is
/// kept. Throws DuplicatePoints / CollinearInput.
std::vector<Triangle> delaunay_triangles(
    const std::vector<std::array<double, 2>>& points);

/// Unique undirected edges (i < j) of the triangulation, sorted.
std::vector<std::pair<int, int>> delaunay(
    const std::vector<std::array<double, 2>>& points);

}  // namespace trussnet
