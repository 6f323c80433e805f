#include "trussnet/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "trussnet/errors.hpp"

namespace trussnet {

namespace {

constexpr double cocircular_tol = 1e-10;

using Point = std::array<double, 2>;

double orient2d(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Triangle oriented_ccw(int a, int b, int c, const std::vector<Point>& pts) {
  if (orient2d(pts[a], pts[b], pts[c]) < 0.0) std::swap(b, c);
  return Triangle{a, b, c};
}

bool touches_super(const Triangle& t, int n_real) {
  return t.a >= n_real || t.b >= n_real || t.c >= n_real;
}

std::pair<int, int> sorted_pair(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Flip cocircular quads until every shared diagonal is the
// lexicographically smaller of the two candidates. Random point sets
// essentially never trigger this; regular grids and squares do.
void normalize_cocircular(std::vector<Triangle>& tris,
                          const std::vector<Point>& pts) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      edge_tris[sorted_pair(tris[t].a, tris[t].b)].push_back(t);
      edge_tris[sorted_pair(tris[t].b, tris[t].c)].push_back(t);
      edge_tris[sorted_pair(tris[t].c, tris[t].a)].push_back(t);
    }
    bool changed = false;
    for (const auto& [edge, owners] : edge_tris) {
      if (owners.size() != 2) continue;
      const Triangle& t1 = tris[owners[0]];
      const Triangle& t2 = tris[owners[1]];
      auto opposite = [&](const Triangle& t) {
        if (t.a != edge.first && t.a != edge.second) return t.a;
        if (t.b != edge.first && t.b != edge.second) return t.b;
        return t.c;
      };
      const int d1 = opposite(t1);
      const int d2 = opposite(t2);
      const Triangle ccw1 = oriented_ccw(edge.first, edge.second, d1, pts);
      if (std::abs(incircle_normalized(pts[ccw1.a], pts[ccw1.b], pts[ccw1.c],
                                       pts[d2])) > cocircular_tol) {
        continue;
      }
      const auto alt = sorted_pair(d1, d2);
      if (alt >= edge) continue;
      // Flip only across a strictly convex quad.
      const double s1 = orient2d(pts[d1], pts[d2], pts[edge.first]);
      const double s2 = orient2d(pts[d1], pts[d2], pts[edge.second]);
      if (!(s1 * s2 < 0.0)) continue;
      tris[owners[0]] = oriented_ccw(d1, d2, edge.first, pts);
      tris[owners[1]] = oriented_ccw(d1, d2, edge.second, pts);
      changed = true;
      break;  // edge map is stale; rebuild
    }
    if (!changed) return;
  }
}

}  // namespace

double incircle_normalized(const Point& a, const Point& b, const Point& c,
                           const Point& p) {
  const double adx = a[0] - p[0], ady = a[1] - p[1];
  const double bdx = b[0] - p[0], bdy = b[1] - p[1];
  const double cdx = c[0] - p[0], cdy = c[1] - p[1];
  const double al = adx * adx + ady * ady;
  const double bl = bdx * bdx + bdy * bdy;
  const double cl = cdx * cdx + cdy * cdy;
  const double det = adx * (bdy * cl - cdy * bl) - ady * (bdx * cl - cdx * bl) +
                     al * (bdx * cdy - bdy * cdx);
  double scale = std::max({std::abs(adx), std::abs(ady), std::abs(bdx),
                           std::abs(bdy), std::abs(cdx), std::abs(cdy)});
  if (scale == 0.0) return 0.0;
  const double s2 = scale * scale;
  return det / (s2 * s2);
}

std::vector<Triangle> delaunay_triangles(const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) {
    throw CollinearInput("need at least 3 points, got " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw DuplicatePoints("points " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
      }
    }
  }

  double lo_x = points[0][0], hi_x = points[0][0];
  double lo_y = points[0][1], hi_y = points[0][1];
  for (const auto& p : points) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});

  // Collinearity: every point must lie on the line through the first two
  // distinct points for the set to be degenerate.
  bool collinear = true;
  for (int k = 2; k < n && collinear; ++k) {
    if (std::abs(orient2d(points[0], points[1], points[k])) >
        1e-12 * span * span) {
      collinear = false;
    }
  }
  if (collinear) {
    throw CollinearInput("all points are collinear");
  }

  std::vector<Point> pts = points;
  const double cx = 0.5 * (lo_x + hi_x);
  const double cy = 0.5 * (lo_y + hi_y);
  const double m = 1e4 * span;
  pts.push_back({cx - 2.0 * m, cy - m});
  pts.push_back({cx + 2.0 * m, cy - m});
  pts.push_back({cx, cy + 2.0 * m});

  std::vector<Triangle> tris{oriented_ccw(n, n + 1, n + 2, pts)};

  for (int p = 0; p < n; ++p) {
    std::vector<Triangle> kept;
    std::map<std::pair<int, int>, int> cavity_edges;  // directed edge count
    auto add_directed = [&](int u, int v) {
      // A cavity boundary edge appears once; shared edges cancel against
      // their reversed twin.
      auto rev = cavity_edges.find({v, u});
      if (rev != cavity_edges.end()) {
        cavity_edges.erase(rev);
      } else {
        cavity_edges[{u, v}] = 1;
      }
    };
    for (const Triangle& t : tris) {
      if (incircle_normalized(pts[t.a], pts[t.b], pts[t.c], pts[p]) >
          cocircular_tol) {
        add_directed(t.a, t.b);
        add_directed(t.b, t.c);
        add_directed(t.c, t.a);
      } else {
        kept.push_back(t);
      }
    }
    for (const auto& [edge, count] : cavity_edges) {
      (void)count;
      kept.push_back(Triangle{edge.first, edge.second, p});
    }
    tris = std::move(kept);
  }

  std::vector<Triangle> out;
  for (const Triangle& t : tris) {
    if (!touches_super(t, n)) out.push_back(oriented_ccw(t.a, t.b, t.c, pts));
  }
  normalize_cocircular(out, pts);

  // Canonical storage: smallest index first, CCW order preserved.
  for (Triangle& t : out) {
    while (t.a > t.b || t.a > t.c) {
      const int tmp = t.a;
      t.a = t.b;
      t.b = t.c;
      t.c = tmp;
    }
  }
  std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  return out;
}

std::vector<std::pair<int, int>> delaunay(const std::vector<Point>& points) {
  std::vector<std::pair<int, int>> edges;
  for (const Triangle& t : delaunay_triangles(points)) {
    edges.push_back(sorted_pair(t.a, t.b));
    edges.push_back(sorted_pair(t.b, t.c));
    edges.push_back(sorted_pair(t.c, t.a));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace trussnet
