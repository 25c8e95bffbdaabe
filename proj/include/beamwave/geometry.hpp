#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace beamwave {

/// Geometry of the composite interval (0,L): the coupling interface sits at
/// x = l and the damping coefficient is supported on (alpha, beta) inside
/// the left segment. Valid geometries satisfy 0 < alpha < beta < l < L.
struct Geometry {
  double l = 2.0;      ///< interface position
  double L = 3.0;      ///< total length
  double alpha = 0.5;  ///< damping subinterval, left end
  double beta = 1.0;   ///< damping subinterval, right end

  /// Throws std::invalid_argument naming every violated ordering constraint.
  void validate() const {
    std::string msg;
    auto fail = [&msg](const std::string& s) {
      if (!msg.empty()) msg += "; ";
      msg += s;
    };
    if (!(alpha > 0.0)) fail("alpha must be > 0 (alpha=" + std::to_string(alpha) + ")");
    if (!(alpha < beta)) fail("alpha must be < beta (alpha=" + std::to_string(alpha) +
                              ", beta=" + std::to_string(beta) + ")");
    if (!(beta < l)) fail("beta must be < l (beta=" + std::to_string(beta) +
                          ", l=" + std::to_string(l) + ")");
    if (!(l < L)) fail("l must be < L (l=" + std::to_string(l) + ", L=" + std::to_string(L) + ")");
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(l) || !std::isfinite(L))
      fail("geometry values must be finite");
    if (!msg.empty()) throw std::invalid_argument("invalid geometry: " + msg);
  }
};

enum class SegmentTag { Left, Right };

/// One-dimensional mesh of (0,l) u (l,L) with nodes placed exactly at
/// alpha, beta and l. Elements are uniform per segment except the two
/// elements adjacent to a snapped node.
struct CompositeGrid {
  Geometry geom;
  std::vector<double> node_coords;     ///< strictly increasing, first 0, last L
  int interface_index = 0;             ///< node index of x = l
  std::pair<int, int> damping_range{0, 0};  ///< node indices of alpha and beta
  std::vector<SegmentTag> segment_tags;     ///< per element
  std::vector<bool> damped;                 ///< per element: closure inside [alpha,beta]

  int n_nodes() const { return static_cast<int>(node_coords.size()); }
  int n_elements() const { return n_nodes() - 1; }
  int n_left() const { return interface_index; }
  int n_right() const { return n_elements() - interface_index; }

  double element_length(int e) const { return node_coords[e + 1] - node_coords[e]; }

  double min_element_length() const {
    double h = node_coords[1] - node_coords[0];
    for (int e = 1; e < n_elements(); ++e) h = std::min(h, element_length(e));
    return h;
  }

  /// Extremal element length over one segment only.
  double min_element_length(SegmentTag tag) const { return extremal_length(tag, true); }
  double max_element_length(SegmentTag tag) const { return extremal_length(tag, false); }

 private:
  double extremal_length(SegmentTag tag, bool want_min) const {
    double h = -1.0;
    for (int e = 0; e < n_elements(); ++e) {
      if (segment_tags[e] != tag) continue;
      const double he = element_length(e);
      if (h < 0.0)
        h = he;
      else
        h = want_min ? std::min(h, he) : std::max(h, he);
    }
    if (h < 0.0) throw std::logic_error("grid has no elements with the requested tag");
    return h;
  }
};

/// Builds the composite mesh. Each segment is subdivided uniformly and the
/// interior nodes nearest alpha and beta are snapped onto them, so the
/// damping support boundary always coincides with element boundaries.
/// Requires n_left >= 4 and n_right >= 2; rejects counts too small to give
/// alpha and beta distinct interior nodes.
inline CompositeGrid build_grid(const Geometry& geom, int n_left, int n_right) {
  geom.validate();
  if (n_left < 4)
    throw std::invalid_argument("n_left must be >= 4 (got " + std::to_string(n_left) + ")");
  if (n_right < 2)
    throw std::invalid_argument("n_right must be >= 2 (got " + std::to_string(n_right) + ")");

  const double h_left = geom.l / n_left;
  int ia = static_cast<int>(std::lround(geom.alpha / h_left));
  int ib = static_cast<int>(std::lround(geom.beta / h_left));
  ia = std::max(1, std::min(ia, n_left - 1));
  ib = std::max(1, std::min(ib, n_left - 1));
  if (ia >= ib)
    throw std::invalid_argument(
        "n_left too small to place distinct nodes at alpha and beta; "
        "snapped indices collide (n_left=" + std::to_string(n_left) + ")");

  CompositeGrid grid;
  grid.geom = geom;
  grid.node_coords.reserve(n_left + n_right + 1);
  for (int i = 0; i <= n_left; ++i) {
    double x = (i == n_left) ? geom.l : i * h_left;
    if (i == ia) x = geom.alpha;
    if (i == ib) x = geom.beta;
    grid.node_coords.push_back(x);
  }
  const double h_right = (geom.L - geom.l) / n_right;
  for (int j = 1; j <= n_right; ++j)
    grid.node_coords.push_back(j == n_right ? geom.L : geom.l + j * h_right);

  grid.interface_index = n_left;
  grid.damping_range = {ia, ib};

  const int ne = grid.n_elements();
  grid.segment_tags.resize(ne);
  grid.damped.resize(ne);
  for (int e = 0; e < ne; ++e) {
    grid.segment_tags[e] = (e < n_left) ? SegmentTag::Left : SegmentTag::Right;
    grid.damped[e] = (e >= ia && e < ib);
  }

  for (int i = 0; i + 1 < grid.n_nodes(); ++i)
    if (!(grid.node_coords[i] < grid.node_coords[i + 1]))
      throw std::logic_error("grid nodes not strictly increasing after snapping");
  return grid;
}

}  // namespace beamwave
