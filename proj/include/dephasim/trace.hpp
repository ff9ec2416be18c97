#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace dephasim {

// uniform sampling grid over [0, t_max], times in ms
struct TimeGrid {
  double t_max = 0.0;
  int n_points = 0;

  TimeGrid() = default;
  TimeGrid(double t_max_, int n_points_) : t_max(t_max_), n_points(n_points_) {
    assert(t_max > 0.0 && n_points >= 2);
  }

  double dt() const { return t_max / (n_points - 1); }
  double time(int i) const { return i * dt(); }
  int size() const { return n_points; }
};

// sampled scalar time series
struct Trace {
  TimeGrid grid;
  std::vector<double> values;

  Trace() = default;
  Trace(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    assert(static_cast<int>(values.size()) == grid.n_points);
  }
};

}  // namespace dephasim
