#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eafjsp/objectives.hpp"

namespace eafjsp {

// Metric-side points are dimension-generic vectors so the same code serves
// the 4-objective pipeline and lower-dimensional checks.
using MetricPoint = std::vector<double>;
using MetricFront = std::vector<MetricPoint>;

inline bool metric_dominates(const MetricPoint& a, const MetricPoint& b) {
  bool strict = false;
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (a[d] > b[d]) return false;
    if (a[d] < b[d]) strict = true;
  }
  return strict;
}

inline MetricFront metric_nondominated(const MetricFront& pts) {
  MetricFront keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dom = false;
    for (std::size_t j = 0; j < pts.size() && !dom; ++j)
      if (j != i && metric_dominates(pts[j], pts[i])) dom = true;
    if (!dom) keep.push_back(pts[i]);
  }
  return keep;
}

// Shared affine bounds: best/worst per dimension across every front handed
// in. Dimensions without spread are dropped and reported inactive.
struct MetricBounds {
  std::vector<double> best, worst;
  std::vector<bool> active;

  static MetricBounds compute(const std::vector<const MetricFront*>& fronts) {
    MetricBounds b;
    bool seeded = false;
    for (const auto* f : fronts) {
      for (const auto& p : *f) {
        if (!seeded) {
          b.best = p;
          b.worst = p;
          seeded = true;
          continue;
        }
        for (std::size_t d = 0; d < p.size(); ++d) {
          b.best[d] = std::min(b.best[d], p[d]);
          b.worst[d] = std::max(b.worst[d], p[d]);
        }
      }
    }
    if (!seeded) throw std::invalid_argument("no points to normalize");
    b.active.resize(b.best.size());
    for (std::size_t d = 0; d < b.best.size(); ++d)
      b.active[d] = b.worst[d] - b.best[d] > 1e-12;
    return b;
  }

  MetricPoint normalize(const MetricPoint& p) const {
    MetricPoint out(p.size());
    for (std::size_t d = 0; d < p.size(); ++d)
      out[d] = active[d] ? (p[d] - best[d]) / (worst[d] - best[d]) : 0.0;
    return out;
  }

  MetricFront normalize_front(const MetricFront& f) const {
    MetricFront out;
    out.reserve(f.size());
    for (const auto& p : f) out.push_back(normalize(p));
    return out;
  }
};

// Exact dominated hypervolume under minimization: the Lebesgue measure of
// the region weakly dominated by the points and bounded above by ref.
// Points beyond ref are clipped out. Recursive slab sweep over the last
// dimension with a closed-form 2-D base case.
inline double hypervolume_exact(const MetricFront& points, const MetricPoint& ref) {
  MetricFront pts;
  for (const auto& p : points) {
    bool inside = true;
    for (std::size_t d = 0; d < ref.size(); ++d)
      if (p[d] > ref[d]) {
        inside = false;
        break;
      }
    if (inside) pts.push_back(p);
  }
  pts = metric_nondominated(pts);
  // Duplicates add nothing; drop them for the sweep.
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return 0.0;
  const std::size_t dim = ref.size();

  if (dim == 1) {
    double best = pts[0][0];
    for (const auto& p : pts) best = std::min(best, p[0]);
    return ref[0] - best;
  }
  if (dim == 2) {
    // pts sorted ascending by x; nondominated => y strictly descending.
    double area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double x_next = i + 1 < pts.size() ? pts[i + 1][0] : ref[0];
      area += (x_next - pts[i][0]) * (ref[1] - pts[i][1]);
    }
    return area;
  }

  // Slab sweep over the last coordinate.
  std::vector<double> cuts;
  for (const auto& p : pts) cuts.push_back(p[dim - 1]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  MetricPoint sub_ref(ref.begin(), ref.end() - 1);
  double volume = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double z = cuts[i];
    const double z_next = i + 1 < cuts.size() ? cuts[i + 1] : ref[dim - 1];
    if (z_next <= z) continue;
    MetricFront slab;
    for (const auto& p : pts)
      if (p[dim - 1] <= z) slab.emplace_back(p.begin(), p.end() - 1);
    volume += hypervolume_exact(slab, sub_ref) * (z_next - z);
  }
  return volume;
}

// Dominance-clamped distance: zero whenever the front point weakly
// dominates the reference point.
inline double d_plus(const MetricPoint& front_pt, const MetricPoint& ref_pt) {
  double sum = 0.0;
  for (std::size_t d = 0; d < front_pt.size(); ++d) {
    const double diff = std::max(front_pt[d] - ref_pt[d], 0.0);
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

// Mean over the non-dominated reference points of the clamped distance to
// their nearest front point. Absent when either side is empty.
inline std::optional<double> igd_plus(const MetricFront& reference,
                                      const MetricFront& front) {
  const MetricFront refs = metric_nondominated(reference);
  if (refs.empty() || front.empty()) return std::nullopt;
  double total = 0.0;
  for (const auto& r : refs) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : front) best = std::min(best, d_plus(f, r));
    total += best;
  }
  return total / static_cast<double>(refs.size());
}

// Mean over the non-dominated front points of the clamped distance to their
// nearest reference point.
inline std::optional<double> gd_plus(const MetricFront& front,
                                     const MetricFront& reference) {
  const MetricFront pts = metric_nondominated(front);
  if (pts.empty() || reference.empty()) return std::nullopt;
  double total = 0.0;
  for (const auto& f : pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : reference) best = std::min(best, d_plus(f, r));
    total += best;
  }
  return total / static_cast<double>(pts.size());
}

// Schott spacing: standard deviation of nearest-neighbor Manhattan
// distances. Absent for fronts of fewer than two points.
inline std::optional<double> spacing(const MetricFront& front) {
  const std::size_t n = front.size();
  if (n < 2) return std::nullopt;
  std::vector<double> nn(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = 0.0;
      for (std::size_t k = 0; k < front[i].size(); ++k)
        d += std::abs(front[i][k] - front[j][k]);
      nn[i] = std::min(nn[i], d);
    }
  double mean = 0.0;
  for (double d : nn) mean += d;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double d : nn) ss += (mean - d) * (mean - d);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

struct HvTracePoint {
  int generation = 0;
  double hypervolume = 0.0;
  std::optional<double> growth;  // (hv - hv0) / hv0; absent when hv0 == 0
};

// Per-generation hypervolume of front snapshots under shared bounds, with
// growth relative to generation 0.
inline std::vector<HvTracePoint> hv_trace(
    const std::vector<std::pair<int, MetricFront>>& fronts, const MetricBounds& bounds) {
  std::vector<HvTracePoint> trace;
  trace.reserve(fronts.size());
  const MetricPoint ref(bounds.best.size(), 1.0);
  double hv0 = 0.0;
  for (std::size_t i = 0; i < fronts.size(); ++i) {
    HvTracePoint pt;
    pt.generation = fronts[i].first;
    pt.hypervolume = hypervolume_exact(bounds.normalize_front(fronts[i].second), ref);
    if (i == 0) hv0 = pt.hypervolume;
    if (hv0 > 0.0) pt.growth = (pt.hypervolume - hv0) / hv0;
    trace.push_back(std::move(pt));
  }
  return trace;
}

inline MetricPoint to_metric_point(const ObjectiveVector& o) {
  const auto a = o.to_array();
  return MetricPoint(a.begin(), a.end());
}

inline MetricFront to_metric_front(const std::vector<ObjectiveVector>& objs) {
  MetricFront f;
  f.reserve(objs.size());
  for (const auto& o : objs) f.push_back(to_metric_point(o));
  return f;
}

}  // namespace eafjsp
