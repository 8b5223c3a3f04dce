#include "altes/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace altes {

double Ridge::summed_magnitude() const {
  double s = 0.0;
  for (const RidgePoint& p : points) s += p.magnitude;
  return s;
}

double Ridge::center_estimate() const {
  double num = 0.0, den = 0.0;
  for (const RidgePoint& p : points) {
    num += p.magnitude * static_cast<double>(p.shift_idx);
    den += p.magnitude;
  }
  return den > 0.0 ? num / den : 0.0;
}

namespace {

LineFit fit_line(const std::vector<RidgePoint>& pts) {
  LineFit f;
  const double n = static_cast<double>(pts.size());
  if (pts.size() < 2) {
    f.intercept = pts.empty() ? 0.0 : static_cast<double>(pts[0].shift_idx);
    return f;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const RidgePoint& p : pts) {
    const double x = static_cast<double>(p.scale_idx);
    const double y = static_cast<double>(p.shift_idx);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) {
    f.intercept = sy / n;
    return f;
  }
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;

  const double mean_y = sy / n;
  double ss_tot = 0, ss_res = 0;
  for (const RidgePoint& p : pts) {
    const double y = static_cast<double>(p.shift_idx);
    const double pred = f.slope * static_cast<double>(p.scale_idx) + f.intercept;
    ss_tot += (y - mean_y) * (y - mean_y);
    ss_res += (y - pred) * (y - pred);
  }
  f.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 0.0;
  return f;
}

struct Chain {
  std::vector<RidgePoint> points;
  double summed = 0.0;
};

}  // namespace

std::vector<Ridge> extract_ridges(const Scalogram& sc, std::size_t max_ridges,
                                  std::size_t min_len, std::size_t link_window,
                                  std::size_t per_row_candidates) {
  const std::size_t n_rows = sc.n_scales();
  const std::size_t n_cols = sc.n_shifts();
  if (n_rows == 0 || n_cols == 0) throw std::invalid_argument("extract_ridges: empty scalogram");
  if (min_len == 0) min_len = 1;

  std::vector<Chain> closed;
  std::vector<Chain> active;

  std::vector<std::size_t> maxima;
  for (std::size_t i = 0; i < n_rows; ++i) {
    const std::vector<cplx>& row = sc.coefficients[i];
    maxima.clear();
    for (std::size_t b = 1; b + 1 < n_cols; ++b) {
      const double m = std::abs(row[b]);
      if (m > 0.0 && m > std::abs(row[b - 1]) && m >= std::abs(row[b + 1])) maxima.push_back(b);
    }
    std::sort(maxima.begin(), maxima.end(), [&](std::size_t a, std::size_t b) {
      const double ma = std::abs(row[a]), mb = std::abs(row[b]);
      if (ma != mb) return ma > mb;
      return a < b;
    });
    if (maxima.size() > per_row_candidates) maxima.resize(per_row_candidates);

    // stronger chains pick first; each candidate extends at most one chain
    std::sort(active.begin(), active.end(),
              [](const Chain& a, const Chain& b) { return a.summed > b.summed; });
    std::vector<bool> used(maxima.size(), false);
    std::vector<Chain> next_active;
    for (Chain& ch : active) {
      const std::size_t last_shift = ch.points.back().shift_idx;
      std::size_t best = maxima.size();
      std::size_t best_dist = link_window + 1;
      double best_mag = -1.0;
      for (std::size_t c = 0; c < maxima.size(); ++c) {
        if (used[c]) continue;
        const std::size_t d = maxima[c] > last_shift ? maxima[c] - last_shift
                                                     : last_shift - maxima[c];
        if (d > link_window) continue;
        const double m = std::abs(row[maxima[c]]);
        if (d < best_dist || (d == best_dist && m > best_mag)) {
          best = c;
          best_dist = d;
          best_mag = m;
        }
      }
      if (best < maxima.size()) {
        used[best] = true;
        const double m = std::abs(row[maxima[best]]);
        ch.points.push_back({i, maxima[best], m});
        ch.summed += m;
        next_active.push_back(std::move(ch));
      } else {
        closed.push_back(std::move(ch));
      }
    }
    for (std::size_t c = 0; c < maxima.size(); ++c) {
      if (used[c]) continue;
      Chain ch;
      const double m = std::abs(row[maxima[c]]);
      ch.points.push_back({i, maxima[c], m});
      ch.summed = m;
      next_active.push_back(std::move(ch));
    }
    active = std::move(next_active);
  }
  for (Chain& ch : active) closed.push_back(std::move(ch));

  closed.erase(std::remove_if(closed.begin(), closed.end(),
                              [&](const Chain& c) { return c.points.size() < min_len; }),
               closed.end());
  std::sort(closed.begin(), closed.end(), [](const Chain& a, const Chain& b) {
    if (a.summed != b.summed) return a.summed > b.summed;
    return a.points.front().shift_idx < b.points.front().shift_idx;
  });
  if (closed.size() > max_ridges) closed.resize(max_ridges);

  std::vector<Ridge> out;
  out.reserve(closed.size());
  for (Chain& c : closed) {
    Ridge r;
    r.points = std::move(c.points);
    r.line_fit = fit_line(r.points);
    out.push_back(std::move(r));
  }
  return out;
}

DetectionReport score_detections(const std::vector<Ridge>& ridges, const GroundTruth& truth,
                                 std::size_t tol) {
  if (tol == 0) throw std::invalid_argument("score_detections: tol must be positive");

  DetectionReport rep;
  for (const Ridge& r : ridges) {
    DetectionReport::Detection d;
    d.ridge = r;
    d.estimated_center = r.center_estimate();
    d.score = r.summed_magnitude();
    rep.detections.push_back(std::move(d));
  }
  // canonical detection order, so the report does not depend on input order
  std::sort(rep.detections.begin(), rep.detections.end(),
            [](const DetectionReport::Detection& a, const DetectionReport::Detection& b) {
              if (a.estimated_center != b.estimated_center)
                return a.estimated_center < b.estimated_center;
              return a.score > b.score;
            });

  struct Pair {
    double err_abs;
    std::size_t truth;
    std::size_t det;
    double err;
  };
  std::vector<Pair> pairs;
  for (std::size_t t = 0; t < truth.chirp_centers.size(); ++t) {
    for (std::size_t d = 0; d < rep.detections.size(); ++d) {
      const double err =
          rep.detections[d].estimated_center - static_cast<double>(truth.chirp_centers[t]);
      if (std::abs(err) <= static_cast<double>(tol)) pairs.push_back({std::abs(err), t, d, err});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.err_abs != b.err_abs) return a.err_abs < b.err_abs;
    if (a.truth != b.truth) return a.truth < b.truth;
    return a.det < b.det;
  });

  std::vector<bool> truth_used(truth.chirp_centers.size(), false);
  std::vector<bool> det_used(rep.detections.size(), false);
  double err_sum = 0.0;
  for (const Pair& pr : pairs) {
    if (truth_used[pr.truth] || det_used[pr.det]) continue;
    truth_used[pr.truth] = true;
    det_used[pr.det] = true;
    rep.matched.push_back({pr.truth, pr.det, pr.err});
    err_sum += pr.err_abs;
  }
  std::sort(rep.matched.begin(), rep.matched.end(),
            [](const DetectionReport::Match& a, const DetectionReport::Match& b) {
              return a.truth_index < b.truth_index;
            });
  rep.misses = truth.chirp_centers.size() - rep.matched.size();
  rep.false_alarms = rep.detections.size() - rep.matched.size();
  rep.mean_abs_center_error = rep.matched.empty() ? 0.0 : err_sum / rep.matched.size();
  return rep;
}

}  // namespace altes
