#pragma once

#include <vector>

#include "altes/synth.hpp"
#include "altes/transform.hpp"

namespace altes {

struct RidgePoint {
  std::size_t scale_idx = 0;
  std::size_t shift_idx = 0;
  double magnitude = 0.0;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Chain of per-scale magnitude maxima linked across adjacent scales, with a
/// least-squares line fit of shift against scale index.
struct Ridge {
  std::vector<RidgePoint> points;  // sorted by scale index
  LineFit line_fit;

  double summed_magnitude() const;
  /// Magnitude-weighted mean shift.
  double center_estimate() const;
};

struct DetectionReport {
  struct Detection {
    double estimated_center = 0.0;
    Ridge ridge;
    double score = 0.0;  // summed ridge magnitude
  };
  struct Match {
    std::size_t truth_index = 0;
    std::size_t detection_index = 0;
    double center_error = 0.0;  // signed, samples
  };

  std::vector<Detection> detections;
  std::vector<Match> matched;
  std::size_t misses = 0;
  std::size_t false_alarms = 0;
  double mean_abs_center_error = 0.0;
};

/// Greedy ridge following: per-row local maxima of |coefficient| (strongest
/// kept per row), linked across adjacent scales within +-link_window shift
/// bins; chains shorter than min_len are discarded and the top max_ridges by
/// summed magnitude are returned.
std::vector<Ridge> extract_ridges(const Scalogram& sc, std::size_t max_ridges,
                                  std::size_t min_len, std::size_t link_window = 2,
                                  std::size_t per_row_candidates = 24);

/// One-to-one greedy matching of ridge centers against ground-truth chirp
/// centers within tol samples; unmatched truths are misses, unmatched ridges
/// false alarms.
DetectionReport score_detections(const std::vector<Ridge>& ridges, const GroundTruth& truth,
                                 std::size_t tol);

}  // namespace altes
