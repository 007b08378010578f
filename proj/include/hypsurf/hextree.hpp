#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hypsurf/hexagon.hpp"

namespace hypsurf {

// Orbit of the hexagon incenter under the group generated by the reflections
// in the three a-sides (a free product Z/2 * Z/2 * Z/2).  Every orbit point
// is reached by a unique reduced word; a branch with prefix v*r_i lies
// entirely beyond the image mirror v*(a-side i), which makes radius pruning
// exact.

struct ReducedWord {
    std::vector<std::uint8_t> letters;  // values 0,1,2; no two consecutive equal
};

// Thrown when an enumeration or search would exceed its resource cap.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
    std::int64_t cap = 100'000'000;          // max emissions before resource_limit_error
    double prune_slack = 0.0;                // prune only when entry_dist > R + slack (soundness testing)
    std::array<int, 3> label_perm{0, 1, 2};  // generator relabeling
    bool check_collisions = true;            // detect distinct words mapping to one point
    std::int64_t collision_check_cap = 4'000'000;  // stop collision bookkeeping beyond this many points
    int renorm_interval = 16;                // renormalize frames every this many letters
};

// Emits every reduced word (including the empty one) whose orbit point lies
// within distance R of the incenter, depth-first.  Serial.
void enumerate_orbit(const Hexagon& hex, double R,
                     const std::function<void(const ReducedWord&, const Point&, double)>& emit,
                     const EnumerateOptions& opts = {});

// N_a(R): number of orbit points within distance R.  `count` splits the word
// tree across OpenMP workers; the result is independent of the worker count.
std::int64_t count(const Hexagon& hex, double R, const EnumerateOptions& opts = {});
std::int64_t count_serial(const Hexagon& hex, double R, const EnumerateOptions& opts = {});

// All orbit distances <= R, sorted ascending (parallel enumeration).
std::vector<double> collect_distances(const Hexagon& hex, double R, const EnumerateOptions& opts = {});

// Unpruned oracle: every reduced word of length <= max_len, points deduped on
// a 1e-6 grid.  Complete for radii below certified_r (the closest geodesic
// that the length cutoff discarded).
struct BruteForceResult {
    std::int64_t count = 0;
    double certified_r = 0.0;
    std::int64_t raw_words = 0;
    std::int64_t distinct_points = 0;
};
BruteForceResult brute_force_count(const Hexagon& hex, int max_len, double R);

struct DeltaEstimate {
    double a = 0.0;
    double delta = 0.0;     // fitted growth exponent of N_a(R) ~ cst * e^(delta R)
    double log_cst = 0.0;   // fitted intercept
    double r_min = 0.0, r_max = 0.0, step = 0.0;
    double residual_rms = 0.0;
    double slope_instability = 0.0;  // |slope(first half) - slope(second half)|
    std::vector<std::pair<double, std::int64_t>> counts;  // (R, N) over the grid
};

// Least-squares fit of log N against R on the grid [r_min, r_max] with the
// given step.  Requires r_max - r_min >= 5*step and N(r_max) >= 1000.
DeltaEstimate estimate_delta(const Hexagon& hex, double r_min, double r_max, double step,
                             const EnumerateOptions& opts = {});

// Smallest grid radius with N(R) >= target_count (grows R geometrically).
double choose_r_max(const Hexagon& hex, std::int64_t target_count, double r_limit = 80.0);

}  // namespace hypsurf
