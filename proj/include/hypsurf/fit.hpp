#pragma once

#include <cstddef>
#include <vector>

namespace hypsurf {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
};

// Ordinary least squares y = slope*x + intercept; needs >= 2 distinct x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hypsurf
