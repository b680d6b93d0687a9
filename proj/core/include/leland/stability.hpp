#pragma once

#include <string>
#include <vector>

#include "leland/mesh.hpp"
#include "leland/timestepper.hpp"

namespace leland {

inline constexpr double kOscillationThreshold = 0.01;

struct StabilityReport {
    double ratio_tau_h = 0.0;
    double ratio_tau_h2 = 0.0;
    double oscillation_index = 0.0;  // max of per_level_index past the startup window
    bool flagged = false;
    double threshold = kOscillationThreshold;
    std::vector<double> per_level_index;  // one entry per stored level
};

// Oscillation index of one run. Per level, over the vertex nodes within
// |x - ln K| <= 1 (where spurious wiggles concentrate), form the h^2-scaled
// second differences d_i of u; every sign-alternating neighbor pair
// contributes min(|d_i|, |d_{i+1}|). The sum is normalized by the window's
// value range and node count, making the index invariant under shifting and
// positive scaling of u. The reported index is the max over levels past the
// startup window (the damped kink transient there is not an instability);
// the full series is kept for plotting. P2 midpoint nodes are excluded
// because their distinct interpolation error alternates against the vertex
// values even in smooth runs.
StabilityReport analyze(const SolutionHistory& history, const Mesh1D& mesh,
                        const SchemeConfig& cfg, double strike,
                        double threshold = kOscillationThreshold);

struct RatioAdvisory {
    bool ok = true;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
};

// Warns when d_tau/h >= 1 or d_tau/h^2 >= 1; notes when d_tau/h^2 > 0.5,
// which is close to the regime where oscillations are observed.
RatioAdvisory ratio_check(double h, double d_tau);

}  // namespace leland
