#pragma once

#include <vector>

#include "tiface/camera.hpp"
#include "tiface/rng.hpp"

namespace tiface {

struct RaySamples {
    std::vector<Vec3> positions;
    std::vector<double> deltas;    // step sizes, all > 0
    std::vector<double> t_values;  // strictly increasing
};

// One sample per bin of the uniform partition of [t_near, t_far];
// jitter[q] in [0,1) places the sample inside bin q. The final delta
// equals the bin width so free space keeps opacity < 1.
RaySamples sample_stratified(const Ray& ray, int q_count, const std::vector<double>& jitter);

// Convenience: jitter drawn from a per-ray stream (0.5 everywhere when
// jittered == false, i.e. midpoint sampling).
RaySamples sample_stratified(const Ray& ray, int q_count, Rng& rng, bool jittered = true);

}  // namespace tiface
