#pragma once

#include <vector>

#include "tiface/geometry.hpp"

namespace tiface {

struct CompositeResult {
    Vec3 rgb;
    double opacity = 0.0;                 // T = sum of weights
    std::vector<double> weights;          // per sample, in [0,1]
    std::vector<double> transmittances;   // tau_q, non-increasing, tau_1 = 1
};

// Emission-absorption compositor:
//   w_q = tau_q * (1 - exp(-sigma_q * delta_q)),  tau_q = exp(-sum_{p<q} sigma_p delta_p)
CompositeResult composite(const std::vector<double>& densities,
                          const std::vector<Vec3>& colors,
                          const std::vector<double>& deltas);

struct CompositeGradients {
    std::vector<double> d_density;
    std::vector<Vec3> d_color;
};

// Analytic adjoint of composite() for upstream gradients on rgb and opacity.
CompositeGradients composite_gradients(const std::vector<double>& densities,
                                       const std::vector<Vec3>& colors,
                                       const std::vector<double>& deltas,
                                       const Vec3& upstream_rgb,
                                       double upstream_opacity);

}  // namespace tiface
