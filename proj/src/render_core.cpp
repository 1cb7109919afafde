#include <algorithm>
#include <cmath>

#include "tiface/camera.hpp"
#include "tiface/composite.hpp"
#include "tiface/sampling.hpp"

namespace tiface {

void CameraPose::validate() const {
    if (!(fx > 0 && fy > 0)) throw InputDomainError("camera: focal lengths must be positive");
    if (!(cx >= 0 && cx < width && cy >= 0 && cy < height))
        throw InputDomainError("camera: principal point outside image");
    const Mat3 rtr = rotation.transposed() * rotation;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(rtr(i, j) - want) > 1e-9)
                throw InputDomainError("camera: rotation is not orthonormal");
        }
    if (std::abs(rotation.det() - 1.0) > 1e-9)
        throw InputDomainError("camera: rotation determinant is not +1");
}

Ray generate_ray(const CameraPose& camera, double px, double py) {
    if (!(px >= 0 && px < camera.width && py >= 0 && py < camera.height))
        throw InputDomainError("generate_ray: pixel outside image bounds");
    const Vec3 dir_cam{(px - camera.cx) / camera.fx, (py - camera.cy) / camera.fy, 1.0};
    Ray ray;
    ray.origin = camera.translation;
    ray.direction = (camera.rotation * dir_cam).normalized();
    ray.t_near = 0.0;
    ray.t_far = 1e30;
    return ray;
}

RaySamples sample_stratified(const Ray& ray, int q_count, const std::vector<double>& jitter) {
    if (q_count < 1) throw InputDomainError("sample_stratified: q_count must be >= 1");
    if (static_cast<int>(jitter.size()) != q_count)
        throw InputDomainError("sample_stratified: jitter length mismatch");
    RaySamples s;
    s.positions.reserve(q_count);
    s.t_values.reserve(q_count);
    s.deltas.resize(q_count);
    const double bin = (ray.t_far - ray.t_near) / q_count;
    for (int q = 0; q < q_count; ++q) {
        const double t = ray.t_near + (q + jitter[q]) * bin;
        s.t_values.push_back(t);
        s.positions.push_back(ray.origin + ray.direction * t);
    }
    for (int q = 0; q + 1 < q_count; ++q) s.deltas[q] = s.t_values[q + 1] - s.t_values[q];
    s.deltas[q_count - 1] = bin;
    return s;
}

RaySamples sample_stratified(const Ray& ray, int q_count, Rng& rng, bool jittered) {
    std::vector<double> jitter(static_cast<size_t>(std::max(q_count, 0)));
    for (auto& j : jitter) j = jittered ? rng.next_double() : 0.5;
    return sample_stratified(ray, q_count, jitter);
}

CompositeResult composite(const std::vector<double>& densities,
                          const std::vector<Vec3>& colors,
                          const std::vector<double>& deltas) {
    const size_t q_count = densities.size();
    if (colors.size() != q_count || deltas.size() != q_count)
        throw InputDomainError("composite: length mismatch");
    CompositeResult r;
    r.weights.resize(q_count);
    r.transmittances.resize(q_count);
    double tau = 1.0;
    for (size_t q = 0; q < q_count; ++q) {
        if (densities[q] < 0) throw InputDomainError("composite: negative density");
        const double a = densities[q] * deltas[q];
        const double absorb = -std::expm1(-a);  // 1 - exp(-a)
        const double w = tau * absorb;
        r.transmittances[q] = tau;
        r.weights[q] = w;
        r.rgb += colors[q] * w;
        r.opacity += w;
        tau *= std::exp(-a);
    }
    return r;
}

CompositeGradients composite_gradients(const std::vector<double>& densities,
                                       const std::vector<Vec3>& colors,
                                       const std::vector<double>& deltas,
                                       const Vec3& upstream_rgb,
                                       double upstream_opacity) {
    const size_t q_count = densities.size();
    if (colors.size() != q_count || deltas.size() != q_count)
        throw InputDomainError("composite_gradients: length mismatch");
    const CompositeResult fwd = composite(densities, colors, deltas);
    CompositeGradients g;
    g.d_density.resize(q_count);
    g.d_color.resize(q_count);
    // dL/dw_q for each sample, then a suffix sum handles the transmittance
    // coupling: dw_r/dsigma_q = -delta_q * w_r for r > q.
    std::vector<double> dL_dw(q_count);
    for (size_t q = 0; q < q_count; ++q) {
        dL_dw[q] = upstream_rgb.dot(colors[q]) + upstream_opacity;
        g.d_color[q] = upstream_rgb * fwd.weights[q];
    }
    double suffix = 0.0;  // sum over r > q of dL_dw[r] * w_r
    for (size_t qi = q_count; qi-- > 0;) {
        const double a = densities[qi] * deltas[qi];
        g.d_density[qi] =
            deltas[qi] * (fwd.transmittances[qi] * std::exp(-a) * dL_dw[qi] - suffix);
        suffix += dL_dw[qi] * fwd.weights[qi];
    }
    return g;
}

}  // namespace tiface
