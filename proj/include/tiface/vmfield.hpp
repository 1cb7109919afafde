#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tiface/camera.hpp"
#include "tiface/composite.hpp"
#include "tiface/params.hpp"
#include "tiface/rng.hpp"

namespace tiface {

// One rank-1 term of the vector-matrix factorization: a vector along
// `axis` and a matrix over the complementary plane (row-major, lower
// axis index slower).
struct FactorComponent {
    int axis = 0;
    std::vector<double> vec;
    std::vector<double> mat;
};

struct VMField {
    std::array<int, 3> resolution{0, 0, 0};
    Aabb aabb;
    std::vector<FactorComponent> density_components;
    std::vector<FactorComponent> appearance_components;  // one feature channel each
    std::vector<double> sh_map;  // (3*9) x feature_dim, row-major
    double density_shift = -10.0;

    int feature_dim() const { return static_cast<int>(appearance_components.size()); }

    // Components distributed round-robin over axes; factors initialized
    // zero-mean uniform scaled 0.1/sqrt(R), deterministic in seed.
    static VMField create(std::array<int, 3> resolution, const Aabb& aabb, int r_density,
                          int r_appearance, std::uint64_t seed);

    std::vector<ParamBlockView> param_blocks();

    // sigma = softplus(sum_r vec_r * mat_r + density_shift); 0 outside the aabb.
    double query_density(const Vec3& point) const;
    void query_density_backward(const Vec3& point, double upstream, GradBuffer& grads) const;

    Vec3 query_appearance(const Vec3& point, const Vec3& view_dir) const;
    void query_appearance_backward(const Vec3& point, const Vec3& view_dir,
                                   const Vec3& upstream, GradBuffer& grads) const;

    VMField upsample(std::array<int, 3> new_resolution) const;
};

struct RenderOutput {
    CompositeResult composite;
    Vec3 final_rgb;  // alpha-composited over the background color
};

// Stratified render of one ray through the field; the ray is clipped to
// the aabb first. `stream` keys the per-ray jitter.
RenderOutput render_ray(const VMField& field, const Ray& ray, int q_count,
                        std::uint64_t seed, std::uint64_t stream, bool jittered,
                        const Vec3& background);

void save_vmfield(const std::string& path, const VMField& field,
                  const std::vector<std::vector<double>>& optimizer_state);
VMField load_vmfield(const std::string& path, std::vector<std::vector<double>>* optimizer_state);

}  // namespace tiface
