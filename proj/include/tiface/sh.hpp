#pragma once

#include <array>

#include "tiface/geometry.hpp"

namespace tiface {

inline constexpr int kShBasisCount = 9;  // real SH up to degree 2

// Real spherical harmonics basis evaluated at a unit direction.
inline std::array<double, kShBasisCount> sh_basis(const Vec3& d) {
    const double x = d.x, y = d.y, z = d.z;
    return {
        0.28209479177387814,
        0.4886025119029199 * y,
        0.4886025119029199 * z,
        0.4886025119029199 * x,
        1.0925484305920792 * x * y,
        1.0925484305920792 * y * z,
        0.31539156525252005 * (3.0 * z * z - 1.0),
        1.0925484305920792 * x * z,
        0.5462742152960396 * (x * x - y * y),
    };
}

}  // namespace tiface
