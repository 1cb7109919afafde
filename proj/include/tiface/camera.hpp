#pragma once

#include <string>
#include <vector>

#include "tiface/geometry.hpp"

namespace tiface {

// Pinhole camera. `rotation` maps camera coordinates to world coordinates
// (camera looks down +z); `translation` is the camera center in world units.
struct CameraPose {
    double fx = 0, fy = 0;
    double cx = 0, cy = 0;
    Mat3 rotation;
    Vec3 translation;
    int width = 0, height = 0;
    std::string image_path;

    void validate() const;
    Vec3 forward() const { return rotation * Vec3{0, 0, 1}; }
};

struct Ray {
    Vec3 origin;
    Vec3 direction;  // unit length
    double t_near = 0;
    double t_far = 0;
};

// px/py are pixel coordinates with sub-pixel offset already applied
// (px = column + offset). Offset 0.5 hits the pixel center.
Ray generate_ray(const CameraPose& camera, double px, double py);

// Versioned plain-text container: header line, view count, then one
// record per view (see docs in io_poses.cpp).
void save_poses(const std::string& path, const std::vector<CameraPose>& poses);
std::vector<CameraPose> load_poses(const std::string& path);

}  // namespace tiface
