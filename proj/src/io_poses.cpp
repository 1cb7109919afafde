#include <fstream>
#include <iomanip>
#include <sstream>

#include "tiface/camera.hpp"

namespace tiface {

// Pose file, version 1. Layout (whitespace separated):
//   tiface-poses 1
//   <view count>
//   then per view:
//     width height fx fy cx cy
//     3x4 extrinsic, row-major: [R | c] with R world-from-camera and
//     c the camera center in world units
//     image path (one line, may contain no whitespace)
void save_poses(const std::string& path, const std::vector<CameraPose>& poses) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "tiface-poses 1\n" << poses.size() << "\n";
    out << std::setprecision(17);
    for (const auto& p : poses) {
        out << p.width << " " << p.height << " " << p.fx << " " << p.fy << " " << p.cx
            << " " << p.cy << "\n";
        for (int r = 0; r < 3; ++r)
            out << p.rotation(r, 0) << " " << p.rotation(r, 1) << " " << p.rotation(r, 2)
                << " " << p.translation[r] << "\n";
        out << p.image_path << "\n";
    }
}

std::vector<CameraPose> load_poses(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string tag;
    int version = 0;
    size_t count = 0;
    in >> tag >> version >> count;
    if (tag != "tiface-poses" || version != 1)
        throw std::runtime_error("unsupported pose file: " + path);
    std::vector<CameraPose> poses(count);
    for (auto& p : poses) {
        in >> p.width >> p.height >> p.fx >> p.fy >> p.cx >> p.cy;
        double t[3];
        for (int r = 0; r < 3; ++r)
            in >> p.rotation(r, 0) >> p.rotation(r, 1) >> p.rotation(r, 2) >> t[r];
        p.translation = {t[0], t[1], t[2]};
        in >> p.image_path;
        if (!in) throw std::runtime_error("truncated pose file: " + path);
        p.validate();
    }
    return poses;
}

}  // namespace tiface
