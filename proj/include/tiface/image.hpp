#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiface/geometry.hpp"

namespace tiface {

// Row-major RGB image, values in [0,1].
struct ImageBuffer {
    int width = 0, height = 0;
    std::vector<double> data;  // 3 * width * height

    ImageBuffer() = default;
    ImageBuffer(int w, int h) : width(w), height(h), data(3ull * w * h, 0.0) {}

    double* pixel(int x, int y) { return &data[3ull * (static_cast<size_t>(y) * width + x)]; }
    const double* pixel(int x, int y) const {
        return &data[3ull * (static_cast<size_t>(y) * width + x)];
    }
    Vec3 at(int x, int y) const {
        const double* p = pixel(x, y);
        return {p[0], p[1], p[2]};
    }
    void set(int x, int y, const Vec3& c) {
        double* p = pixel(x, y);
        p[0] = c.x; p[1] = c.y; p[2] = c.z;
    }
};

// Single-channel soft mask, values in [0,1].
struct AlphaMask {
    int width = 0, height = 0;
    std::vector<double> values;

    AlphaMask() = default;
    AlphaMask(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
};

enum class TrimapLabel : std::uint8_t { Background = 0, Unknown = 1, Foreground = 2 };

struct Trimap {
    int width = 0, height = 0;
    std::vector<TrimapLabel> labels;

    Trimap() = default;
    Trimap(int w, int h)
        : width(w), height(h),
          labels(static_cast<size_t>(w) * h, TrimapLabel::Background) {}

    TrimapLabel at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
    TrimapLabel& at(int x, int y) { return labels[static_cast<size_t>(y) * width + x]; }
};

// Binary PPM/PGM IO. Quantization is round-to-nearest; loads map back to
// [0,1]. save_image_f32 is the lossless float container (little-endian
// raw floats with a small header).
void save_image(const std::string& path, const ImageBuffer& img);
ImageBuffer load_image(const std::string& path);

void save_mask(const std::string& path, const AlphaMask& mask);
AlphaMask load_mask(const std::string& path);

// 16-bit PGM, depth mapped linearly from [0, max_depth] to [0, 65535].
void save_depth(const std::string& path, const AlphaMask& depth, double max_depth);

// Trimap as 8-bit PGM with values {0, 128, 255}.
void save_trimap(const std::string& path, const Trimap& trimap);
Trimap load_trimap(const std::string& path);

void save_image_f32(const std::string& path, const ImageBuffer& img);
ImageBuffer load_image_f32(const std::string& path);

}  // namespace tiface
