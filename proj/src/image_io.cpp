#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "tiface/image.hpp"

namespace tiface {
namespace {

std::uint8_t to_u8(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

void read_pnm_header(std::ifstream& in, const std::string& path, const char* magic,
                     int& w, int& h, int& maxval) {
    std::string tag;
    in >> tag;
    if (tag != magic) throw std::runtime_error("unexpected format in " + path);
    in >> w >> h >> maxval;
    if (!in || w <= 0 || h <= 0) throw std::runtime_error("bad header in " + path);
    in.get();  // single whitespace before raster
}

}  // namespace

void save_image(const std::string& path, const ImageBuffer& img) {
    auto out = open_out(path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> row(3ull * img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double* p = img.pixel(x, y);
            row[3 * x + 0] = to_u8(p[0]);
            row[3 * x + 1] = to_u8(p[1]);
            row[3 * x + 2] = to_u8(p[2]);
        }
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

ImageBuffer load_image(const std::string& path) {
    auto in = open_in(path);
    int w, h, maxval;
    read_pnm_header(in, path, "P6", w, h, maxval);
    ImageBuffer img(w, h);
    std::vector<std::uint8_t> row(3ull * w);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row.size());
        if (!in) throw std::runtime_error("truncated image: " + path);
        for (int x = 0; x < w; ++x) {
            double* p = img.pixel(x, y);
            p[0] = row[3 * x + 0] / 255.0;
            p[1] = row[3 * x + 1] / 255.0;
            p[2] = row[3 * x + 2] / 255.0;
        }
    }
    return img;
}

void save_mask(const std::string& path, const AlphaMask& mask) {
    auto out = open_out(path);
    out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
    std::vector<std::uint8_t> row(mask.width);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) row[x] = to_u8(mask.at(x, y));
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

AlphaMask load_mask(const std::string& path) {
    auto in = open_in(path);
    int w, h, maxval;
    read_pnm_header(in, path, "P5", w, h, maxval);
    AlphaMask mask(w, h);
    std::vector<std::uint8_t> row(w);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row.size());
        if (!in) throw std::runtime_error("truncated mask: " + path);
        for (int x = 0; x < w; ++x) mask.at(x, y) = row[x] / 255.0;
    }
    return mask;
}

void save_depth(const std::string& path, const AlphaMask& depth, double max_depth) {
    auto out = open_out(path);
    out << "P5\n" << depth.width << " " << depth.height << "\n65535\n";
    std::vector<std::uint8_t> row(2ull * depth.width);
    for (int y = 0; y < depth.height; ++y) {
        for (int x = 0; x < depth.width; ++x) {
            const double v = std::clamp(depth.at(x, y) / max_depth, 0.0, 1.0);
            const auto q = static_cast<std::uint16_t>(std::lround(v * 65535.0));
            row[2 * x] = static_cast<std::uint8_t>(q >> 8);  // PGM is big-endian
            row[2 * x + 1] = static_cast<std::uint8_t>(q & 0xff);
        }
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

void save_trimap(const std::string& path, const Trimap& trimap) {
    auto out = open_out(path);
    out << "P5\n" << trimap.width << " " << trimap.height << "\n255\n";
    std::vector<std::uint8_t> row(trimap.width);
    for (int y = 0; y < trimap.height; ++y) {
        for (int x = 0; x < trimap.width; ++x) {
            switch (trimap.at(x, y)) {
                case TrimapLabel::Background: row[x] = 0; break;
                case TrimapLabel::Unknown: row[x] = 128; break;
                case TrimapLabel::Foreground: row[x] = 255; break;
            }
        }
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

Trimap load_trimap(const std::string& path) {
    auto in = open_in(path);
    int w, h, maxval;
    read_pnm_header(in, path, "P5", w, h, maxval);
    Trimap trimap(w, h);
    std::vector<std::uint8_t> row(w);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row.size());
        if (!in) throw std::runtime_error("truncated trimap: " + path);
        for (int x = 0; x < w; ++x) {
            if (row[x] < 64) trimap.at(x, y) = TrimapLabel::Background;
            else if (row[x] < 192) trimap.at(x, y) = TrimapLabel::Unknown;
            else trimap.at(x, y) = TrimapLabel::Foreground;
        }
    }
    return trimap;
}

void save_image_f32(const std::string& path, const ImageBuffer& img) {
    auto out = open_out(path);
    out << "TIFACEF32 1\n" << img.width << " " << img.height << "\n";
    std::vector<float> row(3ull * img.width);
    for (int y = 0; y < img.height; ++y) {
        for (size_t i = 0; i < row.size(); ++i)
            row[i] = static_cast<float>(img.data[3ull * img.width * y + i]);
        out.write(reinterpret_cast<const char*>(row.data()), row.size() * sizeof(float));
    }
}

ImageBuffer load_image_f32(const std::string& path) {
    auto in = open_in(path);
    std::string tag;
    int version, w, h;
    in >> tag >> version >> w >> h;
    if (tag != "TIFACEF32" || version != 1 || w <= 0 || h <= 0)
        throw std::runtime_error("bad f32 image header: " + path);
    in.get();
    ImageBuffer img(w, h);
    std::vector<float> row(3ull * w);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row.size() * sizeof(float));
        if (!in) throw std::runtime_error("truncated f32 image: " + path);
        for (size_t i = 0; i < row.size(); ++i) img.data[3ull * w * y + i] = row[i];
    }
    return img;
}

}  // namespace tiface
