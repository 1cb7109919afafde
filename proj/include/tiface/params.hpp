#pragma once

#include <string>
#include <vector>

#include "tiface/geometry.hpp"

namespace tiface {

// A named view into one trainable parameter block. Fields expose their
// parameters through these so the optimizer and the finite-difference
// checker stay generic.
struct ParamBlockView {
    std::string name;
    std::vector<double>* data = nullptr;
};

// Gradient accumulator shaped like a field's parameter blocks.
struct GradBuffer {
    std::vector<std::vector<double>> blocks;

    void init_like(const std::vector<ParamBlockView>& views) {
        blocks.clear();
        blocks.reserve(views.size());
        for (const auto& v : views) blocks.emplace_back(v.data->size(), 0.0);
    }
    void zero() {
        for (auto& b : blocks)
            std::fill(b.begin(), b.end(), 0.0);
    }
    void add(const GradBuffer& other) {
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = 0; j < blocks[i].size(); ++j) blocks[i][j] += other.blocks[i][j];
    }
    void scale(double s) {
        for (auto& b : blocks)
            for (auto& v : b) v *= s;
    }
    bool all_finite() const {
        for (const auto& b : blocks)
            for (double v : b)
                if (!std::isfinite(v)) return false;
        return true;
    }
};

}  // namespace tiface
