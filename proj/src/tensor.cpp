#include "bareface/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bareface {

Tensor concat_channels(const Tensor& a, const Tensor& b) {
    if (a.h != b.h || a.w != b.w)
        throw std::invalid_argument("concat_channels: spatial shape mismatch");
    Tensor out(a.c + b.c, a.h, a.w);
    std::copy(a.v.begin(), a.v.end(), out.v.begin());
    std::copy(b.v.begin(), b.v.end(), out.v.begin() + a.v.size());
    return out;
}

Tensor slice_channels(const Tensor& t, int c0, int c1) {
    if (c0 < 0 || c1 > t.c || c0 >= c1)
        throw std::invalid_argument("slice_channels: bad channel range");
    Tensor out(c1 - c0, t.h, t.w);
    std::copy(t.v.begin() + static_cast<size_t>(c0) * t.plane(),
              t.v.begin() + static_cast<size_t>(c1) * t.plane(), out.v.begin());
    return out;
}

Tensor downsample_avg2(const Tensor& x) {
    if (x.h % 2 != 0 || x.w % 2 != 0)
        throw std::invalid_argument("downsample_avg2: odd spatial size");
    Tensor y(x.c, x.h / 2, x.w / 2);
    for (int c = 0; c < x.c; ++c)
        for (int i = 0; i < y.h; ++i)
            for (int j = 0; j < y.w; ++j)
                y.at(c, i, j) = 0.25 * (x.at(c, 2 * i, 2 * j) + x.at(c, 2 * i, 2 * j + 1) +
                                        x.at(c, 2 * i + 1, 2 * j) + x.at(c, 2 * i + 1, 2 * j + 1));
    return y;
}

Tensor downsample_avg2_adjoint(const Tensor& dy) {
    Tensor dx(dy.c, dy.h * 2, dy.w * 2);
    for (int c = 0; c < dy.c; ++c)
        for (int i = 0; i < dy.h; ++i)
            for (int j = 0; j < dy.w; ++j) {
                double g = 0.25 * dy.at(c, i, j);
                dx.at(c, 2 * i, 2 * j) = g;
                dx.at(c, 2 * i, 2 * j + 1) = g;
                dx.at(c, 2 * i + 1, 2 * j) = g;
                dx.at(c, 2 * i + 1, 2 * j + 1) = g;
            }
    return dx;
}

Tensor upsample_nearest2(const Tensor& x) {
    Tensor y(x.c, x.h * 2, x.w * 2);
    for (int c = 0; c < x.c; ++c)
        for (int i = 0; i < x.h; ++i)
            for (int j = 0; j < x.w; ++j) {
                double val = x.at(c, i, j);
                y.at(c, 2 * i, 2 * j) = val;
                y.at(c, 2 * i, 2 * j + 1) = val;
                y.at(c, 2 * i + 1, 2 * j) = val;
                y.at(c, 2 * i + 1, 2 * j + 1) = val;
            }
    return y;
}

Tensor resize_bilinear(const Tensor& x, int out_h, int out_w) {
    Tensor y(x.c, out_h, out_w);
    double sy = static_cast<double>(x.h) / out_h;
    double sx = static_cast<double>(x.w) / out_w;
    for (int c = 0; c < x.c; ++c)
        for (int i = 0; i < out_h; ++i)
            for (int j = 0; j < out_w; ++j) {
                double fy = (i + 0.5) * sy - 0.5;
                double fx = (j + 0.5) * sx - 0.5;
                int y0 = static_cast<int>(std::floor(fy));
                int x0 = static_cast<int>(std::floor(fx));
                double wy = fy - y0, wx = fx - x0;
                auto clampi = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };
                int y1 = clampi(y0 + 1, x.h - 1), x1 = clampi(x0 + 1, x.w - 1);
                y0 = clampi(y0, x.h - 1);
                x0 = clampi(x0, x.w - 1);
                y.at(c, i, j) = (1 - wy) * ((1 - wx) * x.at(c, y0, x0) + wx * x.at(c, y0, x1)) +
                                wy * ((1 - wx) * x.at(c, y1, x0) + wx * x.at(c, y1, x1));
            }
    return y;
}

void clamp01(Tensor& t) {
    for (double& x : t.v) x = std::clamp(x, 0.0, 1.0);
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::fabs(a.v[i] - b.v[i]));
    return m;
}

bool has_non_finite(const Tensor& t) {
    for (double x : t.v)
        if (!std::isfinite(x)) return true;
    return false;
}

uint64_t fnv1a(const void* data, size_t n, uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace bareface
