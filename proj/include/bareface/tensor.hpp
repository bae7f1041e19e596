#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace bareface {

// Dense C x H x W tensor of doubles, channel-major. Images use c=3, masks c=1,
// values in [0,1]. Network activations use the same type.
struct Tensor {
    int c = 0, h = 0, w = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int c_, int h_, int w_, double fill = 0.0)
        : c(c_), h(h_), w(w_), v(static_cast<size_t>(c_) * h_ * w_, fill) {}

    int size() const { return c * h * w; }
    int plane() const { return h * w; }

    double& at(int ci, int y, int x) { return v[(static_cast<size_t>(ci) * h + y) * w + x]; }
    double at(int ci, int y, int x) const { return v[(static_cast<size_t>(ci) * h + y) * w + x]; }

    double* data() { return v.data(); }
    const double* data() const { return v.data(); }

    bool same_shape(const Tensor& o) const { return c == o.c && h == o.h && w == o.w; }

    bool operator==(const Tensor& o) const {
        return c == o.c && h == o.h && w == o.w && v == o.v;
    }
};

Tensor concat_channels(const Tensor& a, const Tensor& b);
Tensor slice_channels(const Tensor& t, int c0, int c1);  // [c0, c1)

// 2x average pooling and its adjoint (gradient spread). h and w must be even.
Tensor downsample_avg2(const Tensor& x);
Tensor downsample_avg2_adjoint(const Tensor& dy);

Tensor upsample_nearest2(const Tensor& x);

// Bilinear resize, used only for ingesting external real-domain images.
Tensor resize_bilinear(const Tensor& x, int out_h, int out_w);

void clamp01(Tensor& t);
double max_abs_diff(const Tensor& a, const Tensor& b);
bool has_non_finite(const Tensor& t);

// 8-bit quantization used by the PNG writer; exposed so invariants can be
// checked on exactly what reaches disk.
inline uint8_t quantize8(double x) {
    double q = x * 255.0 + 0.5;
    if (q < 0.0) q = 0.0;
    if (q > 255.0) q = 255.0;
    return static_cast<uint8_t>(q);
}

// FNV-1a over raw bytes; used for config and parameter hashing.
uint64_t fnv1a(const void* data, size_t n, uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace bareface
