#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <vector>

#include "ddm/errors.hpp"
#include "ddm/rng.hpp"

namespace ddm {

// Dense row-major n-d array. The single value type every module trades in.
template <typename T>
class Tensor {
    static_assert(std::is_floating_point_v<T>);

public:
    using value_type = T;

    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> dims, T fill = T(0))
        : dims_(std::move(dims)), data_(checked_numel(dims_), fill) {}

    Tensor(std::vector<std::size_t> dims, std::vector<T> data)
        : dims_(std::move(dims)), data_(std::move(data)) {
        if (data_.size() != checked_numel(dims_))
            throw ShapeError("tensor: buffer length does not match dims");
    }

    static Tensor zeros(std::vector<std::size_t> dims) { return Tensor(std::move(dims)); }
    static Tensor full(std::vector<std::size_t> dims, T v) { return Tensor(std::move(dims), v); }

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t rank() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    std::size_t numel() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& buffer() { return data_; }
    const std::vector<T>& buffer() const { return data_; }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    T& at2(std::size_t i, std::size_t j) { return data_[i * dims_[1] + j]; }
    const T& at2(std::size_t i, std::size_t j) const { return data_[i * dims_[1] + j]; }

    T& at3(std::size_t c, std::size_t i, std::size_t j) {
        return data_[(c * dims_[1] + i) * dims_[2] + j];
    }
    const T& at3(std::size_t c, std::size_t i, std::size_t j) const {
        return data_[(c * dims_[1] + i) * dims_[2] + j];
    }

    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    bool same_dims(const Tensor& o) const { return dims_ == o.dims_; }

    Tensor reshaped(std::vector<std::size_t> dims) const {
        Tensor out = *this;
        if (checked_numel(dims) != numel())
            throw ShapeError("reshape: element count mismatch");
        out.dims_ = std::move(dims);
        return out;
    }

    bool all_finite() const {
        for (T v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> out(dims_);
        for (std::size_t i = 0; i < data_.size(); ++i) out[i] = static_cast<U>(data_[i]);
        return out;
    }

private:
    static std::size_t checked_numel(const std::vector<std::size_t>& dims) {
        std::size_t n = 1;
        for (std::size_t d : dims) n *= d;
        return n;
    }

    std::vector<std::size_t> dims_;
    std::vector<T> data_;
};

template <typename T>
inline void require_same_dims(const Tensor<T>& a, const Tensor<T>& b, const char* what) {
    if (!a.same_dims(b)) {
        std::ostringstream ss;
        ss << what << ": shape mismatch";
        throw ShapeError(ss.str());
    }
}

// ---- elementwise helpers ----

template <typename T, typename F>
Tensor<T> map(const Tensor<T>& a, F&& f) {
    Tensor<T> out(a.dims());
    for (std::size_t i = 0; i < a.numel(); ++i) out[i] = f(a[i]);
    return out;
}

template <typename T, typename F>
Tensor<T> zip(const Tensor<T>& a, const Tensor<T>& b, F&& f) {
    require_same_dims(a, b, "zip");
    Tensor<T> out(a.dims());
    for (std::size_t i = 0; i < a.numel(); ++i) out[i] = f(a[i], b[i]);
    return out;
}

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
    return zip(a, b, [](T x, T y) { return x + y; });
}

template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b) {
    return zip(a, b, [](T x, T y) { return x - y; });
}

template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b) {
    return zip(a, b, [](T x, T y) { return x * y; });
}

template <typename T>
Tensor<T> scale(const Tensor<T>& a, T c) {
    return map(a, [c](T x) { return c * x; });
}

template <typename T>
T sum(const Tensor<T>& a) {
    T s = T(0);
    for (std::size_t i = 0; i < a.numel(); ++i) s += a[i];
    return s;
}

template <typename T>
T mean(const Tensor<T>& a) {
    if (a.numel() == 0) throw UsageError("mean of empty tensor");
    return sum(a) / static_cast<T>(a.numel());
}

template <typename T>
T min_value(const Tensor<T>& a) {
    return *std::min_element(a.begin(), a.end());
}

template <typename T>
T max_value(const Tensor<T>& a) {
    return *std::max_element(a.begin(), a.end());
}

template <typename T>
Tensor<T> clamp01(const Tensor<T>& a) {
    return map(a, [](T x) { return std::clamp(x, T(0), T(1)); });
}

// ---- matmul ----

// Row-major matrix product [M x K] * [K x N] -> [M x N].
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b) {
    if (a.rank() != 2 || b.rank() != 2) throw ShapeError("matmul: operands must be rank 2");
    if (a.dim(1) != b.dim(0)) throw ShapeError("matmul: inner dimensions disagree");
    const std::size_t m = a.dim(0), k = a.dim(1), n = b.dim(1);
    Tensor<T> out({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        T* orow = out.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const T aip = a[i * k + p];
            const T* brow = b.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) orow[j] += aip * brow[j];
        }
    }
    return out;
}

// ---- 3x3 same-padding cross-correlation ----

// x: [C, H, W], kernels: [Co, C, 3, 3], bias: [Co] -> [Co, H, W].
// Zero padding of one pixel; no kernel flip.
template <typename T>
Tensor<T> conv2d_same(const Tensor<T>& x, const Tensor<T>& kernels, const Tensor<T>& bias) {
    if (x.rank() != 3) throw ShapeError("conv2d_same: input must be [C,H,W]");
    if (kernels.rank() != 4 || kernels.dim(2) != 3 || kernels.dim(3) != 3)
        throw ShapeError("conv2d_same: kernels must be [Co,C,3,3]");
    if (kernels.dim(1) != x.dim(0)) throw ShapeError("conv2d_same: channel mismatch");
    if (bias.rank() != 1 || bias.dim(0) != kernels.dim(0))
        throw ShapeError("conv2d_same: bias size mismatch");

    const std::size_t ci = x.dim(0), h = x.dim(1), w = x.dim(2), co = kernels.dim(0);
    Tensor<T> out({co, h, w});
    for (std::size_t oc = 0; oc < co; ++oc) {
        T* oplane = out.data() + oc * h * w;
        std::fill(oplane, oplane + h * w, bias[oc]);
        for (std::size_t ic = 0; ic < ci; ++ic) {
            const T* iplane = x.data() + ic * h * w;
            const T* kk = kernels.data() + (oc * ci + ic) * 9;
            for (int ky = 0; ky < 3; ++ky) {
                const int dy = ky - 1;
                for (int kx = 0; kx < 3; ++kx) {
                    const int dx = kx - 1;
                    const T kv = kk[ky * 3 + kx];
                    if (kv == T(0)) continue;
                    const std::size_t y0 = dy < 0 ? 1 : 0;
                    const std::size_t y1 = dy > 0 ? h - 1 : h;
                    const std::size_t x0 = dx < 0 ? 1 : 0;
                    const std::size_t x1 = dx > 0 ? w - 1 : w;
                    for (std::size_t y = y0; y < y1; ++y) {
                        T* orow = oplane + y * w + x0;
                        const T* irow = iplane + (y + dy) * w + x0 + dx;
                        for (std::size_t xx = 0; xx < x1 - x0; ++xx) orow[xx] += kv * irow[xx];
                    }
                }
            }
        }
    }
    return out;
}

// ---- random fills ----

template <typename T>
Tensor<T> gaussian_sample(RngStream& rng, std::vector<std::size_t> dims) {
    if (dims.empty()) throw UsageError("gaussian_sample: dims must be nonempty");
    Tensor<T> out(std::move(dims));
    for (std::size_t i = 0; i < out.numel(); ++i) out[i] = static_cast<T>(rng.next_gaussian());
    return out;
}

template <typename T>
Tensor<T> uniform_sample(RngStream& rng, std::vector<std::size_t> dims) {
    if (dims.empty()) throw UsageError("uniform_sample: dims must be nonempty");
    Tensor<T> out(std::move(dims));
    for (std::size_t i = 0; i < out.numel(); ++i) out[i] = static_cast<T>(rng.next_uniform());
    return out;
}

} // namespace ddm
