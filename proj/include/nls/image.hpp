#pragma once

#include <complex>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nls {

using cplx = std::complex<double>;

inline int wrap(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

/// 2-D complex sample grid, row-major (index = y*width + x), circular boundary.
struct ComplexImage {
  int width = 0;
  int height = 0;
  std::vector<cplx> data;

  ComplexImage() = default;
  ComplexImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("image dims must be positive");
  }

  size_t size() const { return data.size(); }
  cplx& operator[](size_t i) { return data[i]; }
  const cplx& operator[](size_t i) const { return data[i]; }

  cplx& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  const cplx& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

  /// Value at (x, y) with circular wraparound.
  const cplx& at_wrapped(int x, int y) const {
    return data[static_cast<size_t>(wrap(y, height)) * width + wrap(x, width)];
  }

  bool same_dims(const ComplexImage& o) const { return width == o.width && height == o.height; }

  bool all_finite() const {
    for (const cplx& v : data)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

/// 2-D real grid with the same layout conventions as ComplexImage.
struct RealImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  RealImage() = default;
  RealImage(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("image dims must be positive");
  }

  size_t size() const { return data.size(); }
  double& operator[](size_t i) { return data[i]; }
  const double& operator[](size_t i) const { return data[i]; }

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  const double& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

  const double& at_wrapped(int x, int y) const {
    return data[static_cast<size_t>(wrap(y, height)) * width + wrap(x, width)];
  }

  bool same_dims(const RealImage& o) const { return width == o.width && height == o.height; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline ComplexImage to_complex(const RealImage& r) {
  ComplexImage out(r.width, r.height);
  for (size_t i = 0; i < r.size(); ++i) out[i] = cplx(r[i], 0.0);
  return out;
}

inline RealImage magnitude(const ComplexImage& f) {
  RealImage out(f.width, f.height);
  for (size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

inline RealImage squared_magnitude(const ComplexImage& f) {
  RealImage out(f.width, f.height);
  for (size_t i = 0; i < f.size(); ++i) out[i] = std::norm(f[i]);
  return out;
}

inline double frobenius_norm(const ComplexImage& f) {
  double s = 0.0;
  for (const cplx& v : f.data) s += std::norm(v);
  return std::sqrt(s);
}

inline double frobenius_dist(const ComplexImage& a, const ComplexImage& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace nls
