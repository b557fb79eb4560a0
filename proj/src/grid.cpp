#include "nls/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nls {

OffsetSet::OffsetSet(std::vector<Offset> offs) : offsets(std::move(offs)) {
  for (size_t i = 0; i < offsets.size(); ++i)
    for (size_t j = i + 1; j < offsets.size(); ++j)
      if (offsets[i] == offsets[j]) throw std::invalid_argument("duplicate offset");
}

OffsetSet OffsetSet::square(int radius, bool exclude_zero) {
  if (radius < 0) throw std::invalid_argument("negative offset radius");
  std::vector<Offset> offs;
  offs.reserve(static_cast<size_t>(2 * radius + 1) * (2 * radius + 1));
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx) {
      if (exclude_zero && dx == 0 && dy == 0) continue;
      offs.push_back({dx, dy});
    }
  return OffsetSet(std::move(offs));
}

bool OffsetSet::contains(Offset q) const {
  return std::find(offsets.begin(), offsets.end(), q) != offsets.end();
}

OffsetSet OffsetSet::reflected() const {
  std::vector<Offset> offs;
  offs.reserve(offsets.size());
  for (const Offset& q : offsets) offs.push_back({-q.dx, -q.dy});
  return OffsetSet(std::move(offs));
}

bool OffsetSet::is_full_rectangle(int& x0, int& x1, int& y0, int& y1) const {
  if (offsets.empty()) return false;
  x0 = x1 = offsets[0].dx;
  y0 = y1 = offsets[0].dy;
  for (const Offset& q : offsets) {
    x0 = std::min(x0, q.dx);
    x1 = std::max(x1, q.dx);
    y0 = std::min(y0, q.dy);
    y1 = std::max(y1, q.dy);
  }
  size_t expect = static_cast<size_t>(x1 - x0 + 1) * static_cast<size_t>(y1 - y0 + 1);
  return offsets.size() == expect;  // ctor rejected duplicates
}

ComplexImage shift_diff(const ComplexImage& f, Offset q) {
  ComplexImage out(f.width, f.height);
  for (int y = 0; y < f.height; ++y) {
    int ys = wrap(y + q.dy, f.height);
    for (int x = 0; x < f.width; ++x)
      out.at(x, y) = f.at(x, y) - f.at(wrap(x + q.dx, f.width), ys);
  }
  return out;
}

ComplexImage adjoint_shift_diff(const ComplexImage& h, Offset q) {
  ComplexImage out(h.width, h.height);
  for (int y = 0; y < h.height; ++y) {
    int ys = wrap(y - q.dy, h.height);
    for (int x = 0; x < h.width; ++x)
      out.at(x, y) = h.at(x, y) - h.at(wrap(x - q.dx, h.width), ys);
  }
  return out;
}

ComplexImage circular_shift(const ComplexImage& f, Offset by) {
  ComplexImage out(f.width, f.height);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < f.width; ++x)
      out.at(x, y) = f.at(wrap(x + by.dx, f.width), wrap(y + by.dy, f.height));
  return out;
}

namespace {

// 1-D circular kernel sum along rows: out(x,y) = sum_{d=a..b} g(x-d, y).
void row_kernel_sum(const RealImage& g, int a, int b, RealImage& out) {
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      double s = 0.0;
      for (int d = a; d <= b; ++d) s += g.at(wrap(x - d, g.width), y);
      out.at(x, y) = s;
    }
}

void col_kernel_sum(const RealImage& g, int a, int b, RealImage& out) {
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      double s = 0.0;
      for (int d = a; d <= b; ++d) s += g.at(x, wrap(y - d, g.height));
      out.at(x, y) = s;
    }
}

}  // namespace

RealImage box_sum_filter_direct(const RealImage& g, const OffsetSet& B) {
  RealImage out(g.width, g.height);
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      double s = 0.0;
      for (const Offset& p : B.offsets)
        s += g.at(wrap(x - p.dx, g.width), wrap(y - p.dy, g.height));
      out.at(x, y) = s;
    }
  return out;
}

RealImage box_sum_filter(const RealImage& g, const OffsetSet& B) {
  int x0, x1, y0, y1;
  if (!B.is_full_rectangle(x0, x1, y0, y1)) return box_sum_filter_direct(g, B);
  RealImage rows(g.width, g.height), out(g.width, g.height);
  row_kernel_sum(g, x0, x1, rows);
  col_kernel_sum(rows, y0, y1, out);
  return out;
}

namespace {

// FFTW plans are not thread-safe to create; keep a small locked cache with
// owned buffers so results never depend on caller alignment.
class FftCache {
 public:
  void transform(const ComplexImage& in, ComplexImage& out, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    Entry& e = entry(in.width, in.height, sign);
    std::copy(in.data.begin(), in.data.end(), reinterpret_cast<cplx*>(e.in));
    fftw_execute(e.plan);
    std::copy(reinterpret_cast<cplx*>(e.out), reinterpret_cast<cplx*>(e.out) + in.size(),
              out.data.begin());
  }

 private:
  struct Entry {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
  };

  Entry& entry(int w, int h, int sign) {
    auto key = std::tuple<int, int, int>(w, h, sign);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Entry e;
    size_t n = static_cast<size_t>(w) * h;
    e.in = fftw_alloc_complex(n);
    e.out = fftw_alloc_complex(n);
    e.plan = fftw_plan_dft_2d(h, w, e.in, e.out, sign, FFTW_ESTIMATE);
    if (!e.plan) throw std::runtime_error("fftw plan creation failed");
    return cache_.emplace(key, e).first->second;
  }

  std::mutex mu_;
  std::map<std::tuple<int, int, int>, Entry> cache_;
};

FftCache& fft_cache() {
  static FftCache cache;
  return cache;
}

}  // namespace

ComplexImage dft(const ComplexImage& f) {
  ComplexImage out(f.width, f.height);
  fft_cache().transform(f, out, FFTW_FORWARD);
  return out;
}

ComplexImage idft(const ComplexImage& F) {
  ComplexImage out(F.width, F.height);
  fft_cache().transform(F, out, FFTW_BACKWARD);
  double scale = 1.0 / (static_cast<double>(F.width) * F.height);
  for (cplx& v : out.data) v *= scale;
  return out;
}

ComplexImage diff_multiplier(Offset q, int width, int height) {
  ComplexImage out(width, height);
  for (int wy = 0; wy < height; ++wy)
    for (int wx = 0; wx < width; ++wx) {
      double phase = 2.0 * std::numbers::pi *
                     (static_cast<double>(wx) * q.dx / width + static_cast<double>(wy) * q.dy / height);
      out.at(wx, wy) = 1.0 - std::polar(1.0, phase);
    }
  return out;
}

RealImage diff_multiplier_sq_sum(const OffsetSet& neighborhood, int width, int height) {
  RealImage out(width, height, 0.0);
  for (const Offset& q : neighborhood.offsets) {
    for (int wy = 0; wy < height; ++wy)
      for (int wx = 0; wx < width; ++wx) {
        double half = std::numbers::pi * (static_cast<double>(wx) * q.dx / width +
                                          static_cast<double>(wy) * q.dy / height);
        double s = std::sin(half);
        out.at(wx, wy) += 4.0 * s * s;
      }
  }
  return out;
}

}  // namespace nls
