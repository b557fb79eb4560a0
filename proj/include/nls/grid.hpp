#pragma once

#include <vector>

#include "nls/image.hpp"

namespace nls {

struct Offset {
  int dx = 0;
  int dy = 0;
  bool operator==(const Offset&) const = default;
};

/// Ordered set of integer displacements (patch shape or search neighborhood).
struct OffsetSet {
  std::vector<Offset> offsets;

  OffsetSet() = default;
  explicit OffsetSet(std::vector<Offset> offs);

  /// [-r..r]^2, optionally without the zero offset (search neighborhoods
  /// never compare a patch with itself).
  static OffsetSet square(int radius, bool exclude_zero = false);

  size_t size() const { return offsets.size(); }
  bool contains(Offset q) const;
  OffsetSet reflected() const;  // {-q : q in set}

  /// True when the offsets fill an axis-aligned rectangle; the box filter
  /// then runs as two 1-D passes.
  bool is_full_rectangle(int& x0, int& x1, int& y0, int& y1) const;
};

struct PatchGeometry {
  OffsetSet patch;         // offsets defining a patch
  OffsetSet neighborhood;  // offsets at which patches are compared

  static PatchGeometry square(int patch_radius, int neighborhood_radius) {
    return {OffsetSet::square(patch_radius), OffsetSet::square(neighborhood_radius, true)};
  }
};

/// out(x) = f(x) - f(x + q), circular boundary.
ComplexImage shift_diff(const ComplexImage& f, Offset q);

/// Adjoint of shift_diff: out(x) = h(x) - h(x - q).
ComplexImage adjoint_shift_diff(const ComplexImage& h, Offset q);

/// Circular shift: out(x) = f(x + by).
ComplexImage circular_shift(const ComplexImage& f, Offset by);

/// out(x) = sum_{p in B} g(x - p). Unnormalized sum, not a mean; separable
/// two-pass evaluation when B is a full rectangle, direct summation otherwise.
RealImage box_sum_filter(const RealImage& g, const OffsetSet& B);

/// Forced direct-summation path (used to cross-check the separable one).
RealImage box_sum_filter_direct(const RealImage& g, const OffsetSet& B);

/// Unnormalized forward DFT: F(w) = sum_x f(x) e^{-j 2 pi <w,x>/dims}.
ComplexImage dft(const ComplexImage& f);

/// Inverse DFT carrying the 1/(width*height) factor; idft(dft(f)) == f.
ComplexImage idft(const ComplexImage& F);

/// Fourier multiplier of shift_diff: d_q(w) = 1 - e^{+j 2 pi (wx qx/W + wy qy/H)},
/// so that dft(shift_diff(f,q)) = d_q . dft(f).
ComplexImage diff_multiplier(Offset q, int width, int height);

/// sum_{q in N} |d_q|^2, precomputed once per geometry.
RealImage diff_multiplier_sq_sum(const OffsetSet& neighborhood, int width, int height);

}  // namespace nls
