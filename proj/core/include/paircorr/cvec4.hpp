#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace paircorr {

// Four complex numbers with vector-space arithmetic, so that spinor columns
// can be integrated and transformed as one value.
struct CVec4 {
  std::array<std::complex<double>, 4> c{};

  std::complex<double> &operator[](std::size_t i) noexcept { return c[i]; }
  const std::complex<double> &operator[](std::size_t i) const noexcept { return c[i]; }

  CVec4 &operator+=(const CVec4 &o) noexcept {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  CVec4 &operator-=(const CVec4 &o) noexcept {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  CVec4 &operator*=(std::complex<double> s) noexcept {
    for (auto &x : c) x *= s;
    return *this;
  }
  friend CVec4 operator+(CVec4 a, const CVec4 &b) noexcept { return a += b; }
  friend CVec4 operator-(CVec4 a, const CVec4 &b) noexcept { return a -= b; }
  friend CVec4 operator*(CVec4 a, std::complex<double> s) noexcept { return a *= s; }
  friend CVec4 operator*(std::complex<double> s, CVec4 a) noexcept { return a *= s; }
  friend CVec4 operator*(CVec4 a, double s) noexcept { return a *= s; }
  friend CVec4 operator*(double s, CVec4 a) noexcept { return a *= s; }
  friend bool operator==(const CVec4 &, const CVec4 &) = default;

  // Sum of squared moduli.
  double norm2() const noexcept {
    double s = 0.0;
    for (const auto &x : c) s += std::norm(x);
    return s;
  }
};

// Euclidean magnitude; found by ADL from the quadrature code.
inline double abs(const CVec4 &v) noexcept { return std::sqrt(v.norm2()); }

} // namespace paircorr
