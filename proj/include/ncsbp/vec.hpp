#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ncsbp {

// Upper bound on conserved variables plus auxiliary coefficient fields
// (2D Sainte-Marie needs 5 + 1).
inline constexpr int kMaxVars = 8;

// Fixed-capacity state vector. Entries [0, n) hold the evolved variables of a
// system and [n, n + aux) hold nodal coefficient fields (a, b, phi); unused
// trailing entries stay zero so the arithmetic below can ignore the split.
struct Vec {
  std::array<double, kMaxVars> v{};

  constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  constexpr Vec& operator+=(const Vec& o) {
    for (int i = 0; i < kMaxVars; ++i) (*this)[i] += o[i];
    return *this;
  }
  constexpr Vec& operator-=(const Vec& o) {
    for (int i = 0; i < kMaxVars; ++i) (*this)[i] -= o[i];
    return *this;
  }
  constexpr Vec& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }
  friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend constexpr Vec operator*(Vec a, double s) { return a *= s; }
  friend constexpr Vec operator*(double s, Vec a) { return a *= s; }
  friend constexpr Vec operator-(Vec a) { return a *= -1.0; }
  friend constexpr bool operator==(const Vec&, const Vec&) = default;
};

// Dot product over the first n entries.
constexpr double dot(const Vec& a, const Vec& b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

inline double max_abs(const Vec& a, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i]));
  return m;
}

inline double norm2(const Vec& a, int n) { return std::sqrt(dot(a, a, n)); }

// Physical direction vector used to contract directional fluxes; 1D code uses
// {nx, 0}.
using Normal = std::array<double, 2>;

inline double length(const Normal& n) { return std::hypot(n[0], n[1]); }

}  // namespace ncsbp
