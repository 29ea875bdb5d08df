#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace ncsq::oracle {

using Mat4L = Eigen::Matrix<long double, 4, 4>;
using Vec4L = Eigen::Matrix<long double, 4, 1>;

inline long double levi(int k, int j) {
  return k == j ? 0.0L : (k < j ? 1.0L : -1.0L);
}

// Generator A of z' = A z read off the component form
//   Pi_k' = (-1)^k (2 a^2 sum_j eps_kj Q_j + G Pi_k)
//   Q_k'  = -(-1)^k (2 b^2 sum_j eps_kj Pi_j + G Q_k)
// with k = 1, 2 and index layout (Q1, Q2, Pi1, Pi2).
inline Mat4L generator(long double alpha_sq, long double beta_sq,
                       long double gamma) {
  Mat4L a = Mat4L::Zero();
  for (int k = 0; k < 2; ++k) {
    const long double sign = (k == 0) ? -1.0L : 1.0L;  // (-1)^(k+1)
    for (int j = 0; j < 2; ++j) {
      a(2 + k, j) += sign * 2.0L * alpha_sq * levi(k, j);
      a(k, 2 + j) += -sign * 2.0L * beta_sq * levi(k, j);
    }
    a(2 + k, 2 + k) += sign * gamma;
    a(k, k) += -sign * gamma;
  }
  return a;
}

// exp(A t) by scaling and squaring a truncated Taylor series.
inline Mat4L expm(const Mat4L& a, long double t) {
  Mat4L x = a * t;
  const long double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0L, squarings) > 0.125L) ++squarings;
  x /= std::pow(2.0L, squarings);
  Mat4L result = Mat4L::Identity();
  Mat4L term = Mat4L::Identity();
  for (int n = 1; n < 30; ++n) {
    term = term * x / static_cast<long double>(n);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

struct Derived {
  long double alpha_sq, beta_sq, gamma, eps_small, big_omega_root, two_ab;
};

inline Derived derived(long double theta, long double eta, long double m,
                       long double w, long double hbar, long double lambda,
                       long double mu) {
  Derived d;
  d.alpha_sq = lambda * lambda * m * w * w / 2 - eta * eta / (8 * m * mu * mu * hbar * hbar);
  d.beta_sq = mu * mu / (2 * m) - m * w * w * theta * theta / (8 * lambda * lambda * hbar * hbar);
  d.gamma = theta * m * w * w / (2 * hbar) - eta / (2 * m * hbar);
  d.eps_small = (m * w * theta - eta / (m * w)) / (2 * hbar);
  const long double shift = 2 * lambda * mu - 1;
  d.big_omega_root = w * std::sqrt(shift * shift - d.eps_small * d.eps_small);
  d.two_ab = 2 * std::sqrt(d.alpha_sq * d.beta_sq);
  return d;
}

// Composite midpoint rule on [lo, hi]^4.
inline double integrate_4d(const std::function<double(const Eigen::Vector4d&)>& f,
                           double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double sum = 0.0;
  Eigen::Vector4d z;
  for (int a = 0; a < n; ++a) {
    z[0] = lo + (a + 0.5) * h;
    for (int b = 0; b < n; ++b) {
      z[1] = lo + (b + 0.5) * h;
      for (int c = 0; c < n; ++c) {
        z[2] = lo + (c + 0.5) * h;
        for (int d = 0; d < n; ++d) {
          z[3] = lo + (d + 0.5) * h;
          sum += f(z);
        }
      }
    }
  }
  return sum * h * h * h * h;
}

// Least-squares slope of log(err) vs log(h).
inline double fitted_order(const std::vector<double>& h,
                           const std::vector<double>& err) {
  double mx = 0, my = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    mx += std::log(h[i]);
    my += std::log(err[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    sxy += (std::log(h[i]) - mx) * (std::log(err[i]) - my);
    sxx += (std::log(h[i]) - mx) * (std::log(h[i]) - mx);
  }
  return sxy / sxx;
}

}  // namespace ncsq::oracle
