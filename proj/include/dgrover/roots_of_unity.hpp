#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace dgrover {

using Complex = std::complex<double>;

// Reduce k into {0, ..., n-1}.
inline int mod(long long k, int n) {
  const long long r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Table of the n-th roots of unity omega^k = exp(2 pi i k / n).
// Powers are looked up by exact integer reduction of the exponent, so
// omega^{hk} carries no accumulated phase error.
class RootsOfUnity {
public:
  explicit RootsOfUnity(int n) : n_(n), table_(static_cast<std::size_t>(n)) {
    for (int k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * k / n;
      table_[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
    }
    // Exact values where they are representable.
    table_[0] = {1.0, 0.0};
    if (n % 2 == 0) table_[static_cast<std::size_t>(n / 2)] = {-1.0, 0.0};
    if (n % 4 == 0) {
      table_[static_cast<std::size_t>(n / 4)] = {0.0, 1.0};
      table_[static_cast<std::size_t>(3 * n / 4)] = {0.0, -1.0};
    }
  }

  int order() const noexcept { return n_; }

  Complex pow(long long k) const { return table_[static_cast<std::size_t>(mod(k, n_))]; }

private:
  int n_;
  std::vector<Complex> table_;
};

// eta_h(C) = sum_{k in C*} omega_n^{hk}. The empty sum is 0 and eta_0 = |C*|.
// Any integer h is accepted; callers enforce the theorem ranges.
inline Complex eta(std::span<const int> c_star, long long h, const RootsOfUnity &w) {
  Complex sum{0.0, 0.0};
  for (int k : c_star) sum += w.pow(h * k);
  return sum;
}

inline Complex eta(std::span<const int> c_star, long long h, int n) {
  return eta(c_star, h, RootsOfUnity(n));
}

} // namespace dgrover
