#pragma once

// Closed-form spectrum of Cay(D_n, S): eigenvalues of the adjacency matrix A
// and of the discriminant P = A/d, grouped by irreducible representation,
// with the spectral projector of every eigenspace.
//
// One-dimensional characters give
//   psi1: d,  psi2: s1 - s2,  psi3: d10 - d11 + d20 - d21,  psi4: d10 - d11 + d21 - d20.
// Each rho_h contributes the 2x2 block M_h = [[eta(S1), eta(S2^-1)], [eta(S2), eta(S1)]]
// twice, so eigenvalues eta_h(S1) +- |eta_h(S2)| with multiplicity 2 each,
// collapsing to a single multiplicity-4 eigenvalue when eta_h(S2) = 0.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dgrover/dihedral.hpp"
#include "dgrover/representation.hpp"
#include "dgrover/roots_of_unity.hpp"

namespace dgrover {

inline constexpr double kDegenerateBlockTolerance = kEtaZeroTolerance;

enum class EigenKind { Psi1, Psi2, Psi3, Psi4, RhoDegenerate, RhoPlus, RhoMinus };

struct EigenLabel {
  EigenKind kind = EigenKind::Psi1;
  int h = 0;

  std::string to_string() const {
    switch (kind) {
    case EigenKind::Psi1: return "psi1";
    case EigenKind::Psi2: return "psi2";
    case EigenKind::Psi3: return "psi3";
    case EigenKind::Psi4: return "psi4";
    case EigenKind::RhoDegenerate: return "rho" + std::to_string(h);
    case EigenKind::RhoPlus: return "rho" + std::to_string(h) + "+";
    case EigenKind::RhoMinus: return "rho" + std::to_string(h) + "-";
    }
    return "?";
  }

  friend bool operator==(const EigenLabel &, const EigenLabel &) = default;
};

struct EigenItem {
  EigenLabel label;
  double adjacency_eigenvalue = 0.0;
  double discriminant_eigenvalue = 0.0; // clamped to [-1, 1]
  int multiplicity = 0;
  Eigen::MatrixXd projector; // 2n x 2n, real symmetric idempotent
};

struct EllH {
  int h = 0;
  Complex value;
};

// Eigenvalue data of one rho_h block, without projectors.
struct TwoDimBlock {
  int h = 0;
  Complex eta_s1;
  Complex eta_s2;
  bool degenerate = false;
  double lambda_plus = 0.0;  // eta_h(S1) + |eta_h(S2)|
  double lambda_minus = 0.0; // eta_h(S1) - |eta_h(S2)|; equals lambda_plus when degenerate
  Complex ell{1.0, 0.0};     // unset (1) when degenerate
};

struct AnalyticEigenvalues {
  int n = 0;
  int d = 0;
  std::vector<double> one_dim; // adjacency eigenvalues for psi1, psi2[, psi3, psi4]
  std::vector<TwoDimBlock> blocks;

  double one_dim_mu(int index) const { return clamp_unit(one_dim.at(static_cast<std::size_t>(index)) / d); }
  double mu_plus(const TwoDimBlock &b) const { return clamp_unit(b.lambda_plus / d); }
  double mu_minus(const TwoDimBlock &b) const { return clamp_unit(b.lambda_minus / d); }

  static double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }
};

inline Eigen::MatrixXd adjacency_matrix(const ConnectionSet &s) {
  const int n = s.n();
  const int size = 2 * n;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  for (int u = 0; u < size; ++u) {
    const DihedralElement x = label_of(u, n);
    for (int v = 0; v < size; ++v) {
      if (s.contains(multiply(x, inverse(label_of(v, n), n), n))) a(u, v) = 1.0;
    }
  }
  return a;
}

inline Eigen::MatrixXd discriminant_from_adjacency(const ConnectionSet &s) {
  return adjacency_matrix(s) / static_cast<double>(s.d());
}

// l_h: the square root of eta_h(S2^-1)/eta_h(S2) that makes (l_h, 1) the
// M_h-eigenvector for eta_h(S1) + |eta_h(S2)|, namely conj(eta)/|eta|.
inline Complex ell_from_eta(Complex eta_s2) { return std::conj(eta_s2) / std::abs(eta_s2); }

inline void require_block_index(int h, int n) {
  if (h < 1 || h > two_dim_count(n))
    throw Error(ErrorCode::IndexOutOfRange,
                "h=" + std::to_string(h) + " outside 1.." + std::to_string(two_dim_count(n)));
}

inline TwoDimBlock two_dim_block(const ConnectionSet &s, int h, const RootsOfUnity &w) {
  require_block_index(h, s.n());
  TwoDimBlock b;
  b.h = h;
  b.eta_s1 = eta(s.s1_star(), h, w);
  b.eta_s2 = eta(s.s2_star(), h, w);
  const double base = b.eta_s1.real(); // S1 = S1^-1 makes eta_h(S1) real
  const double spread = std::abs(b.eta_s2);
  b.degenerate = spread <= kDegenerateBlockTolerance;
  if (b.degenerate) {
    b.lambda_plus = b.lambda_minus = base;
  } else {
    b.lambda_plus = base + spread;
    b.lambda_minus = base - spread;
    b.ell = ell_from_eta(b.eta_s2);
  }
  return b;
}

inline AnalyticEigenvalues analytic_eigenvalues(const ConnectionSet &s) {
  AnalyticEigenvalues ev;
  ev.n = s.n();
  ev.d = s.d();
  ev.one_dim.push_back(s.d());
  ev.one_dim.push_back(s.s1() - s.s2());
  if (s.n() % 2 == 0) {
    ev.one_dim.push_back(s.d10() - s.d11() + s.d20() - s.d21());
    ev.one_dim.push_back(s.d10() - s.d11() + s.d21() - s.d20());
  }
  const RootsOfUnity w(s.n());
  for (int h = 1; h <= two_dim_count(s.n()); ++h) ev.blocks.push_back(two_dim_block(s, h, w));
  return ev;
}

inline EllH ell_h(const ConnectionSet &s, int h) {
  const TwoDimBlock b = two_dim_block(s, h, RootsOfUnity(s.n()));
  if (b.degenerate)
    throw Error(ErrorCode::DegenerateBlock, "eta_h(S2) vanishes at h=" + std::to_string(h));
  return {h, b.ell};
}

// The four normalized eigenvectors spanning the rho_h isotypic component.
// Without ell: u_h^(1..4) (valid when eta_h(S2) = 0). With ell: v_h^(1..4),
// where v^(1), v^(2) belong to eta(S1) + |eta(S2)| and v^(3), v^(4) to the
// other eigenvalue for the branch returned by ell_h.
inline std::array<Eigen::VectorXcd, 4> rho_block_vectors(int n, int h, std::optional<Complex> ell,
                                                         const RootsOfUnity &w) {
  const int size = 2 * n;
  std::array<Eigen::VectorXcd, 4> v;
  for (auto &x : v) x = Eigen::VectorXcd::Zero(size);
  if (!ell) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
      const Complex up = w.pow(static_cast<long long>(h) * k) * scale;
      const Complex down = std::conj(up);
      v[0](k) = up;
      v[1](n + k) = up;
      v[2](n + k) = down;
      v[3](k) = down;
    }
    return v;
  }
  const Complex l = *ell;
  const Complex lbar = std::conj(l);
  const double scale = 1.0 / std::sqrt(2.0 * n);
  for (int k = 0; k < n; ++k) {
    const Complex up = w.pow(static_cast<long long>(h) * k) * scale;
    const Complex down = std::conj(up);
    v[0](k) = lbar * up;
    v[0](n + k) = up;
    v[1](k) = down;
    v[1](n + k) = lbar * down;
    v[2](k) = -up;
    v[2](n + k) = l * up;
    v[3](k) = l * down;
    v[3](n + k) = -down;
  }
  return v;
}

namespace detail {

inline Eigen::MatrixXd real_projector(std::span<const Eigen::VectorXcd> vectors) {
  const auto size = vectors.front().size();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(size, size);
  for (const auto &x : vectors) sum += x * x.adjoint();
  // Sums over a full conjugate-closed set of vectors are real.
  if (sum.imag().cwiseAbs().maxCoeff() > 1e-10)
    throw Error(ErrorCode::InternalInconsistency, "rho_h projector is not real");
  return sum.real();
}

inline EigenItem make_item(EigenLabel label, double lambda, int d, int multiplicity, Eigen::MatrixXd projector) {
  EigenItem item;
  item.label = label;
  item.adjacency_eigenvalue = lambda;
  item.discriminant_eigenvalue = AnalyticEigenvalues::clamp_unit(lambda / d);
  item.multiplicity = multiplicity;
  item.projector = std::move(projector);
  return item;
}

} // namespace detail

inline std::vector<EigenItem> one_dim_eigenpairs(const ConnectionSet &s) {
  const int n = s.n();
  const int size = 2 * n;
  const AnalyticEigenvalues ev = analytic_eigenvalues(s);

  auto sign_vector = [&](auto sign_of) {
    Eigen::VectorXd v(size);
    for (int u = 0; u < size; ++u) v(u) = sign_of(u);
    return v;
  };
  auto alt = [](int i) { return i % 2 == 0 ? 1.0 : -1.0; };

  std::vector<Eigen::VectorXd> vectors{
      sign_vector([](int) { return 1.0; }),
      sign_vector([&](int u) { return u < n ? 1.0 : -1.0; }),
  };
  if (n % 2 == 0) {
    vectors.push_back(sign_vector([&](int u) { return alt(u % n); }));
    vectors.push_back(sign_vector([&](int u) { return u < n ? alt(u) : -alt(u - n); }));
  }

  constexpr std::array kinds{EigenKind::Psi1, EigenKind::Psi2, EigenKind::Psi3, EigenKind::Psi4};
  std::vector<EigenItem> items;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Eigen::MatrixXd projector = vectors[i] * vectors[i].transpose() / static_cast<double>(size);
    items.push_back(detail::make_item({kinds[i], 0}, ev.one_dim[i], s.d(), 1, std::move(projector)));
  }
  return items;
}

inline std::vector<EigenItem> two_dim_eigenpairs(const ConnectionSet &s, int h) {
  const RootsOfUnity w(s.n());
  const TwoDimBlock b = two_dim_block(s, h, w);
  std::vector<EigenItem> items;
  if (b.degenerate) {
    const auto vectors = rho_block_vectors(s.n(), h, std::nullopt, w);
    items.push_back(detail::make_item({EigenKind::RhoDegenerate, h}, b.lambda_plus, s.d(), 4,
                                      detail::real_projector(vectors)));
    return items;
  }
  const auto vectors = rho_block_vectors(s.n(), h, b.ell, w);
  const std::span<const Eigen::VectorXcd> all(vectors);
  items.push_back(detail::make_item({EigenKind::RhoPlus, h}, b.lambda_plus, s.d(), 2,
                                    detail::real_projector(all.subspan(0, 2))));
  items.push_back(detail::make_item({EigenKind::RhoMinus, h}, b.lambda_minus, s.d(), 2,
                                    detail::real_projector(all.subspan(2, 2))));
  return items;
}

// Items in order psi1, psi2[, psi3, psi4], then rho_1 ... rho_{floor((n-1)/2)}.
inline std::vector<EigenItem> full_spectrum(const ConnectionSet &s) {
  std::vector<EigenItem> items = one_dim_eigenpairs(s);
  for (int h = 1; h <= two_dim_count(s.n()); ++h) {
    for (auto &item : two_dim_eigenpairs(s, h)) items.push_back(std::move(item));
  }
  return items;
}

} // namespace dgrover
