#pragma once

// Perfect state transfer between vertex-type states. PST from u to v at time
// tau holds iff T_tau(P) e_u = e_v. Detected three ways: a scan of T_tau(P)
// by the matrix recurrence, the permutation structure of T_tau(P) at a hit,
// and a classifier that only evaluates T_tau at the analytic eigenvalues.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dgrover/chebyshev.hpp"
#include "dgrover/dihedral.hpp"
#include "dgrover/grover_walk.hpp"
#include "dgrover/spectrum.hpp"

namespace dgrover {

inline constexpr double kPstTolerance = 1e-9;
inline constexpr double kPstWarningBand = 1e-6;

inline int default_tau_max(int n) { return 8 * n; }

enum class TheoremCase { A, B, NormalEven, None, OddNormalImpossible };

inline std::string to_string(TheoremCase c) {
  switch (c) {
  case TheoremCase::A: return "A";
  case TheoremCase::B: return "B";
  case TheoremCase::NormalEven: return "normal-even";
  case TheoremCase::None: return "none";
  case TheoremCase::OddNormalImpossible: return "odd-normal-impossible";
  }
  return "?";
}

inline TheoremCase theorem_case_from_string(const std::string &text) {
  for (auto c : {TheoremCase::A, TheoremCase::B, TheoremCase::NormalEven, TheoremCase::None,
                 TheoremCase::OddNormalImpossible}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown theorem case '" + text + "'");
}

struct VertexPair {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const VertexPair &, const VertexPair &) = default;
};

struct PermutationInfo {
  std::vector<int> image;
  bool involution = false;
  bool fixed_point_free = false;
  std::optional<DihedralElement> right_multiplier; // z with image(x) = x z for every vertex x
  bool central = false;                            // z in the centre of D_n
};

struct PstResiduals {
  double chebyshev = 0.0;   // max |T_tau(P)_{uv} - 1| over pairs
  double permutation = 0.0; // max distance of T_tau(P) from its rounding to {0, 1}
  double evolution = 0.0;   // max ||U^tau Phi_u - gamma Phi_v||
  double gamma = 0.0;       // max |gamma - 1|
};

struct PstCertificate {
  bool occurs = false;
  std::vector<VertexPair> pairs; // u < v, sorted
  std::optional<int> min_time;
  TheoremCase theorem_case = TheoremCase::None;
  std::optional<Complex> gamma;
  std::optional<PermutationInfo> permutation;
  PstResiduals residuals;
  std::vector<std::string> warnings;
};

inline bool same_half(const VertexPair &p, int n) { return (p.u < n) == (p.v < n); }

// Rounds T to a 0/1 matrix. Absent unless every entry is within tol of 0 or 1
// and the result is a fixed-point-free involutive permutation matrix.
inline std::optional<PermutationInfo> permutation_structure(const Eigen::MatrixXd &t, double tol, int n,
                                                            double *deviation = nullptr) {
  const auto size = static_cast<int>(t.rows());
  PermutationInfo info;
  info.image.assign(static_cast<std::size_t>(size), -1);
  double worst = 0.0;
  for (int u = 0; u < size; ++u) {
    for (int v = 0; v < size; ++v) {
      const double x = t(u, v);
      const double off = std::min(std::abs(x), std::abs(x - 1.0));
      worst = std::max(worst, off);
      if (off > tol) return std::nullopt;
      if (std::abs(x - 1.0) <= tol) {
        if (info.image[static_cast<std::size_t>(u)] != -1) return std::nullopt;
        info.image[static_cast<std::size_t>(u)] = v;
      }
    }
  }
  if (deviation) *deviation = worst;
  std::vector<int> hits(static_cast<std::size_t>(size), 0);
  for (int v : info.image) {
    if (v < 0) return std::nullopt;
    ++hits[static_cast<std::size_t>(v)];
  }
  if (std::any_of(hits.begin(), hits.end(), [](int c) { return c != 1; })) return std::nullopt;

  info.involution = true;
  info.fixed_point_free = true;
  for (int u = 0; u < size; ++u) {
    const int v = info.image[static_cast<std::size_t>(u)];
    if (info.image[static_cast<std::size_t>(v)] != u) info.involution = false;
    if (v == u) info.fixed_point_free = false;
  }
  if (!info.involution || !info.fixed_point_free) return std::nullopt;

  if (size == 2 * n) {
    const DihedralElement z = multiply(inverse(label_of(0, n), n), label_of(info.image[0], n), n);
    bool uniform = true;
    for (int u = 0; u < size && uniform; ++u)
      uniform = vertex_of(multiply(label_of(u, n), z, n), n).index == info.image[static_cast<std::size_t>(u)];
    if (uniform) {
      info.right_multiplier = z;
      info.central = true;
      for (const auto &g : group_elements(n)) {
        if (multiply(g, z, n) != multiply(z, g, n)) {
          info.central = false;
          break;
        }
      }
    }
  }
  return info;
}

inline std::optional<PermutationInfo> permutation_structure(const ChebyshevEvaluation &ev, double tol, int n) {
  return permutation_structure(ev.matrix, tol, n);
}

// S_2* = (2 delta - S_2*) mod n as sets.
inline bool set_condition_check(const ConnectionSet &s, long long delta) {
  std::vector<int> image;
  for (int k : s.s2_star()) image.push_back(mod(2 * delta - k, s.n()));
  std::sort(image.begin(), image.end());
  return image == s.s2_star();
}

namespace detail {

inline TheoremCase case_of_pairs(const std::vector<VertexPair> &pairs, int n, bool normal_even) {
  if (pairs.empty()) return TheoremCase::None;
  if (!same_half(pairs.front(), n)) return TheoremCase::B;
  return normal_even ? TheoremCase::NormalEven : TheoremCase::A;
}

inline void check_pair_classes(PstCertificate &cert, int n) {
  if (cert.pairs.empty()) return;
  const bool first = same_half(cert.pairs.front(), n);
  for (const auto &p : cert.pairs) {
    if (same_half(p, n) != first) {
      cert.warnings.push_back("pair set mixes same-half and cross-half pairs");
      return;
    }
  }
}

// Evolution oracle: gamma = <Phi_v, U^tau Phi_u> and the residual of U^tau Phi_u = gamma Phi_v.
inline void evolution_residuals(PstCertificate &cert, const ConnectionSet &s, int tau) {
  const WalkOperators ops = build_operators(s);
  for (const auto &p : cert.pairs) {
    const WalkState start = vertex_state(ops, p.u);
    const WalkState target = vertex_state(ops, p.v);
    const WalkState end = evolve(ops, start, tau);
    const Complex gamma = target.amplitudes.dot(end.amplitudes);
    const double residual = (end.amplitudes - gamma * target.amplitudes).norm();
    cert.residuals.evolution = std::max(cert.residuals.evolution, residual);
    cert.residuals.gamma = std::max(cert.residuals.gamma, std::abs(gamma - Complex{1.0, 0.0}));
    if (!cert.gamma) cert.gamma = gamma;
  }
}

inline bool is_normal_even(const ConnectionSet &s, bool normal) { return normal && s.n() % 2 == 0 && s.n() >= 4; }

} // namespace detail

// Scans tau = 1..tau_max over T_tau(P) built by the three-term recurrence on
// A/d. The first tau with an off-diagonal entry within tol of 1 is the
// minimum time; all such pairs at that tau are reported.
inline PstCertificate pst_brute_force(const ConnectionSet &s, int tau_max, double tol = kPstTolerance) {
  if (tau_max < 1) throw Error(ErrorCode::InvalidArgument, "tau_max must be positive");
  const int n = s.n();
  const int size = 2 * n;
  const bool normal = is_normal(s).normal;
  PstCertificate cert;
  ChebyshevSequence seq(discriminant_from_adjacency(s));
  seq.next();
  for (int tau = 1; tau <= tau_max; ++tau) {
    const Eigen::MatrixXd &t = seq.next();
    for (int u = 0; u < size; ++u) {
      for (int v = u + 1; v < size; ++v) {
        const double gap = std::abs(t(u, v) - 1.0);
        if (gap <= tol) {
          cert.pairs.push_back({u, v});
          cert.residuals.chebyshev = std::max(cert.residuals.chebyshev, gap);
        } else if (gap <= kPstWarningBand) {
          cert.warnings.push_back("near-PST at tau=" + std::to_string(tau) + " (" + std::to_string(u) + "," +
                                  std::to_string(v) + "): |T-1|=" + std::to_string(gap));
        }
      }
    }
    if (cert.pairs.empty()) continue;

    cert.occurs = true;
    cert.min_time = tau;
    cert.theorem_case = detail::case_of_pairs(cert.pairs, n, detail::is_normal_even(s, normal));
    double deviation = 0.0;
    cert.permutation = permutation_structure(t, kPstWarningBand, n, &deviation);
    cert.residuals.permutation = deviation;
    if (!cert.permutation) cert.warnings.push_back("T_tau(P) is not a fixed-point-free involution");
    detail::check_pair_classes(cert, n);
    detail::evolution_residuals(cert, s, tau);
    return cert;
  }
  if (n % 2 == 1 && normal) cert.theorem_case = TheoremCase::OddNormalImpossible;
  return cert;
}

// Decides PST from the analytic eigenvalues alone.
//   n odd, S normal: impossible.
//   n even, case A: pairs (u, u + n/2) in each half, when T(mu~1) = T(mu~2) = 1,
//     T(mu~3) = T(mu~4) = (-1)^{n/2} and T = (-1)^h at every rho_h eigenvalue.
//   case B (every rho_h block non-degenerate; never for normal S with n >= 4):
//     u in G0, v in G1 with S_2* = 2(v-u) - S_2*, T(mu~1) = 1, T(mu~2) = -1,
//     for even n T(mu~3) = -T(mu~4) = (-1)^{u+v}, and
//     T(mu_h+) = -T(mu_h-) = l_h w^{(v-u)h} for every h.
// Times run over 1..min(tau_max, period) since T_{tau + sigma}(P) = T_tau(P)
// once U^sigma = I.
inline PstCertificate classify_pst(const ConnectionSet &s, int tau_max, double tol = kPstTolerance) {
  if (tau_max < 1) throw Error(ErrorCode::InvalidArgument, "tau_max must be positive");
  const int n = s.n();
  const bool normal = is_normal(s).normal;
  PstCertificate cert;
  if (n % 2 == 1 && normal) {
    cert.theorem_case = TheoremCase::OddNormalImpossible;
    return cert;
  }
  const bool normal_even = detail::is_normal_even(s, normal);
  const AnalyticEigenvalues ev = analytic_eigenvalues(s);
  const RootsOfUnity w(n);
  const int m = n / 2;

  std::vector<double> mus;
  for (std::size_t i = 0; i < ev.one_dim.size(); ++i) mus.push_back(ev.one_dim_mu(static_cast<int>(i)));
  for (const auto &b : ev.blocks) {
    mus.push_back(ev.mu_plus(b));
    mus.push_back(ev.mu_minus(b));
  }
  const auto sigma = period(std::span<const double>(mus), graph_counts(s));
  const int limit = sigma ? static_cast<int>(std::min<long long>(tau_max, *sigma)) : tau_max;

  const bool all_split = std::none_of(ev.blocks.begin(), ev.blocks.end(), [](const TwoDimBlock &b) { return b.degenerate; });
  const bool try_b = all_split && !normal_even;
  std::vector<VertexPair> b_candidates;
  if (try_b) {
    for (int u = 0; u < n; ++u) {
      for (int v = n; v < 2 * n; ++v) {
        if (set_condition_check(s, v - u)) b_candidates.push_back({u, v});
      }
    }
  }

  auto near = [&](double x, double target) { return std::abs(x - target) <= tol; };
  auto sign = [](long long e) { return e % 2 == 0 ? 1.0 : -1.0; };

  for (int tau = 1; tau <= limit; ++tau) {
    auto t_one = [&](int i) { return chebyshev_scalar(ev.one_dim_mu(i), tau); };
    std::vector<VertexPair> pairs;
    bool fired_a = false;

    if (n % 2 == 0) {
      bool ok = near(t_one(0), 1.0) && near(t_one(1), 1.0) && near(t_one(2), sign(m)) && near(t_one(3), sign(m));
      for (const auto &b : ev.blocks) {
        if (!ok) break;
        ok = near(chebyshev_scalar(ev.mu_plus(b), tau), sign(b.h)) &&
             near(chebyshev_scalar(ev.mu_minus(b), tau), sign(b.h));
      }
      if (ok) {
        fired_a = true;
        for (int u = 0; u < m; ++u) {
          pairs.push_back({u, u + m});
          pairs.push_back({n + u, n + u + m});
        }
      }
    }

    bool fired_b = false;
    if (try_b && near(t_one(0), 1.0) && near(t_one(1), -1.0)) {
      for (const auto &p : b_candidates) {
        bool ok = true;
        if (n % 2 == 0) {
          const double sg = sign(p.u + p.v);
          ok = near(t_one(2), sg) && near(t_one(3), -sg);
        }
        for (const auto &b : ev.blocks) {
          if (!ok) break;
          const Complex target = b.ell * w.pow(static_cast<long long>(p.v - p.u) * b.h);
          ok = std::abs(Complex{chebyshev_scalar(ev.mu_plus(b), tau), 0.0} - target) <= tol &&
               std::abs(Complex{-chebyshev_scalar(ev.mu_minus(b), tau), 0.0} - target) <= tol;
        }
        if (ok) {
          fired_b = true;
          pairs.push_back(p);
        }
      }
    }
    if (pairs.empty()) continue;

    std::sort(pairs.begin(), pairs.end());
    cert.occurs = true;
    cert.min_time = tau;
    cert.pairs = std::move(pairs);
    cert.theorem_case = fired_b ? TheoremCase::B : (normal_even ? TheoremCase::NormalEven : TheoremCase::A);
    if (fired_a && fired_b) cert.warnings.push_back("cases A and B both fired");
    detail::check_pair_classes(cert, n);

    const auto items = full_spectrum(s);
    const Eigen::MatrixXd t = chebyshev_matrix_spectral(items, tau);
    for (const auto &p : cert.pairs)
      cert.residuals.chebyshev = std::max(cert.residuals.chebyshev, std::abs(t(p.u, p.v) - 1.0));
    double deviation = 0.0;
    cert.permutation = permutation_structure(t, kPstWarningBand, n, &deviation);
    cert.residuals.permutation = deviation;
    if (cert.residuals.chebyshev > kPstWarningBand)
      cert.warnings.push_back("spectral T_tau(P) misses a classified pair by " + std::to_string(cert.residuals.chebyshev));
    return cert;
  }
  return cert;
}

} // namespace dgrover
