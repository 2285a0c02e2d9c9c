#pragma once

// Chebyshev polynomials of the first kind evaluated at scalars and at the
// discriminant matrix. T_tau(P) is available two ways: the three-term
// recurrence T_k = 2 P T_{k-1} - T_{k-2}, and the spectral sum
// sum_items T_tau(mu) Pi over the closed-form eigenspaces.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dgrover/errors.hpp"
#include "dgrover/spectrum.hpp"

namespace dgrover {

inline constexpr double kChebyshevAgreement = 1e-8;
inline constexpr double kSpectralMismatch = 1e-6;

// T_tau(mu) = cos(tau arccos mu) for mu in [-1, 1].
inline double chebyshev_scalar(double mu, int tau) {
  return std::cos(static_cast<double>(tau) * std::acos(std::clamp(mu, -1.0, 1.0)));
}

// Streams T_1(P), T_2(P), ... by the matrix recurrence.
class ChebyshevSequence {
public:
  explicit ChebyshevSequence(Eigen::MatrixXd p)
      : p_(std::move(p)), prev_(Eigen::MatrixXd::Identity(p_.rows(), p_.cols())), cur_(prev_) {}

  // Advances to the next degree and returns it.
  const Eigen::MatrixXd &next() {
    if (degree_ < 0) {
      degree_ = 0;
      return cur_;
    }
    if (degree_ == 0) {
      cur_ = p_;
    } else {
      Eigen::MatrixXd following = 2.0 * p_ * cur_ - prev_;
      prev_ = std::move(cur_);
      cur_ = std::move(following);
    }
    ++degree_;
    return cur_;
  }

  int degree() const noexcept { return degree_; }
  const Eigen::MatrixXd &current() const noexcept { return cur_; }

private:
  Eigen::MatrixXd p_;
  Eigen::MatrixXd prev_;
  Eigen::MatrixXd cur_;
  int degree_ = -1;
};

inline Eigen::MatrixXd chebyshev_matrix_recurrence(const Eigen::MatrixXd &p, int tau) {
  if (tau < 0) throw Error(ErrorCode::InvalidArgument, "negative Chebyshev degree");
  ChebyshevSequence seq(p);
  seq.next();
  while (seq.degree() < tau) seq.next();
  return seq.current();
}

inline Eigen::MatrixXd chebyshev_matrix_spectral(std::span<const EigenItem> items, int tau) {
  if (tau < 0) throw Error(ErrorCode::InvalidArgument, "negative Chebyshev degree");
  const auto size = items.front().projector.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(size, size);
  for (const auto &item : items) sum += chebyshev_scalar(item.discriminant_eigenvalue, tau) * item.projector;
  return sum;
}

struct ChebyshevEvaluation {
  int tau = 0;
  Eigen::MatrixXd matrix;                           // spectral path
  std::optional<Eigen::MatrixXd> recurrence;        // present when verified
  std::vector<std::pair<EigenLabel, double>> per_eigenvalue; // T_tau(mu) per item
  double path_deviation = 0.0;                      // max |spectral - recurrence|
};

enum class ChebyshevCheck { SpectralOnly, Verify };

inline ChebyshevEvaluation chebyshev_matrix(const Eigen::MatrixXd &p, std::span<const EigenItem> items, int tau,
                                            ChebyshevCheck check = ChebyshevCheck::Verify) {
  ChebyshevEvaluation ev;
  ev.tau = tau;
  ev.matrix = chebyshev_matrix_spectral(items, tau);
  for (const auto &item : items) ev.per_eigenvalue.emplace_back(item.label, chebyshev_scalar(item.discriminant_eigenvalue, tau));
  if (check == ChebyshevCheck::Verify) {
    ev.recurrence = chebyshev_matrix_recurrence(p, tau);
    ev.path_deviation = (ev.matrix - *ev.recurrence).cwiseAbs().maxCoeff();
    if (ev.path_deviation > kSpectralMismatch)
      throw Error(ErrorCode::SpectralMismatch,
                  "T_" + std::to_string(tau) + "(P) paths differ by " + std::to_string(ev.path_deviation));
  }
  return ev;
}

} // namespace dgrover
