#pragma once

// Irreducible unitary representations of D_n: the one-dimensional
// characters psi_1..psi_4 (psi_3, psi_4 only for even n) and the
// two-dimensional rho_h, 1 <= h <= floor((n-1)/2).

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dgrover/dihedral.hpp"
#include "dgrover/roots_of_unity.hpp"

namespace dgrover {

enum class IrrepKind { Psi1, Psi2, Psi3, Psi4, Rho };

struct IrreducibleRep {
  IrrepKind kind = IrrepKind::Psi1;
  int h = 0; // only meaningful for Rho

  int degree() const noexcept { return kind == IrrepKind::Rho ? 2 : 1; }

  std::string label() const {
    switch (kind) {
    case IrrepKind::Psi1: return "psi1";
    case IrrepKind::Psi2: return "psi2";
    case IrrepKind::Psi3: return "psi3";
    case IrrepKind::Psi4: return "psi4";
    case IrrepKind::Rho: return "rho" + std::to_string(h);
    }
    return "?";
  }

  friend bool operator==(const IrreducibleRep &, const IrreducibleRep &) = default;
};

inline int two_dim_count(int n) { return (n - 1) / 2; }

inline std::vector<IrreducibleRep> list_irreps(int n) {
  require_order(n);
  std::vector<IrreducibleRep> reps{{IrrepKind::Psi1}, {IrrepKind::Psi2}};
  if (n % 2 == 0) {
    reps.push_back({IrrepKind::Psi3});
    reps.push_back({IrrepKind::Psi4});
  }
  for (int h = 1; h <= two_dim_count(n); ++h) reps.push_back({IrrepKind::Rho, h});
  return reps;
}

inline void require_rep_defined(const IrreducibleRep &rep, int n) {
  if ((rep.kind == IrrepKind::Psi3 || rep.kind == IrrepKind::Psi4) && n % 2 != 0)
    throw Error(ErrorCode::RepNotDefined, rep.label() + " needs even n, got n=" + std::to_string(n));
  if (rep.kind == IrrepKind::Rho && (rep.h < 1 || rep.h > two_dim_count(n)))
    throw Error(ErrorCode::RepNotDefined, "rho_h needs 1 <= h <= " + std::to_string(two_dim_count(n)) +
                                              ", got h=" + std::to_string(rep.h));
}

inline Eigen::MatrixXcd evaluate(const IrreducibleRep &rep, const DihedralElement &x, int n) {
  require_order(n);
  require_rep_defined(rep, n);
  const int k = x.exponent();
  const bool refl = x.is_reflection();
  const double parity = (k % 2 == 0) ? 1.0 : -1.0;
  Eigen::MatrixXcd m(rep.degree(), rep.degree());
  switch (rep.kind) {
  case IrrepKind::Psi1: m(0, 0) = 1.0; break;
  case IrrepKind::Psi2: m(0, 0) = refl ? -1.0 : 1.0; break;
  case IrrepKind::Psi3: m(0, 0) = parity; break;
  case IrrepKind::Psi4: m(0, 0) = refl ? -parity : parity; break;
  case IrrepKind::Rho: {
    const RootsOfUnity w(n);
    const Complex up = w.pow(static_cast<long long>(rep.h) * k);
    const Complex down = w.pow(-static_cast<long long>(rep.h) * k);
    m.setZero();
    if (refl) {
      m(0, 1) = down;
      m(1, 0) = up;
    } else {
      m(0, 0) = up;
      m(1, 1) = down;
    }
    break;
  }
  }
  return m;
}

inline Complex character(const IrreducibleRep &rep, const DihedralElement &x, int n) {
  return evaluate(rep, x, n).trace();
}

} // namespace dgrover
