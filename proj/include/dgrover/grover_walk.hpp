#pragma once

// Arc-space Grover walk on Cay(D_n, S):
//   R  shift, swaps each arc with its reversal
//   N  boundary, N[u][a] = 1/sqrt(deg u) when a terminates at u
//   U  = R (2 N^* N - I), the unitary time evolution
//   P  = N R N^*, the discriminant (equal to A/d since the graph is d-regular)

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dgrover/dihedral.hpp"
#include "dgrover/spectrum.hpp"

namespace dgrover {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct Arc {
  int origin = 0;
  int terminus = 0;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

// Symmetric arcs sorted lexicographically by (origin, terminus).
class ArcSpace {
public:
  ArcSpace() = default;

  explicit ArcSpace(const ConnectionSet &s) : vertex_count_(2 * s.n()) {
    const int n = s.n();
    first_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (int u = 0; u < vertex_count_; ++u) {
      const DihedralElement x = label_of(u, n);
      std::vector<int> heads;
      // u ~ v  iff  u v^{-1} in S  iff  v = s^{-1} u for some s in S
      for (const auto &g : s.elements()) heads.push_back(vertex_of(multiply(inverse(g, n), x, n), n).index);
      std::sort(heads.begin(), heads.end());
      for (int v : heads) arcs_.push_back({u, v});
      first_[static_cast<std::size_t>(u) + 1] = static_cast<int>(arcs_.size());
    }
  }

  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return size() / 2; }
  const std::vector<Arc> &arcs() const noexcept { return arcs_; }
  const Arc &operator[](int i) const { return arcs_[static_cast<std::size_t>(i)]; }

  // Position of (origin, terminus), or -1 when it is not an arc.
  int index_of(int origin, int terminus) const {
    if (origin < 0 || origin >= vertex_count_) return -1;
    const auto begin = arcs_.begin() + first_[static_cast<std::size_t>(origin)];
    const auto end = arcs_.begin() + first_[static_cast<std::size_t>(origin) + 1];
    const auto it = std::lower_bound(begin, end, Arc{origin, terminus});
    if (it == end || it->terminus != terminus) return -1;
    return static_cast<int>(it - arcs_.begin());
  }

  int reverse_of(int i) const { return index_of((*this)[i].terminus, (*this)[i].origin); }

private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> first_;
};

struct WalkOperators {
  ArcSpace arcs;
  int degree = 0;
  SparseMatrix R;    // arcs x arcs
  SparseMatrix N;    // vertices x arcs
  SparseMatrix U;    // arcs x arcs
  Eigen::MatrixXd P; // vertices x vertices
};

struct WalkState {
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

inline WalkOperators build_operators(const ConnectionSet &s) {
  WalkOperators ops;
  ops.arcs = ArcSpace(s);
  ops.degree = s.d();
  const int m = ops.arcs.size();
  const int nv = ops.arcs.vertex_count();

  std::vector<Eigen::Triplet<double>> r, nb;
  r.reserve(static_cast<std::size_t>(m));
  nb.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int j = ops.arcs.reverse_of(i);
    if (j < 0) throw Error(ErrorCode::InternalInconsistency, "arc without reversal");
    r.emplace_back(i, j, 1.0);
    // Cayley graphs are regular: deg(t(a)) = d for every arc.
    nb.emplace_back(ops.arcs[i].terminus, i, 1.0 / std::sqrt(static_cast<double>(s.d())));
  }
  ops.R.resize(m, m);
  ops.R.setFromTriplets(r.begin(), r.end());
  ops.N.resize(nv, m);
  ops.N.setFromTriplets(nb.begin(), nb.end());

  SparseMatrix identity(m, m);
  identity.setIdentity();
  const SparseMatrix coin = SparseMatrix(2.0 * SparseMatrix(ops.N.transpose()) * ops.N) - identity;
  ops.U = ops.R * coin;
  ops.U.prune(0.0);
  ops.P = Eigen::MatrixXd(ops.N * ops.R * SparseMatrix(ops.N.transpose()));
  return ops;
}

// Phi_u = N^* e_u: amplitude 1/sqrt(d) on every arc terminating at u.
inline WalkState vertex_state(const WalkOperators &ops, int u) {
  vertex_label(u, ops.arcs.vertex_count() / 2);
  WalkState state;
  state.amplitudes = Eigen::VectorXd(ops.N.row(u).transpose()).cast<Complex>();
  return state;
}

inline WalkState evolve(const WalkOperators &ops, const WalkState &state, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "negative evolution time");
  WalkState out = state;
  for (int step = 0; step < t; ++step) out.amplitudes = ops.U * out.amplitudes;
  return out;
}

// ---------------------------------------------------------------------------
// Graph structure

inline std::vector<int> component_labels(const ConnectionSet &s) {
  const int n = s.n();
  const int nv = 2 * n;
  std::vector<int> comp(static_cast<std::size_t>(nv), -1);
  int next = 0;
  for (int start = 0; start < nv; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::queue<int> queue;
    queue.push(start);
    comp[static_cast<std::size_t>(start)] = next;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const auto &g : s.elements()) {
        const int v = vertex_of(multiply(g, label_of(u, n), n), n).index;
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          queue.push(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline int component_count(const ConnectionSet &s) {
  const auto labels = component_labels(s);
  return *std::max_element(labels.begin(), labels.end()) + 1;
}

// Breadth-first 2-colouring of every component.
inline bool is_bipartite(const ConnectionSet &s) {
  const int n = s.n();
  const int nv = 2 * n;
  std::vector<int> colour(static_cast<std::size_t>(nv), -1);
  for (int start = 0; start < nv; ++start) {
    if (colour[static_cast<std::size_t>(start)] >= 0) continue;
    std::queue<int> queue;
    queue.push(start);
    colour[static_cast<std::size_t>(start)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const auto &g : s.elements()) {
        const int v = vertex_of(multiply(g, label_of(u, n), n), n).index;
        auto &cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          queue.push(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transition spectrum and period

struct TransitionSpectrum {
  std::vector<Complex> values; // multiset, size 2|E|
  long long b1 = 0;
  long long minus_one_multiplicity = 0;
};

// {e^{+-i arccos mu_j}} (one value when mu_j = +-1) u {1}^{b1} u {-1}^{b1 - 1 + 1_B} with b1 = |E| - |V| + 1.
// b1 is the global first Betti number only for connected graphs; for
// disconnected input the count can go negative and NegativeMultiplicity is raised.
inline TransitionSpectrum transition_spectrum(std::span<const EigenItem> items, long long edge_count,
                                              long long vertex_count, bool bipartite) {
  TransitionSpectrum ts;
  ts.b1 = edge_count - vertex_count + 1;
  ts.minus_one_multiplicity = ts.b1 - 1 + (bipartite ? 1 : 0);
  if (ts.b1 < 0 || ts.minus_one_multiplicity < 0)
    throw Error(ErrorCode::NegativeMultiplicity,
                "b1=" + std::to_string(ts.b1) + ", -1 multiplicity=" + std::to_string(ts.minus_one_multiplicity));
  long long total = 0;
  for (const auto &item : items) total += item.multiplicity;
  if (total != vertex_count)
    throw Error(ErrorCode::InvalidArgument, "eigen items cover " + std::to_string(total) + " of " +
                                                std::to_string(vertex_count) + " dimensions");
  for (const auto &item : items) {
    const double mu = item.discriminant_eigenvalue;
    const double theta = std::acos(mu);
    for (int k = 0; k < item.multiplicity; ++k) {
      // at mu = +-1 the pair e^{+-i theta} is a single eigenvalue
      if (std::abs(std::abs(mu) - 1.0) <= 1e-12) {
        ts.values.emplace_back(mu > 0 ? 1.0 : -1.0, 0.0);
        continue;
      }
      ts.values.push_back(std::polar(1.0, theta));
      ts.values.push_back(std::polar(1.0, -theta));
    }
  }
  ts.values.insert(ts.values.end(), static_cast<std::size_t>(ts.b1), Complex{1.0, 0.0});
  ts.values.insert(ts.values.end(), static_cast<std::size_t>(ts.minus_one_multiplicity), Complex{-1.0, 0.0});
  return ts;
}

struct RationalAngle {
  long long p = 0;
  long long q = 1;
};

// Best rational approximation p/q of theta in [0, 1] with q <= q_max, from
// continued-fraction convergents; absent unless |theta - p/q| <= tol.
inline std::optional<RationalAngle> rational_angle(double theta, long long q_max, double tol = 1e-9) {
  long long h_prev = 0, h_cur = 1;
  long long k_prev = 1, k_cur = 0;
  std::optional<RationalAngle> best;
  double x = theta;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(x);
    const auto ai = static_cast<long long>(a);
    const long long h_next = ai * h_cur + h_prev;
    const long long k_next = ai * k_cur + k_prev;
    if (k_next > q_max) break;
    best = RationalAngle{h_next, k_next};
    if (std::abs(theta - static_cast<double>(h_next) / static_cast<double>(k_next)) <= 1e-15) break;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    h_prev = h_cur;
    h_cur = h_next;
    k_prev = k_cur;
    k_cur = k_next;
  }
  if (!best || std::abs(theta - static_cast<double>(best->p) / static_cast<double>(best->q)) > tol)
    return std::nullopt;
  return best;
}

struct GraphCounts {
  int n = 0;
  int degree = 0;
  long long edge_count = 0;
  long long vertex_count = 0;
  int components = 1;
  bool bipartite = false;
};

inline GraphCounts graph_counts(const ConnectionSet &s) {
  GraphCounts g;
  g.n = s.n();
  g.degree = s.d();
  g.vertex_count = 2LL * s.n();
  g.edge_count = g.vertex_count * s.d() / 2;
  g.components = component_count(s);
  g.bipartite = is_bipartite(s);
  return g;
}

// Least sigma with U^sigma = I: lcm of the orders of the U-eigenvalues.
// Each distinct mu gives e^{+-i pi p/q} of order 2q / gcd(p, 2q). The -1
// eigenvalues of the cycle space are counted per component (components of a
// Cayley graph are isomorphic). Absent when some angle is not recognised as
// rational with denominator <= 4 n d.
inline std::optional<long long> period(std::span<const double> discriminant_eigenvalues, const GraphCounts &g) {
  const long long q_max = 4LL * g.n * g.degree;
  std::vector<double> distinct;
  for (double mu : discriminant_eigenvalues) {
    if (std::abs(mu - 1.0) <= 1e-12) mu = 1.0;
    if (std::abs(mu + 1.0) <= 1e-12) mu = -1.0;
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](double x) { return std::abs(x - mu) <= 1e-9; });
    if (!seen) distinct.push_back(mu);
  }

  long long sigma = 1;
  for (double mu : distinct) {
    const double theta = std::acos(mu) / std::numbers::pi;
    const auto angle = rational_angle(theta, q_max);
    if (!angle) return std::nullopt;
    if (std::abs(std::abs(std::cos(static_cast<double>(angle->q) * std::acos(mu))) - 1.0) > 1e-9) return std::nullopt;
    const long long order = 2 * angle->q / std::gcd(angle->p, 2 * angle->q);
    sigma = std::lcm(sigma, order);
  }
  const long long cycle_minus_one = g.edge_count - g.vertex_count + static_cast<long long>(g.components) * (g.bipartite ? 1 : 0);
  if (cycle_minus_one > 0) sigma = std::lcm(sigma, 2LL);
  return sigma;
}

inline std::optional<long long> period(std::span<const EigenItem> items, const GraphCounts &g) {
  std::vector<double> mus;
  for (const auto &item : items) mus.push_back(item.discriminant_eigenvalue);
  return period(std::span<const double>(mus), g);
}

} // namespace dgrover
