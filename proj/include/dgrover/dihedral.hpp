#pragma once

// Arithmetic in the dihedral group D_n = <a, b | a^n = b^2 = 1, bab = a^{-1}>,
// connection sets for Cayley graphs over it, and the vertex labelling
// a^u -> u, b a^u -> n + u used by every matrix in the library.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dgrover/errors.hpp"
#include "dgrover/roots_of_unity.hpp"

namespace dgrover {

inline void require_order(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2, got " + std::to_string(n));
}

// Canonical form b^reflection a^exponent with exponent in {0, ..., n-1}.
class DihedralElement {
public:
  constexpr DihedralElement() = default;
  DihedralElement(bool reflection, long long exponent, int n)
      : reflection_(reflection), exponent_(mod(exponent, n)) {}

  static DihedralElement identity() { return {}; }
  static DihedralElement rotation(long long k, int n) { return {false, k, n}; }
  static DihedralElement reflection(long long k, int n) { return {true, k, n}; }

  bool is_reflection() const noexcept { return reflection_; }
  int exponent() const noexcept { return exponent_; }
  bool is_identity() const noexcept { return !reflection_ && exponent_ == 0; }

  friend auto operator<=>(const DihedralElement &, const DihedralElement &) = default;

  std::string to_string() const {
    if (!reflection_) return exponent_ == 0 ? "1" : "a^" + std::to_string(exponent_);
    return exponent_ == 0 ? "b" : "b*a^" + std::to_string(exponent_);
  }

private:
  bool reflection_ = false;
  int exponent_ = 0;
};

inline DihedralElement multiply(const DihedralElement &x, const DihedralElement &y, int n) {
  const long long j = x.exponent();
  const long long k = y.exponent();
  if (!x.is_reflection() && !y.is_reflection()) return DihedralElement::rotation(j + k, n);
  if (!x.is_reflection()) return DihedralElement::reflection(k - j, n); // a^j b a^k = b a^{k-j}
  if (!y.is_reflection()) return DihedralElement::reflection(j + k, n);
  return DihedralElement::rotation(k - j, n); // b a^j b a^k = a^{k-j}
}

inline DihedralElement inverse(const DihedralElement &x, int n) {
  if (x.is_reflection()) return x;
  return DihedralElement::rotation(-static_cast<long long>(x.exponent()), n);
}

// All 2n elements in vertex-label order.
inline std::vector<DihedralElement> group_elements(int n) {
  require_order(n);
  std::vector<DihedralElement> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(DihedralElement::rotation(k, n));
  for (int k = 0; k < n; ++k) out.push_back(DihedralElement::reflection(k, n));
  return out;
}

// ---------------------------------------------------------------------------
// Vertex labels

enum class Half { G0, G1 };

struct VertexLabel {
  int index = 0;
  Half half = Half::G0;

  friend bool operator==(const VertexLabel &, const VertexLabel &) = default;
};

inline VertexLabel vertex_of(const DihedralElement &x, int n) {
  if (x.is_reflection()) return {n + x.exponent(), Half::G1};
  return {x.exponent(), Half::G0};
}

inline VertexLabel vertex_label(int index, int n) {
  if (index < 0 || index >= 2 * n)
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(index) + " outside 0.." + std::to_string(2 * n - 1));
  return {index, index < n ? Half::G0 : Half::G1};
}

inline DihedralElement label_of(int index, int n) {
  const VertexLabel label = vertex_label(index, n);
  if (label.half == Half::G0) return DihedralElement::rotation(index, n);
  return DihedralElement::reflection(index - n, n);
}

inline DihedralElement label_of(const VertexLabel &u, int n) { return label_of(u.index, n); }

// ---------------------------------------------------------------------------
// Connection sets

class ConnectionSet;
ConnectionSet validate_connection_set(std::span<const DihedralElement> raw, int n);

// A validated S: identity-free, inverse-closed. S_1 = S ∩ <a> and
// S_2 = bS ∩ <a> are kept as sorted exponent sets.
class ConnectionSet {
public:
  int n() const noexcept { return n_; }
  const std::vector<DihedralElement> &elements() const noexcept { return elements_; }
  const std::vector<int> &s1_star() const noexcept { return s1_star_; }
  const std::vector<int> &s2_star() const noexcept { return s2_star_; }

  // Exponents of S_2^{-1}, i.e. -S_2* mod n, sorted.
  std::vector<int> s2_inverse_star() const {
    std::vector<int> out;
    out.reserve(s2_star_.size());
    for (int k : s2_star_) out.push_back(mod(-k, n_));
    std::sort(out.begin(), out.end());
    return out;
  }

  int d() const noexcept { return static_cast<int>(elements_.size()); }
  int s1() const noexcept { return static_cast<int>(s1_star_.size()); }
  int s2() const noexcept { return static_cast<int>(s2_star_.size()); }
  int d10() const noexcept { return d10_; }
  int d11() const noexcept { return d11_; }
  int d20() const noexcept { return d20_; }
  int d21() const noexcept { return d21_; }

  bool contains(const DihedralElement &x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }

  friend bool operator==(const ConnectionSet &a, const ConnectionSet &b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

private:
  friend ConnectionSet validate_connection_set(std::span<const DihedralElement>, int);
  ConnectionSet() = default;

  int n_ = 0;
  std::vector<DihedralElement> elements_;
  std::vector<int> s1_star_;
  std::vector<int> s2_star_;
  int d10_ = 0, d11_ = 0, d20_ = 0, d21_ = 0;
};

// Duplicates collapse to a set before validation.
inline ConnectionSet validate_connection_set(std::span<const DihedralElement> raw, int n) {
  require_order(n);
  std::set<DihedralElement> unique(raw.begin(), raw.end());
  if (unique.empty()) throw Error(ErrorCode::EmptySet, "connection set is empty");
  if (unique.contains(DihedralElement::identity()))
    throw Error(ErrorCode::IdentityInSet, "identity element 1 is in S");
  for (const auto &x : unique) {
    if (!unique.contains(inverse(x, n)))
      throw Error(ErrorCode::NotSymmetric,
                  x.to_string() + " is in S but its inverse " + inverse(x, n).to_string() + " is not");
  }

  ConnectionSet s;
  s.n_ = n;
  s.elements_.assign(unique.begin(), unique.end());
  for (const auto &x : s.elements_) {
    const int k = x.exponent();
    if (x.is_reflection()) {
      s.s2_star_.push_back(k);
      (k % 2 == 0 ? s.d20_ : s.d21_)++;
    } else {
      s.s1_star_.push_back(k);
      (k % 2 == 0 ? s.d10_ : s.d11_)++;
    }
  }
  return s;
}

inline ConnectionSet validate_connection_set(std::initializer_list<DihedralElement> raw, int n) {
  return validate_connection_set(std::span<const DihedralElement>(raw.begin(), raw.size()), n);
}

// ---------------------------------------------------------------------------
// Conjugacy and normality

// {g x g^{-1} : g in D_n}, by enumeration over the whole group.
inline std::vector<DihedralElement> conjugacy_class(const DihedralElement &x, int n) {
  std::set<DihedralElement> cls;
  for (const auto &g : group_elements(n)) cls.insert(multiply(multiply(g, x, n), inverse(g, n), n));
  return {cls.begin(), cls.end()};
}

inline constexpr double kEtaZeroTolerance = 1e-9;

struct NormalityReport {
  bool normal = false;
  bool by_conjugacy_closure = false;
  bool by_reflection_pattern = false;
  bool by_eta = false;
};

namespace detail {

inline bool reflection_pattern_is_normal(const ConnectionSet &s) {
  const int n = s.n();
  const auto &s2 = s.s2_star();
  if (s2.empty() || static_cast<int>(s2.size()) == n) return true;
  if (n % 2 != 0) return false;
  // <a^2> or a<a^2>: every exponent of one parity, count n/2.
  if (static_cast<int>(s2.size()) != n / 2) return false;
  const int parity = s2.front() % 2;
  return std::all_of(s2.begin(), s2.end(), [&](int k) { return k % 2 == parity; });
}

inline bool eta_vanishes(const ConnectionSet &s) {
  const RootsOfUnity w(s.n());
  for (int h = 1; h <= (s.n() - 1) / 2; ++h) {
    if (std::abs(eta(s.s2_star(), h, w)) > kEtaZeroTolerance) return false;
  }
  return true;
}

} // namespace detail

// S is normal iff it is a union of conjugacy classes. Three independent
// tests are run; disagreement means a bug and raises InternalInconsistency.
inline NormalityReport is_normal(const ConnectionSet &s) {
  NormalityReport r;
  r.by_conjugacy_closure = true;
  for (const auto &x : s.elements()) {
    for (const auto &y : conjugacy_class(x, s.n())) {
      if (!s.contains(y)) {
        r.by_conjugacy_closure = false;
        break;
      }
    }
    if (!r.by_conjugacy_closure) break;
  }
  r.by_reflection_pattern = detail::reflection_pattern_is_normal(s);
  r.by_eta = detail::eta_vanishes(s);
  if (r.by_conjugacy_closure != r.by_reflection_pattern || r.by_conjugacy_closure != r.by_eta)
    throw Error(ErrorCode::InternalInconsistency, "normality tests disagree");
  r.normal = r.by_conjugacy_closure;
  return r;
}

} // namespace dgrover
