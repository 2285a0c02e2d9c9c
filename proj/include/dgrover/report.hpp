#pragma once

// Analysis reports: one connection set in, every derived quantity out, as
// JSON or plain text. Also the named example families used by `dgrover scan`.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "dgrover/grover_walk.hpp"
#include "dgrover/pst.hpp"
#include "dgrover/set_expression.hpp"
#include "dgrover/spectrum.hpp"

namespace dgrover {

using Json = nlohmann::ordered_json;

struct SpectrumEntry {
  std::string label;
  double value = 0.0; // eigenvalue of P = A/d
  int multiplicity = 0;

  friend bool operator==(const SpectrumEntry &, const SpectrumEntry &) = default;
};

struct PstSummary {
  bool occurs = false;
  std::vector<VertexPair> pairs;
  std::optional<int> min_time;
  std::string theorem_case = "none";

  friend bool operator==(const PstSummary &, const PstSummary &) = default;
};

struct AnalysisReport {
  int n = 0;
  std::string set;
  int degree = 0;
  bool normal = false;
  bool connected = false;
  bool bipartite = false;
  std::vector<SpectrumEntry> spectrum;
  std::optional<long long> period;
  PstSummary pst;
  // Not serialized.
  std::vector<std::string> warnings;
  bool verified = false;
};

struct AnalysisOptions {
  bool verify = false;
  std::optional<int> tau_max; // default 8n
  double tol = kPstTolerance;
};

// ---------------------------------------------------------------------------
// Number formatting

// 12 significant digits; values within 1e-9 of an integer become that integer.
inline Json json_number(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9) return static_cast<long long>(r);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

inline std::string text_number(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9) return std::to_string(static_cast<long long>(r));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// JSON

inline void to_json(Json &j, const SpectrumEntry &e) {
  j = Json::object();
  j["label"] = e.label;
  j["value"] = json_number(e.value);
  j["multiplicity"] = e.multiplicity;
}

inline void from_json(const Json &j, SpectrumEntry &e) {
  e.label = j.at("label").get<std::string>();
  e.value = j.at("value").get<double>();
  e.multiplicity = j.at("multiplicity").get<int>();
}

inline void to_json(Json &j, const PstSummary &p) {
  j = Json::object();
  j["occurs"] = p.occurs;
  Json pairs = Json::array();
  for (const auto &pr : p.pairs) pairs.push_back(Json::array({pr.u, pr.v}));
  j["pairs"] = std::move(pairs);
  j["min_time"] = p.min_time ? Json(*p.min_time) : Json(nullptr);
  j["theorem_case"] = p.theorem_case;
}

inline void from_json(const Json &j, PstSummary &p) {
  p.occurs = j.at("occurs").get<bool>();
  p.pairs.clear();
  for (const auto &pr : j.at("pairs")) p.pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
  const auto &t = j.at("min_time");
  p.min_time = t.is_null() ? std::nullopt : std::optional<int>(t.get<int>());
  p.theorem_case = j.at("theorem_case").get<std::string>();
}

inline void to_json(Json &j, const AnalysisReport &r) {
  j = Json::object();
  j["n"] = r.n;
  j["set"] = r.set;
  j["degree"] = r.degree;
  j["normal"] = r.normal;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["spectrum"] = r.spectrum;
  j["period"] = r.period ? Json(*r.period) : Json(nullptr);
  j["pst"] = r.pst;
}

inline void from_json(const Json &j, AnalysisReport &r) {
  r.n = j.at("n").get<int>();
  r.set = j.at("set").get<std::string>();
  r.degree = j.at("degree").get<int>();
  r.normal = j.at("normal").get<bool>();
  r.connected = j.at("connected").get<bool>();
  r.bipartite = j.at("bipartite").get<bool>();
  r.spectrum = j.at("spectrum").get<std::vector<SpectrumEntry>>();
  const auto &p = j.at("period");
  r.period = p.is_null() ? std::nullopt : std::optional<long long>(p.get<long long>());
  r.pst = j.at("pst").get<PstSummary>();
}

// ---------------------------------------------------------------------------
// Analysis

inline std::vector<SpectrumEntry> spectrum_entries(const AnalyticEigenvalues &ev) {
  std::vector<SpectrumEntry> out;
  constexpr EigenKind one[] = {EigenKind::Psi1, EigenKind::Psi2, EigenKind::Psi3, EigenKind::Psi4};
  for (std::size_t i = 0; i < ev.one_dim.size(); ++i)
    out.push_back({EigenLabel{one[i], 0}.to_string(), ev.one_dim_mu(static_cast<int>(i)), 1});
  for (const auto &b : ev.blocks) {
    if (b.degenerate) {
      out.push_back({EigenLabel{EigenKind::RhoDegenerate, b.h}.to_string(), ev.mu_plus(b), 4});
    } else {
      out.push_back({EigenLabel{EigenKind::RhoPlus, b.h}.to_string(), ev.mu_plus(b), 2});
      out.push_back({EigenLabel{EigenKind::RhoMinus, b.h}.to_string(), ev.mu_minus(b), 2});
    }
  }
  return out;
}

inline PstSummary summarize(const PstCertificate &c) {
  return {c.occurs, c.pairs, c.min_time, to_string(c.theorem_case)};
}

namespace detail {

// Analytic eigenvalues of A against a dense symmetric eigensolver.
inline void verify_spectrum(const ConnectionSet &s, const std::vector<SpectrumEntry> &entries) {
  std::vector<double> analytic;
  for (const auto &e : entries) analytic.insert(analytic.end(), static_cast<std::size_t>(e.multiplicity), e.value * s.d());
  std::sort(analytic.begin(), analytic.end());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(s), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd dense = solver.eigenvalues();
  if (static_cast<Eigen::Index>(analytic.size()) != dense.size())
    throw Error(ErrorCode::SpectralMismatch, "analytic spectrum has the wrong size");
  for (Eigen::Index i = 0; i < dense.size(); ++i) {
    if (std::abs(analytic[static_cast<std::size_t>(i)] - dense(i)) > 1e-8)
      throw Error(ErrorCode::SpectralMismatch, "analytic eigenvalue " + std::to_string(analytic[static_cast<std::size_t>(i)]) +
                                                   " vs dense " + std::to_string(dense(i)));
  }
}

} // namespace detail

inline AnalysisReport analyze(const ConnectionSet &s, const AnalysisOptions &options = {}) {
  const int tau_max = options.tau_max.value_or(default_tau_max(s.n()));
  AnalysisReport r;
  r.n = s.n();
  r.set = format_set(s);
  r.degree = s.d();
  r.normal = is_normal(s).normal;
  const GraphCounts counts = graph_counts(s);
  r.connected = counts.components == 1;
  r.bipartite = counts.bipartite;
  const AnalyticEigenvalues ev = analytic_eigenvalues(s);
  r.spectrum = spectrum_entries(ev);
  std::vector<double> mus;
  for (const auto &e : r.spectrum) mus.push_back(e.value);
  r.period = period(std::span<const double>(mus), counts);
  if (!r.connected)
    r.warnings.push_back("graph has " + std::to_string(counts.components) + " components");

  const PstCertificate classified = classify_pst(s, tau_max, options.tol);
  r.pst = summarize(classified);
  r.warnings.insert(r.warnings.end(), classified.warnings.begin(), classified.warnings.end());

  if (options.verify) {
    detail::verify_spectrum(s, r.spectrum);
    const PstCertificate brute = pst_brute_force(s, tau_max, options.tol);
    r.warnings.insert(r.warnings.end(), brute.warnings.begin(), brute.warnings.end());
    if (brute.occurs != classified.occurs || brute.min_time != classified.min_time || brute.pairs != classified.pairs)
      throw Error(ErrorCode::OracleDisagreement,
                  "classifier and brute force disagree for n=" + std::to_string(s.n()) + ", S={" + r.set + "}");
    if (brute.occurs && brute.residuals.evolution > 1e-7)
      throw Error(ErrorCode::OracleDisagreement, "evolution residual " + std::to_string(brute.residuals.evolution));
    r.verified = true;
  }
  return r;
}

inline AnalysisReport analyze(int n, std::string_view expression, const AnalysisOptions &options = {}) {
  return analyze(parse_set(expression, n).set, options);
}

inline std::string format_text(const AnalysisReport &r) {
  std::ostringstream out;
  out << "n          " << r.n << "\n";
  out << "set        {" << r.set << "}\n";
  out << "degree     " << r.degree << "\n";
  out << "normal     " << (r.normal ? "yes" : "no") << "\n";
  out << "connected  " << (r.connected ? "yes" : "no") << "\n";
  out << "bipartite  " << (r.bipartite ? "yes" : "no") << "\n";
  out << "period     " << (r.period ? std::to_string(*r.period) : "unknown") << "\n";
  out << "spectrum of P\n";
  for (const auto &e : r.spectrum) {
    std::string label = e.label;
    label.resize(std::max<std::size_t>(label.size(), 8), ' ');
    out << "  " << label << text_number(e.value) << "  x" << e.multiplicity << "\n";
  }
  if (r.pst.occurs) {
    out << "PST        yes, minimum time " << *r.pst.min_time << " (case " << r.pst.theorem_case << ")\n";
    out << "pairs     ";
    for (const auto &p : r.pst.pairs) out << " (" << p.u << "," << p.v << ")";
    out << "\n";
  } else {
    out << "PST        no (" << r.pst.theorem_case << ")\n";
  }
  if (r.verified) out << "verified   brute force agrees\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Families

inline const std::vector<std::string> &family_names() {
  static const std::vector<std::string> names{"example-5.1", "example-5.2", "example-5.3a", "example-5.3b",
                                              "example-5.3c", "example-5.4"};
  return names;
}

// Order n and set expression of one family member, or absent when the
// parameter is outside the family.
struct FamilyMember {
  int n = 0;
  std::string expression;
};

inline std::optional<FamilyMember> family_member(const std::string &family, int param) {
  auto k = [](int e) { return std::to_string(e); };
  if (family == "example-5.1") {
    if (param < 2) return std::nullopt;
    const int m = param, n = 2 * m;
    return FamilyMember{n, "b*a^1, b*a^" + k(m - 1) + ", b*a^" + k(m + 1) + ", b*a^" + k(n - 1)};
  }
  if (family == "example-5.2") {
    if (param < 2) return std::nullopt;
    const int m = param, n = 2 * m;
    return FamilyMember{n, "a^1, a^" + k(m - 1) + ", a^" + k(m + 1) + ", a^" + k(n - 1)};
  }
  if (family == "example-5.3a" || family == "example-5.3b" || family == "example-5.3c") {
    if (param < 2 || param % 2 != 0) return std::nullopt;
    if (family == "example-5.3a") return FamilyMember{param, "b*<a>"};
    if (family == "example-5.3b") return FamilyMember{param, "b*<a^2>"};
    return FamilyMember{param, "b*a*<a^2>"};
  }
  if (family == "example-5.4") {
    if (param < 3) return std::nullopt;
    return FamilyMember{param, "b, b*a^1"};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
}

struct ScanRow {
  int param = 0;
  AnalysisReport report;
};

// Rows come back in parameter order whatever order the workers finish in.
inline std::vector<ScanRow> scan_family(const std::string &family, int from, int to, int jobs = 1,
                                        const AnalysisOptions &options = {}) {
  if (from > to) throw Error(ErrorCode::InvalidArgument, "empty parameter range");
  std::vector<int> params;
  std::vector<FamilyMember> members;
  for (int p = from; p <= to; ++p) {
    if (auto m = family_member(family, p)) {
      params.push_back(p);
      members.push_back(*m);
    }
  }

  std::vector<ScanRow> rows(params.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(params.size())));
  std::vector<std::future<void>> futures;
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < params.size(); i += static_cast<std::size_t>(workers))
        rows[i] = {params[i], analyze(members[i].n, members[i].expression, options)};
    }));
  }
  for (auto &f : futures) f.get();
  return rows;
}

inline Json scan_json(const std::string &family, const std::vector<ScanRow> &rows) {
  Json out = Json::object();
  out["family"] = family;
  Json list = Json::array();
  for (const auto &row : rows) {
    Json j = Json::object();
    j["param"] = row.param;
    const Json report = row.report;
    for (const auto &[key, value] : report.items()) j[key] = value;
    list.push_back(std::move(j));
  }
  out["rows"] = std::move(list);
  return out;
}

inline std::string scan_text(const std::string &family, const std::vector<ScanRow> &rows) {
  std::ostringstream out;
  out << family << "\n";
  out << "param  n    d  normal  connected  period  PST  min_time  case\n";
  char line[160];
  for (const auto &row : rows) {
    const auto &r = row.report;
    std::snprintf(line, sizeof line, "%-6d %-4d %-2d %-7s %-10s %-7s %-4s %-9s %s\n", row.param, r.n, r.degree,
                  r.normal ? "yes" : "no", r.connected ? "yes" : "no",
                  r.period ? std::to_string(*r.period).c_str() : "-", r.pst.occurs ? "yes" : "no",
                  r.pst.min_time ? std::to_string(*r.pst.min_time).c_str() : "-", r.pst.theorem_case.c_str());
    out << line;
  }
  return out.str();
}

} // namespace dgrover
