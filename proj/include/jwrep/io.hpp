#pragma once

// JSON and CSV encodings of library values.

#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"

#include "jwrep/density.hpp"
#include "jwrep/duality.hpp"
#include "jwrep/fibonacci.hpp"
#include "jwrep/hecke.hpp"
#include "jwrep/jones.hpp"
#include "jwrep/stats.hpp"

namespace jwrep::io {

using nlohmann::json;

/// Rows of [re, im] pairs.
inline json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json tableau_json(const StandardTableau& t) { return t.rows(); }

inline json sector_json(const Sector& s) {
  json basis = json::array();
  for (const auto& t : s.basis())
    basis.push_back(tableau_json(t));
  json gens = json::array();
  for (const auto& g : s.generators())
    gens.push_back(matrix_json(g));
  return {{"diagram", s.shape().to_string()},
          {"k", s.params().k},
          {"r", s.params().r},
          {"chirality", s.params().chirality},
          {"dim", s.dim()},
          {"basis", std::move(basis)},
          {"generators", std::move(gens)}};
}

inline json relations_json(const RelationReport& r) {
  return {{"hermitian", r.hermitian}, {"idempotent", r.idempotent}, {"temperley_lieb", r.temperley},
          {"far_commute", r.far_commute}, {"generator_formula", r.generator}, {"unitarity", r.unitarity},
          {"braid", r.braid}};
}

inline json tile_json(const RTile& t) {
  json rows = json::array();
  for (int i = 0; i < t.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.cols(); ++j)
      row.push_back(t(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json classification_json(const ImageClassification& c) {
  return {{"family", to_string(c.family)},
          {"N", c.group_rank},
          {"weight_index", c.weight_index},
          {"pairing", to_string(c.pairing)},
          {"excluded_reason", c.excluded_reason},
          {"dim", c.dimension}};
}

/// "a+bi" with 10 decimals; values below 5e-11 print as zero.
inline std::string complex_text(cplx z) {
  auto clean = [](double x) { return std::abs(x) < 5e-11 ? 0.0 : x; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.10f%+.10fi", clean(z.real()), clean(z.imag()));
  return buf;
}

inline json jones_json(const JonesEvaluation& ev) {
  json sectors = json::array();
  for (const auto& s : ev.sectors)
    sectors.push_back({{"diagram", s.diagram.to_string()},
                       {"dim", s.dim},
                       {"weight", s.weight},
                       {"trace_re", s.trace.real()},
                       {"trace_im", s.trace.imag()}});
  return {{"value", complex_text(ev.value)},
          {"re", ev.value.real()},
          {"im", ev.value.imag()},
          {"n", ev.strands},
          {"r", ev.r},
          {"chirality", ev.chirality},
          {"e", ev.exponent_sum},
          {"m", ev.phase},
          {"tn_re", ev.tn_value.real()},
          {"tn_im", ev.tn_value.imag()},
          {"sectors", std::move(sectors)}};
}

inline json sample_config_json(const SampleConfig& c) {
  return {{"n", c.n},
          {"r", c.r},
          {"chirality", c.chirality},
          {"length", c.word_length},
          {"count", c.sample_count},
          {"seed", c.seed},
          {"filter", to_string(c.filter)}};
}

inline json gaussian_json(const GaussianReport& g, const EmpiricalDistribution& d) {
  const auto& m = g.moments;
  return {{"sigma", g.sigma},
          {"samples", g.count},
          {"attempts", d.attempts},
          {"moments",
           {{"mean_re", m.mean.real()},
            {"mean_im", m.mean.imag()},
            {"mean_sq_re", m.mean_sq.real()},
            {"mean_sq_im", m.mean_sq.imag()},
            {"abs2", m.abs2},
            {"abs4", m.abs4}}},
          {"null_standard_errors",
           {{"mean", g.se_mean}, {"mean_sq", g.se_mean_sq}, {"abs2", g.se_abs2}, {"abs4", g.se_abs4}}},
          {"empirical_standard_errors",
           {{"mean", d.errors.mean}, {"mean_sq", d.errors.mean_sq}, {"abs2", d.errors.abs2}, {"abs4", d.errors.abs4}}},
          {"z", {{"mean", g.z_mean}, {"mean_sq", g.z_mean_sq}, {"abs2", g.z_abs2}, {"abs4", g.z_abs4}}},
          {"kurtosis_ratio", g.kurtosis_ratio},
          {"z_threshold", g.threshold},
          {"pass", g.pass}};
}

inline void histogram_csv(std::ostream& out, const Histogram2D& h) {
  out << "bin_x,bin_y,count\n";
  for (int i = 0; i < h.bins; ++i)
    for (int j = 0; j < h.bins; ++j)
      out << i << ',' << j << ',' << h.counts[i][j] << '\n';
}

inline json net_json(const NetReport& r) {
  json eps = json::array();
  for (std::size_t l = 0; l < r.epsilon.size(); ++l)
    eps.push_back({{"l", l}, {"epsilon", r.epsilon[l]}, {"images", r.images[l]}});
  return {{"diagram", r.diagram.to_string()},
          {"k", r.k},
          {"r", r.r},
          {"chirality", r.chirality},
          {"dim", r.dim},
          {"targets", r.targets},
          {"target_sampler", "Haar SU(dim) via QR of a complex Ginibre matrix, stream (seed, index)"},
          {"seed", r.seed},
          {"profile", std::move(eps)},
          {"fit", {{"model", "l = slope * log(1/eps)^2 + intercept"},
                   {"slope", r.slope},
                   {"intercept", r.intercept},
                   {"points", r.fit_points}}}};
}

inline void net_csv(std::ostream& out, const NetReport& r) {
  out << "l,epsilon\n";
  char buf[64];
  for (std::size_t l = 0; l < r.epsilon.size(); ++l) {
    std::snprintf(buf, sizeof buf, "%.17g", r.epsilon[l]);
    out << l << ',' << buf << '\n';
  }
}

inline json rep04_json(const FibRep04& rep) {
  return {{"sigma1", matrix_json(rep.sigma1)},
          {"sigma2", matrix_json(rep.sigma2)},
          {"fusion", matrix_json(rep.fusion)},
          {"sign_variant", matrix_json(rep.sign_variant)}};
}

} // namespace jwrep::io
