#include "gss/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace gss::infotheory {

double shannon_entropy(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 1e-14) h -= p * std::log2(p);
  return h;
}

double von_neumann_entropy(const Matrix& rho, const Tolerances& tols) {
  const auto ev = hermitian_eigenvalues(rho, tols.hermiticity);
  double h = 0.0;
  for (double v : ev)
    if (v > tols.entropy_cutoff) h -= v * std::log2(v);
  return h;
}

double von_neumann_entropy(const QuantumState& s, const Tolerances& tols) {
  if (s.is_pure()) return 0.0;
  return von_neumann_entropy(s.density(), tols);
}

double relative_entropy(const Matrix& rho, const Matrix& sigma, const Tolerances& tols) {
  if (rho.rows() != sigma.rows()) throw Error("relative_entropy: dimension mismatch");
  const auto es = hermitian_eigen(sigma, tols.hermiticity);
  // tr rho log sigma over the support; mass outside gives the +inf sentinel.
  double tr_rho_log_sigma = 0.0;
  double outside = 0.0;
  const std::size_t n = sigma.rows();
  for (std::size_t k = 0; k < n; ++k) {
    // <w_k| rho |w_k>
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      cplx row{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * es.vectors(j, k);
      acc += std::conj(es.vectors(i, k)) * row;
    }
    const double w = acc.real();
    if (es.values[k] > tols.support_cutoff)
      tr_rho_log_sigma += w * std::log2(es.values[k]);
    else
      outside += w;
  }
  if (outside > 1e-10) return std::numeric_limits<double>::infinity();
  return -von_neumann_entropy(rho, tols) - tr_rho_log_sigma;
}

double relative_entropy(const QuantumState& rho, const QuantumState& sigma,
                        const Tolerances& tols) {
  return relative_entropy(rho.to_density(), sigma.to_density(), tols);
}

double mutual_information(const OutcomeDistribution& joint, std::size_t x_digits) {
  if (x_digits == 0 || x_digits >= joint.dims.size())
    throw Error("mutual_information: x_digits must split the outcome string");
  std::map<std::vector<int>, double> px, py;
  std::vector<double> pxy;
  for (const auto& [key, p] : joint.probs) {
    if (p <= 1e-14) continue;
    pxy.push_back(p);
    std::vector<int> x(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(x_digits));
    std::vector<int> y(key.begin() + static_cast<std::ptrdiff_t>(x_digits), key.end());
    px[x] += p;
    py[y] += p;
  }
  std::vector<double> vx, vy;
  for (const auto& [k, p] : px) vx.push_back(p);
  for (const auto& [k, p] : py) vy.push_back(p);
  return shannon_entropy(vx) + shannon_entropy(vy) - shannon_entropy(pxy);
}

double holevo_information(const HolevoQuery& q, const Tolerances& tols) {
  std::set<std::string> measured(q.measured.begin(), q.measured.end());
  for (const auto& c : q.coalition)
    if (measured.count(c)) throw Error("holevo_information: measured and coalition overlap");

  QuantumState state = q.state;
  if (q.include_reference && !state.is_pure()) state = qmath::purify(state, tols.rank_cutoff);

  std::vector<std::string> coalition = q.coalition;
  if (q.include_reference)
    for (const auto& r : state.layout().reference_labels())
      if (!std::count(coalition.begin(), coalition.end(), r)) coalition.push_back(r);

  const auto m = qmath::measure_computational(state, q.measured, tols);
  if (coalition.empty()) return 0.0;

  Matrix avg;
  double chi_subtract = 0.0;
  bool first = true;
  for (const auto& [key, p] : m.distribution.probs) {
    const auto cond = qmath::partial_trace(m.conditionals.at(key), coalition);
    chi_subtract += p * von_neumann_entropy(cond.density(), tols);
    Matrix weighted = cond.density();
    weighted *= cplx{p, 0.0};
    if (first) {
      avg = std::move(weighted);
      first = false;
    } else {
      avg += weighted;
    }
  }
  if (first) throw Error("holevo_information: no measurement outcome above the probability cutoff");
  return von_neumann_entropy(avg, tols) - chi_subtract;
}

}  // namespace gss::infotheory
