#include "gss/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gss {

namespace {

void validate_pure(const std::vector<cplx>& amps, const Tolerances& tols) {
  double n2 = 0.0;
  for (const auto& a : amps) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > tols.pure_norm) {
    std::ostringstream msg;
    msg << "pure state norm " << std::sqrt(n2) << " is not 1 within " << tols.pure_norm;
    throw Error(msg.str());
  }
}

void validate_mixed(const Matrix& rho, const Tolerances& tols) {
  if (rho.rows() != rho.cols()) throw Error("density operator must be square");
  const double h = rho.hermiticity_defect();
  if (h > tols.hermiticity) {
    std::ostringstream msg;
    msg << "density operator not Hermitian: max asymmetry " << h;
    throw Error(msg.str());
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tols.trace_one) {
    std::ostringstream msg;
    msg << "density operator trace " << tr << " is not 1 within " << tols.trace_one;
    throw Error(msg.str());
  }
}

}  // namespace

QuantumState QuantumState::pure(SystemLayout layout, std::vector<cplx> amplitudes,
                                const Tolerances& tols) {
  if (amplitudes.size() != layout.total_dim())
    throw Error("amplitude vector length does not match the layout dimension");
  validate_pure(amplitudes, tols);
  QuantumState s;
  s.layout_ = std::move(layout);
  s.is_pure_ = true;
  s.amps_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::mixed(SystemLayout layout, Matrix density, const Tolerances& tols) {
  if (density.rows() != layout.total_dim())
    throw Error("density operator size does not match the layout dimension");
  validate_mixed(density, tols);
  QuantumState s;
  s.layout_ = std::move(layout);
  s.is_pure_ = false;
  s.rho_ = std::move(density);
  return s;
}

const std::vector<cplx>& QuantumState::amplitudes() const {
  if (!is_pure_) throw Error("state is mixed; no amplitude vector");
  return amps_;
}

const Matrix& QuantumState::density() const {
  if (is_pure_) throw Error("state is pure; promote with to_density()");
  return rho_;
}

Matrix QuantumState::to_density() const {
  if (!is_pure_) return rho_;
  return outer(amps_);
}

double QuantumState::min_eigenvalue() const {
  if (is_pure_) return 0.0;
  const auto ev = hermitian_eigenvalues(rho_);
  return ev.empty() ? 0.0 : ev.back();
}

void QuantumState::relabel(const std::vector<std::string>& new_labels) {
  if (new_labels.size() != layout_.size()) throw Error("relabel: wrong number of labels");
  std::vector<Subsystem> subs = layout_.subsystems();
  for (std::size_t i = 0; i < subs.size(); ++i) subs[i].label = new_labels[i];
  layout_ = SystemLayout(subs);
}

void QuantumState::set_role(const std::string& label, Role role) {
  std::vector<Subsystem> subs = layout_.subsystems();
  subs[layout_.position(label)].role = role;
  layout_ = SystemLayout(subs);
}

LocalOperator LocalOperator::unitary(std::vector<std::string> targets, Matrix m,
                                     const Tolerances& tols) {
  const double defect = m.unitarity_defect();
  if (defect > tols.unitarity) {
    std::ostringstream msg;
    msg << "operator is not unitary: max |UU^dag - I| = " << defect;
    throw Error(msg.str());
  }
  return LocalOperator{std::move(targets), std::move(m), Kind::Unitary};
}

LocalOperator LocalOperator::general(std::vector<std::string> targets, Matrix m) {
  return LocalOperator{std::move(targets), std::move(m), Kind::General};
}

double OutcomeDistribution::total() const {
  double t = 0.0;
  for (const auto& [k, p] : probs) t += p;
  return t;
}

std::size_t OutcomeDistribution::common_dim() const {
  if (dims.empty()) throw Error("empty outcome distribution");
  for (std::size_t d : dims)
    if (d != dims[0]) throw Error("measured subsystems have unequal dimensions");
  return dims[0];
}

namespace qmath {

namespace {

// Split of the composite index into a chosen group of subsystems (in caller
// order) and the rest (in layout order).
struct Splitter {
  std::size_t group_dim = 1;
  std::size_t rest_dim = 1;
  std::vector<std::size_t> group_of;  // full index -> group composite
  std::vector<std::size_t> rest_of;   // full index -> rest composite
  std::vector<std::size_t> fused;     // group * rest_dim + rest -> full index
  std::vector<std::size_t> group_dims;
  std::vector<std::size_t> rest_positions;

  Splitter(const SystemLayout& layout, const std::vector<std::size_t>& group_positions) {
    const std::size_t k = layout.size();
    const std::size_t total = layout.total_dim();
    std::vector<bool> in_group(k, false);
    for (std::size_t p : group_positions) in_group[p] = true;
    for (std::size_t p : group_positions) {
      group_dims.push_back(layout[p].dim);
      group_dim *= layout[p].dim;
    }
    for (std::size_t p = 0; p < k; ++p)
      if (!in_group[p]) {
        rest_positions.push_back(p);
        rest_dim *= layout[p].dim;
      }

    // Stride of each subsystem in the full index.
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t p = k; p-- > 1;) stride[p - 1] = stride[p] * layout[p].dim;

    group_of.assign(total, 0);
    rest_of.assign(total, 0);
    fused.assign(total, 0);
    std::vector<std::size_t> digit(k);
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t rem = x;
      for (std::size_t p = 0; p < k; ++p) {
        digit[p] = rem / stride[p];
        rem %= stride[p];
      }
      std::size_t g = 0;
      for (std::size_t t = 0; t < group_positions.size(); ++t)
        g = g * layout[group_positions[t]].dim + digit[group_positions[t]];
      std::size_t r = 0;
      for (std::size_t p : rest_positions) r = r * layout[p].dim + digit[p];
      group_of[x] = g;
      rest_of[x] = r;
      fused[g * rest_dim + r] = x;
    }
  }

  std::vector<int> group_digits(std::size_t g) const {
    std::vector<int> out(group_dims.size());
    for (std::size_t t = group_dims.size(); t-- > 0;) {
      out[t] = static_cast<int>(g % group_dims[t]);
      g /= group_dims[t];
    }
    return out;
  }
};

}  // namespace

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  SystemLayout layout = a.layout().concat(b.layout());
  if (a.is_pure() && b.is_pure())
    return QuantumState::pure(std::move(layout), kron(a.amplitudes(), b.amplitudes()));
  return QuantumState::mixed(std::move(layout), kron(a.to_density(), b.to_density()));
}

QuantumState partial_trace(const QuantumState& s, const std::vector<std::string>& keep) {
  if (keep.empty()) throw Error("partial_trace: keep set must be nonempty");
  const auto positions = s.layout().positions(keep);
  const Splitter sp(s.layout(), positions);
  Matrix out(sp.group_dim, sp.group_dim);
  if (s.is_pure()) {
    const auto& psi = s.amplitudes();
    for (std::size_t g = 0; g < sp.group_dim; ++g)
      for (std::size_t h = g; h < sp.group_dim; ++h) {
        cplx acc{0.0, 0.0};
        const std::size_t* fg = &sp.fused[g * sp.rest_dim];
        const std::size_t* fh = &sp.fused[h * sp.rest_dim];
        for (std::size_t r = 0; r < sp.rest_dim; ++r) acc += psi[fg[r]] * std::conj(psi[fh[r]]);
        out(g, h) = acc;
        out(h, g) = std::conj(acc);
      }
  } else {
    const auto& rho = s.density();
    for (std::size_t g = 0; g < sp.group_dim; ++g)
      for (std::size_t h = g; h < sp.group_dim; ++h) {
        cplx acc{0.0, 0.0};
        const std::size_t* fg = &sp.fused[g * sp.rest_dim];
        const std::size_t* fh = &sp.fused[h * sp.rest_dim];
        for (std::size_t r = 0; r < sp.rest_dim; ++r) acc += rho(fg[r], fh[r]);
        out(g, h) = acc;
        out(h, g) = std::conj(acc);
      }
  }
  return QuantumState::mixed(s.layout().subset(positions), std::move(out));
}

Matrix partial_transpose(const QuantumState& s, const std::vector<std::string>& subset) {
  const auto positions = s.layout().positions(subset);
  const Splitter sp(s.layout(), positions);
  const Matrix rho = s.to_density();
  const std::size_t n = rho.rows();
  Matrix out(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t gx = sp.group_of[x];
    const std::size_t rx = sp.rest_of[x];
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xp = sp.fused[sp.group_of[y] * sp.rest_dim + rx];
      const std::size_t yp = sp.fused[gx * sp.rest_dim + sp.rest_of[y]];
      out(xp, yp) = rho(x, y);
    }
  }
  return out;
}

QuantumState permute_subsystems(const QuantumState& s, const std::vector<std::string>& new_order) {
  const auto positions = s.layout().positions(new_order);
  if (positions.size() != s.layout().size())
    throw Error("permute_subsystems: new order must list every subsystem exactly once");
  const SystemLayout out_layout = s.layout().permuted(positions);
  // The "group" is the whole system in the new order; its composite index is
  // the new index.
  const Splitter sp(s.layout(), positions);
  const std::size_t n = s.dim();
  if (s.is_pure()) {
    const auto& psi = s.amplitudes();
    std::vector<cplx> out(n);
    for (std::size_t x = 0; x < n; ++x) out[sp.group_of[x]] = psi[x];
    return QuantumState::pure(out_layout, std::move(out));
  }
  const auto& rho = s.density();
  Matrix out(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out(sp.group_of[x], sp.group_of[y]) = rho(x, y);
  return QuantumState::mixed(out_layout, std::move(out));
}

QuantumState apply_local(const LocalOperator& op, const QuantumState& s) {
  const auto positions = s.layout().positions(op.targets);
  const Splitter sp(s.layout(), positions);
  if (op.matrix.rows() != sp.group_dim || op.matrix.cols() != sp.group_dim) {
    std::ostringstream msg;
    msg << "apply_local: operator size " << op.matrix.rows() << " does not match target dimension "
        << sp.group_dim;
    throw Error(msg.str());
  }
  const Matrix& u = op.matrix;
  if (s.is_pure()) {
    const auto& psi = s.amplitudes();
    std::vector<cplx> out(psi.size(), cplx{0.0, 0.0});
    for (std::size_t r = 0; r < sp.rest_dim; ++r) {
      for (std::size_t g = 0; g < sp.group_dim; ++g) {
        cplx acc{0.0, 0.0};
        for (std::size_t h = 0; h < sp.group_dim; ++h)
          acc += u(g, h) * psi[sp.fused[h * sp.rest_dim + r]];
        out[sp.fused[g * sp.rest_dim + r]] = acc;
      }
    }
    return QuantumState::pure(s.layout(), std::move(out));
  }
  const auto& rho = s.density();
  Matrix out(rho.rows(), rho.cols());
  Matrix block(sp.group_dim, sp.group_dim);
  for (std::size_t r1 = 0; r1 < sp.rest_dim; ++r1)
    for (std::size_t r2 = 0; r2 < sp.rest_dim; ++r2) {
      for (std::size_t g = 0; g < sp.group_dim; ++g)
        for (std::size_t h = 0; h < sp.group_dim; ++h)
          block(g, h) = rho(sp.fused[g * sp.rest_dim + r1], sp.fused[h * sp.rest_dim + r2]);
      const Matrix updated = u * block * u.adjoint();
      for (std::size_t g = 0; g < sp.group_dim; ++g)
        for (std::size_t h = 0; h < sp.group_dim; ++h)
          out(sp.fused[g * sp.rest_dim + r1], sp.fused[h * sp.rest_dim + r2]) = updated(g, h);
    }
  return QuantumState::mixed(s.layout(), std::move(out));
}

QuantumState purify(const QuantumState& s, double rank_tol) {
  SystemLayout layout = s.layout();
  const std::string ref_label = layout.fresh_label("E");
  if (s.is_pure()) {
    std::vector<Subsystem> subs = layout.subsystems();
    subs.push_back(Subsystem{ref_label, 0, Role::Reference, 1});
    return QuantumState::pure(SystemLayout(subs), s.amplitudes());
  }
  const auto es = hermitian_eigen(s.density());
  std::size_t rank = 0;
  while (rank < es.values.size() && es.values[rank] > rank_tol) ++rank;
  if (rank == 0) throw Error("purify: state has no spectral weight above the rank cutoff");
  const std::size_t n = s.dim();
  std::vector<cplx> psi(n * rank, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < rank; ++k) {
    const double w = std::sqrt(es.values[k]);
    for (std::size_t x = 0; x < n; ++x) psi[x * rank + k] = w * es.vectors(x, k);
  }
  std::vector<Subsystem> subs = layout.subsystems();
  subs.push_back(Subsystem{ref_label, 0, Role::Reference, rank});
  // Renormalize: truncating eigenvalues below the cutoff sheds their mass.
  double n2 = 0.0;
  for (const auto& a : psi) n2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : psi) a *= inv;
  return QuantumState::pure(SystemLayout(subs), std::move(psi));
}

MeasurementResult measure_computational(const QuantumState& s,
                                        const std::vector<std::string>& targets,
                                        const Tolerances& tols) {
  if (targets.empty()) throw Error("measure_computational: target set must be nonempty");
  const auto positions = s.layout().positions(targets);
  const Splitter sp(s.layout(), positions);
  const SystemLayout remaining = s.layout().subset(sp.rest_positions);

  MeasurementResult result;
  result.distribution.labels = targets;
  result.distribution.dims = sp.group_dims;

  if (s.is_pure()) {
    const auto& psi = s.amplitudes();
    for (std::size_t g = 0; g < sp.group_dim; ++g) {
      const std::size_t* f = &sp.fused[g * sp.rest_dim];
      double p = 0.0;
      for (std::size_t r = 0; r < sp.rest_dim; ++r) p += std::norm(psi[f[r]]);
      if (p < tols.prob_cutoff) continue;
      const auto key = sp.group_digits(g);
      result.distribution.probs[key] = p;
      std::vector<cplx> cond(sp.rest_dim);
      const double inv = 1.0 / std::sqrt(p);
      for (std::size_t r = 0; r < sp.rest_dim; ++r) cond[r] = psi[f[r]] * inv;
      result.conditionals.emplace(key, QuantumState::pure(remaining, std::move(cond)));
    }
  } else {
    const auto& rho = s.density();
    for (std::size_t g = 0; g < sp.group_dim; ++g) {
      const std::size_t* f = &sp.fused[g * sp.rest_dim];
      double p = 0.0;
      for (std::size_t r = 0; r < sp.rest_dim; ++r) p += rho(f[r], f[r]).real();
      if (p < tols.prob_cutoff) continue;
      const auto key = sp.group_digits(g);
      result.distribution.probs[key] = p;
      Matrix cond(sp.rest_dim, sp.rest_dim);
      const double inv = 1.0 / p;
      for (std::size_t r = 0; r < sp.rest_dim; ++r)
        for (std::size_t q = 0; q < sp.rest_dim; ++q) cond(r, q) = rho(f[r], f[q]) * inv;
      result.conditionals.emplace(key, QuantumState::mixed(remaining, std::move(cond)));
    }
  }
  return result;
}

LocalOperator shift_operator(const QuantumState& s, const std::string& label, int shift) {
  const int d = static_cast<int>(s.layout()[s.layout().position(label)].dim);
  const int m = ((shift % d) + d) % d;
  Matrix t(d, d);
  for (int i = 0; i < d; ++i) t((i + m) % d, i) = 1.0;
  return LocalOperator::unitary({label}, std::move(t));
}

}  // namespace qmath

}  // namespace gss
