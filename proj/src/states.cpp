#include "gss/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gss::states {

namespace {

SystemLayout secret_layout(int n, int d, const std::string& prefix = "A") {
  std::vector<Subsystem> subs;
  for (int i = 1; i <= n; ++i)
    subs.push_back({prefix + std::to_string(i), i, Role::Secret, static_cast<std::size_t>(d)});
  return SystemLayout(subs);
}

SystemLayout shield_layout(int n, const std::vector<std::size_t>& dims,
                           const std::string& suffix = "'") {
  std::vector<Subsystem> subs;
  for (int i = 1; i <= n; ++i)
    subs.push_back({"A" + std::to_string(i) + suffix, i, Role::Shield, dims[i - 1]});
  return SystemLayout(subs);
}

// Operator on a subset of a mixed-radix space, embedded with identities.
Matrix embed_operator(const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& positions, const Matrix& u) {
  std::vector<Subsystem> subs;
  for (std::size_t i = 0; i < dims.size(); ++i)
    subs.push_back({"t" + std::to_string(i), 0, Role::Shield, dims[i]});
  SystemLayout layout{subs};
  std::vector<std::string> targets;
  for (std::size_t p : positions) targets.push_back(layout[p].label);
  // Column-by-column application of the embedded operator.
  const std::size_t total = layout.total_dim();
  Matrix out(total, total);
  for (std::size_t c = 0; c < total; ++c) {
    std::vector<cplx> v(total, cplx{0.0, 0.0});
    v[c] = 1.0;
    auto col = qmath::apply_local(LocalOperator::general(targets, u),
                                  QuantumState::pure(layout, std::move(v)));
    for (std::size_t r = 0; r < total; ++r) out(r, c) = col.amplitudes()[r];
  }
  return out;
}

int mod_d(int x, int d) { return ((x % d) + d) % d; }

}  // namespace

std::vector<std::vector<int>> parity_class(int n, int d, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> digits(n, 0);
  const std::size_t count = static_cast<std::size_t>(std::pow(d, n - 1));
  out.reserve(count);
  // Enumerate the first n-1 digits freely; the last is forced.
  std::size_t total = 1;
  for (int i = 0; i < n - 1; ++i) total *= d;
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t rem = x;
    int sum = 0;
    for (int i = n - 2; i >= 0; --i) {
      digits[i] = static_cast<int>(rem % d);
      sum += digits[i];
      rem /= d;
    }
    digits[n - 1] = mod_d(t - sum, d);
    out.push_back(digits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuantumState ghz_state(int n, int d) {
  if (n < 2 || d < 2) throw Error("ghz_state: need n >= 2 and d >= 2");
  SystemLayout layout = secret_layout(n, d);
  std::vector<cplx> amps(layout.total_dim(), cplx{0.0, 0.0});
  const double a = std::pow(static_cast<double>(d), -0.5 * (n - 1));
  for (const auto& digits : parity_class(n, d, 0)) {
    std::size_t idx = 0;
    for (int v : digits) idx = idx * d + static_cast<std::size_t>(v);
    amps[idx] = a;
  }
  return QuantumState::pure(layout, std::move(amps));
}

std::size_t GssSpec::shield_dim_total() const {
  std::size_t t = 1;
  for (std::size_t s : shield_dims) t *= s;
  return t;
}

void GssSpec::validate(const Tolerances& tols) const {
  if (n < 2 || d < 2) throw Error("GssSpec: need n >= 2 and d >= 2");
  if (static_cast<int>(shield_dims.size()) != n) throw Error("GssSpec: shield_dims size != n");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  if (static_cast<int>(order.size()) != n) throw Error("GssSpec: order size != n");
  for (int p : order) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p)])
      throw Error("GssSpec: order is not a permutation of 1..n");
    seen[static_cast<std::size_t>(p)] = true;
  }
  if (pair_families.size() != static_cast<std::size_t>(n - 1))
    throw Error("GssSpec: need n-1 pair families");
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    const std::size_t dim =
        shield_dims[static_cast<std::size_t>(order[t] - 1)] *
        shield_dims[static_cast<std::size_t>(order[t + 1] - 1)];
    const auto& fam = pair_families[t];
    if (fam.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d))
      throw Error("GssSpec: pair family must have d*d members");
    for (const auto& u : fam) {
      if (u.rows() != dim || u.cols() != dim) {
        std::ostringstream msg;
        msg << "GssSpec: pair unitary size " << u.rows() << " does not match shield pair dimension "
            << dim;
        throw Error(msg.str());
      }
      if (u.unitarity_defect() > tols.unitarity)
        throw Error("GssSpec: pair family member is not unitary");
    }
    if ((fam[0] - Matrix::identity(dim)).max_abs() > 1e-12)
      throw Error("GssSpec: the (0,0) member of each pair family must be the identity");
  }
  if (sigma.dim() != shield_dim_total())
    throw Error("GssSpec: sigma dimension does not match the shield space");
}

GssSpec random_gss_spec(int n, int d, const std::vector<std::size_t>& shield_dims,
                        std::uint64_t seed, bool pure_sigma) {
  // Certified sub-family of the chained form: every player's shield is
  // twisted by a unitary controlled on that player's own dit. The chained
  // product then splits as required by the structure theorem for every
  // bipartition, which a free choice of pair families does not guarantee.
  Rng rng(seed);
  GssSpec spec;
  spec.n = n;
  spec.d = d;
  spec.shield_dims = shield_dims;
  spec.order.resize(n);
  std::iota(spec.order.begin(), spec.order.end(), 1);
  for (std::size_t i = spec.order.size(); i > 1; --i)
    std::swap(spec.order[i - 1], spec.order[rng.pick(i)]);

  std::vector<std::vector<Matrix>> own(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const std::size_t dim = shield_dims[static_cast<std::size_t>(k)];
    own[static_cast<std::size_t>(k)].push_back(Matrix::identity(dim));
    for (int i = 1; i < d; ++i)
      own[static_cast<std::size_t>(k)].push_back(dim == 1 ? Matrix::identity(1)
                                                          : random_unitary(dim, rng));
  }
  for (int t = 0; t + 1 < n; ++t) {
    const std::size_t left = static_cast<std::size_t>(spec.order[t] - 1);
    const std::size_t right = static_cast<std::size_t>(spec.order[t + 1] - 1);
    std::vector<Matrix> fam;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Matrix& ga = (t == 0) ? own[left][static_cast<std::size_t>(a)]
                                    : Matrix::identity(shield_dims[left]);
        fam.push_back(kron(ga, own[right][static_cast<std::size_t>(b)]));
      }
    spec.pair_families.push_back(std::move(fam));
  }
  SystemLayout shields = shield_layout(n, shield_dims);
  if (pure_sigma)
    spec.sigma = QuantumState::pure(shields, random_pure(shields.total_dim(), rng));
  else
    spec.sigma = QuantumState::mixed(shields, random_density(shields.total_dim(), rng));
  return spec;
}

GssSpec random_free_chain_spec(int n, int d, const std::vector<std::size_t>& shield_dims,
                               std::uint64_t seed, bool pure_sigma) {
  // Arbitrary unitary pair families: the state keeps the chained FORM (so
  // condition (i) holds exactly) but generically leaks to some coalition.
  Rng rng(seed);
  GssSpec spec;
  spec.n = n;
  spec.d = d;
  spec.shield_dims = shield_dims;
  spec.order.resize(n);
  std::iota(spec.order.begin(), spec.order.end(), 1);
  for (int t = 0; t + 1 < n; ++t) {
    const std::size_t dim = shield_dims[static_cast<std::size_t>(spec.order[t] - 1)] *
                            shield_dims[static_cast<std::size_t>(spec.order[t + 1] - 1)];
    std::vector<Matrix> fam;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        fam.push_back((a == 0 && b == 0) ? Matrix::identity(dim) : random_unitary(dim, rng));
    spec.pair_families.push_back(std::move(fam));
  }
  SystemLayout shields = shield_layout(n, shield_dims);
  if (pure_sigma)
    spec.sigma = QuantumState::pure(shields, random_pure(shields.total_dim(), rng));
  else
    spec.sigma = QuantumState::mixed(shields, random_density(shields.total_dim(), rng));
  return spec;
}

Matrix chained_twist(const GssSpec& spec, const std::vector<int>& digits) {
  const std::size_t total = spec.shield_dim_total();
  Matrix u = Matrix::identity(total);
  int partial = 0;
  for (std::size_t t = 0; t + 1 < spec.order.size(); ++t) {
    const int lt = spec.order[t];
    const int lnext = spec.order[t + 1];
    partial = mod_d(partial + digits[static_cast<std::size_t>(lt - 1)], spec.d);
    const int a = partial;
    const int b = digits[static_cast<std::size_t>(lnext - 1)];
    const Matrix& pair_u = spec.pair_families[t][static_cast<std::size_t>(a * spec.d + b)];
    const Matrix emb = embed_operator(
        spec.shield_dims,
        {static_cast<std::size_t>(lt - 1), static_cast<std::size_t>(lnext - 1)}, pair_u);
    // Factors act right-to-left; the first chain factor is leftmost.
    u = (t == 0) ? emb : u * emb;
  }
  return u;
}

QuantumState gss_from_spec(const GssSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int d = spec.d;
  SystemLayout layout = secret_layout(n, d).concat(shield_layout(n, spec.shield_dims));
  const std::size_t dsh = spec.shield_dim_total();
  const auto support = parity_class(n, d, 0);

  std::vector<Matrix> twists;
  twists.reserve(support.size());
  for (const auto& digits : support) twists.push_back(chained_twist(spec, digits));

  auto index_of = [&](const std::vector<int>& digits) {
    std::size_t idx = 0;
    for (int v : digits) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
    return idx;
  };

  if (spec.sigma.is_pure()) {
    std::vector<cplx> amps(layout.total_dim(), cplx{0.0, 0.0});
    const double a = std::pow(static_cast<double>(d), -0.5 * (n - 1));
    for (std::size_t k = 0; k < support.size(); ++k) {
      const auto twisted = twists[k].apply(spec.sigma.amplitudes());
      const std::size_t base = index_of(support[k]) * dsh;
      for (std::size_t x = 0; x < dsh; ++x) amps[base + x] = a * twisted[x];
    }
    return QuantumState::pure(std::move(layout), std::move(amps));
  }

  Matrix rho(layout.total_dim(), layout.total_dim());
  const double w = std::pow(static_cast<double>(d), -(n - 1));
  std::vector<Matrix> usig;
  usig.reserve(support.size());
  for (const auto& t : twists) usig.push_back(t * spec.sigma.density());
  for (std::size_t ki = 0; ki < support.size(); ++ki) {
    const std::size_t ri = index_of(support[ki]) * dsh;
    for (std::size_t kj = 0; kj < support.size(); ++kj) {
      const std::size_t cj = index_of(support[kj]) * dsh;
      const Matrix block = usig[ki] * twists[kj].adjoint();
      for (std::size_t x = 0; x < dsh; ++x)
        for (std::size_t y = 0; y < dsh; ++y) rho(ri + x, cj + y) = w * block(x, y);
    }
  }
  return QuantumState::mixed(std::move(layout), std::move(rho));
}

QuantumState upsilon1() {
  SystemLayout layout = secret_layout(3, 2).concat(shield_layout(3, {2, 2, 2}));
  std::vector<cplx> amps(64, cplx{0.0, 0.0});
  amps[0b000000] = amps[0b011000] = amps[0b101001] = amps[0b110001] = 0.5;
  return QuantumState::pure(std::move(layout), std::move(amps));
}

QuantumState upsilon2() {
  SystemLayout layout = secret_layout(4, 2).concat(shield_layout(4, {2, 2, 2, 2}));
  std::vector<cplx> amps(256, cplx{0.0, 0.0});
  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  // Secret-part kets with all-zero shields; signs as listed.
  const std::vector<std::pair<int, double>> terms = {
      {0b0000, +1}, {0b0011, +1}, {0b0101, +1}, {0b0110, +1},
      {0b1001, +1}, {0b1010, -1}, {0b1100, +1}, {0b1111, -1}};
  for (const auto& [secret, sign] : terms) amps[static_cast<std::size_t>(secret) << 4] = sign * a;
  return QuantumState::pure(std::move(layout), std::move(amps));
}

PrivateStateSpec random_private_spec(int d, std::array<std::size_t, 2> shield_dims,
                                     std::uint64_t seed, bool pure_sigma) {
  Rng rng(seed);
  PrivateStateSpec spec;
  spec.d = d;
  spec.shield_dims = shield_dims;
  const std::size_t dim = shield_dims[0] * shield_dims[1];
  spec.twists.push_back(Matrix::identity(dim));
  for (int i = 1; i < d; ++i) spec.twists.push_back(random_unitary(dim, rng));
  spec.sigma = pure_sigma ? outer(random_pure(dim, rng)) : random_density(dim, rng);
  return spec;
}

PrivateStateSpec bell_private_spec(int d) {
  PrivateStateSpec spec;
  spec.d = d;
  spec.shield_dims = {1, 1};
  for (int i = 0; i < d; ++i) spec.twists.push_back(Matrix::identity(1));
  spec.sigma = Matrix(1, 1);
  spec.sigma(0, 0) = 1.0;
  return spec;
}

QuantumState private_state(const PrivateStateSpec& spec,
                           const std::array<std::string, 2>& key_labels,
                           const std::array<std::string, 2>& shield_labels,
                           const std::array<int, 2>& players) {
  const int d = spec.d;
  const std::size_t dsh = spec.shield_dims[0] * spec.shield_dims[1];
  if (spec.twists.size() != static_cast<std::size_t>(d))
    throw Error("private_state: need d twist unitaries");
  for (const auto& u : spec.twists) {
    if (u.rows() != dsh) throw Error("private_state: twist size does not match the shield pair");
    if (u.unitarity_defect() > default_tolerances().unitarity)
      throw Error("private_state: twist is not unitary");
  }
  if (spec.sigma.rows() != dsh) throw Error("private_state: sigma does not match the shield pair");

  SystemLayout layout({{key_labels[0], players[0], Role::Secret, static_cast<std::size_t>(d)},
                       {key_labels[1], players[1], Role::Secret, static_cast<std::size_t>(d)},
                       {shield_labels[0], players[0], Role::Shield, spec.shield_dims[0]},
                       {shield_labels[1], players[1], Role::Shield, spec.shield_dims[1]}});

  // Pure sigma gives a pure twisted state.
  const auto es = hermitian_eigen(spec.sigma);
  if (es.values[0] > 1.0 - 1e-12) {
    std::vector<cplx> sig_vec(dsh);
    for (std::size_t x = 0; x < dsh; ++x) sig_vec[x] = es.vectors(x, 0);
    std::vector<cplx> amps(layout.total_dim(), cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
      const auto twisted = spec.twists[static_cast<std::size_t>(i)].apply(sig_vec);
      const std::size_t base =
          (static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)) *
          dsh;
      for (std::size_t x = 0; x < dsh; ++x) amps[base + x] = a * twisted[x];
    }
    return QuantumState::pure(std::move(layout), std::move(amps));
  }

  Matrix rho(layout.total_dim(), layout.total_dim());
  std::vector<Matrix> usig;
  for (int i = 0; i < d; ++i) usig.push_back(spec.twists[static_cast<std::size_t>(i)] * spec.sigma);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Matrix block = usig[static_cast<std::size_t>(i)] *
                           spec.twists[static_cast<std::size_t>(j)].adjoint();
      const std::size_t ri =
          (static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)) *
          dsh;
      const std::size_t cj =
          (static_cast<std::size_t>(j) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)) *
          dsh;
      for (std::size_t x = 0; x < dsh; ++x)
        for (std::size_t y = 0; y < dsh; ++y)
          rho(ri + x, cj + y) = block(x, y) / static_cast<double>(d);
    }
  return QuantumState::mixed(std::move(layout), std::move(rho));
}

QuantumState example1_network(const PrivateStateSpec& ab, const PrivateStateSpec& bc,
                              const PrivateStateSpec& ca) {
  auto gamma = private_state(ab, {"A1", "B2"}, {"A1'", "B2'"}, {1, 2});
  auto gamma_hat = private_state(bc, {"B1", "C2"}, {"B1'", "C2'"}, {2, 3});
  auto gamma_tilde = private_state(ca, {"C1", "A2"}, {"C1'", "A2'"}, {3, 1});
  return qmath::tensor(qmath::tensor(gamma, gamma_hat), gamma_tilde);
}

QuantumState apply_w_wiring(const QuantumState& s, const std::vector<WiringGroup>& groups) {
  QuantumState out = s;
  for (const auto& g : groups) {
    if (g.keys.size() < 2) throw Error("apply_w_wiring: each group needs at least two key parts");
    std::vector<int> signs = g.signs;
    if (signs.empty()) signs.assign(g.keys.size(), 1);
    if (signs.size() != g.keys.size())
      throw Error("apply_w_wiring: signs must match the key list");
    const auto& layout = out.layout();
    const std::size_t d = layout[layout.position(g.keys[0])].dim;
    std::size_t total = 1;
    for (const auto& k : g.keys) {
      if (layout[layout.position(k)].dim != d)
        throw Error("apply_w_wiring: key parts of a group must have equal dimension");
      total *= d;
    }
    // |k1 k2 ... km> -> |s k2 ... km>, s = sum of signed keys mod d.
    Matrix w(total, total);
    for (std::size_t col = 0; col < total; ++col) {
      std::size_t rem = col;
      std::vector<int> digits(g.keys.size());
      for (std::size_t t = g.keys.size(); t-- > 0;) {
        digits[t] = static_cast<int>(rem % d);
        rem /= d;
      }
      int sum = 0;
      for (std::size_t t = 0; t < digits.size(); ++t) sum += signs[t] * digits[t];
      std::size_t row = static_cast<std::size_t>(mod_d(sum, static_cast<int>(d)));
      for (std::size_t t = 1; t < digits.size(); ++t)
        row = row * d + static_cast<std::size_t>(digits[t]);
      w(row, col) = 1.0;
    }
    out = qmath::apply_local(LocalOperator::unitary(g.keys, std::move(w)), out);
    out.set_role(g.keys[0], Role::Secret);
    for (std::size_t t = 1; t < g.keys.size(); ++t) out.set_role(g.keys[t], Role::Shield);
  }
  return out;
}

QuantumState wire_example1(const QuantumState& network) {
  return apply_w_wiring(network, {WiringGroup{{"A1", "A2"}, {}},
                                  WiringGroup{{"B1", "B2"}, {}},
                                  WiringGroup{{"C1", "C2"}, {}}});
}

QuantumState network_gss(int n, int d, std::uint64_t seed, bool nontrivial_twists) {
  if (n < 2) throw Error("network_gss: need n >= 2");
  Rng seeder(seed);
  std::optional<QuantumState> state;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PrivateStateSpec spec =
          nontrivial_twists
              ? random_private_spec(d, {2, 2}, seeder.bits())
              : bell_private_spec(d);
      const std::string edge = std::to_string(i) + "_" + std::to_string(j);
      auto gamma = private_state(spec, {"K" + edge + "@" + std::to_string(i),
                                        "K" + edge + "@" + std::to_string(j)},
                                 {"S" + edge + "@" + std::to_string(i),
                                  "S" + edge + "@" + std::to_string(j)},
                                 {i, j});
      state = state ? qmath::tensor(*state, gamma) : gamma;
    }
  // Oriented wiring: player p adds keys of edges (p, j) and subtracts keys of
  // edges (i, p), so the secrets sum to zero mod d.
  std::vector<WiringGroup> groups;
  for (int p = 1; p <= n; ++p) {
    WiringGroup g;
    for (int j = p + 1; j <= n; ++j) {
      g.keys.push_back("K" + std::to_string(p) + "_" + std::to_string(j) + "@" + std::to_string(p));
      g.signs.push_back(1);
    }
    for (int i = 1; i < p; ++i) {
      g.keys.push_back("K" + std::to_string(i) + "_" + std::to_string(p) + "@" + std::to_string(p));
      g.signs.push_back(-1);
    }
    groups.push_back(std::move(g));
  }
  return apply_w_wiring(*state, groups);
}

Matrix flip_operator(int d) {
  Matrix f(static_cast<std::size_t>(d) * d, static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      f(static_cast<std::size_t>(i * d + j), static_cast<std::size_t>(j * d + i)) = 1.0;
  return f;
}

Matrix werner_symmetric_matrix(int d) {
  if (d < 2) throw Error("werner_symmetric: need d >= 2");
  Matrix m = Matrix::identity(static_cast<std::size_t>(d) * d) + flip_operator(d);
  m *= cplx{1.0 / (static_cast<double>(d) * d + d), 0.0};
  return m;
}

Matrix werner_antisymmetric_matrix(int d) {
  if (d < 2) throw Error("werner_antisymmetric: need d >= 2");
  Matrix m = Matrix::identity(static_cast<std::size_t>(d) * d) - flip_operator(d);
  m *= cplx{1.0 / (static_cast<double>(d) * d - d), 0.0};
  return m;
}

QuantumState werner_symmetric(int d) {
  SystemLayout layout({{"W1", 1, Role::Shield, static_cast<std::size_t>(d)},
                       {"W2", 2, Role::Shield, static_cast<std::size_t>(d)}});
  return QuantumState::mixed(layout, werner_symmetric_matrix(d));
}

QuantumState werner_antisymmetric(int d) {
  SystemLayout layout({{"W1", 1, Role::Shield, static_cast<std::size_t>(d)},
                       {"W2", 2, Role::Shield, static_cast<std::size_t>(d)}});
  return QuantumState::mixed(layout, werner_antisymmetric_matrix(d));
}

ShieldPair projector_shield_pair() {
  ShieldPair pair;
  pair.dims = {2, 2};
  pair.first = Matrix(4, 4);
  pair.first(0, 0) = 1.0;  // |00><00|
  pair.second = Matrix(4, 4);
  pair.second(3, 3) = 1.0;  // |11><11|
  return pair;
}

namespace {

void check_shield_pair(const ShieldPair& pair, const char* name) {
  const std::size_t dim = pair.dims[0] * pair.dims[1];
  if (pair.first.rows() != dim || pair.second.rows() != dim)
    throw Error(std::string("example2: shield pair ") + name + " has mismatched dimensions");
  const double overlap = (pair.first * pair.second).trace().real();
  if (std::abs(overlap) > 1e-10) {
    std::ostringstream msg;
    msg << "example2: shield pair " << name << " supports overlap: tr(ab) = " << overlap;
    throw Error(msg.str());
  }
}

// Amplitudes of Z-phased even-parity states psi_0..psi_3 on three qubits.
std::vector<cplx> psi_m(int m) {
  std::vector<cplx> v(8, cplx{0.0, 0.0});
  for (int i : {0b000, 0b011, 0b101, 0b110}) {
    double sign = 1.0;
    if (m == 1 && (i & 0b100)) sign = -1.0;  // Z on A
    if (m == 2 && (i & 0b010)) sign = -1.0;  // Z on B
    if (m == 3 && (i & 0b001)) sign = -1.0;  // Z on C
    v[static_cast<std::size_t>(i)] = 0.5 * sign;
  }
  return v;
}

SystemLayout example2_layout(const ShieldPair& rho, const ShieldPair& sigma,
                             const ShieldPair& tau) {
  return SystemLayout({{"A", 1, Role::Secret, 2},
                       {"B", 2, Role::Secret, 2},
                       {"C", 3, Role::Secret, 2},
                       {"A1'", 1, Role::Shield, rho.dims[0]},
                       {"B2'", 2, Role::Shield, rho.dims[1]},
                       {"B1'", 2, Role::Shield, sigma.dims[0]},
                       {"C2'", 3, Role::Shield, sigma.dims[1]},
                       {"C1'", 3, Role::Shield, tau.dims[0]},
                       {"A2'", 1, Role::Shield, tau.dims[1]}});
}

}  // namespace

QuantumState example2_orthogonal(const std::array<double, 4>& weights, const ShieldPair& rho,
                                 const ShieldPair& sigma, const ShieldPair& tau) {
  double sum = 0.0;
  for (double a : weights) {
    if (a < -1e-12) throw Error("example2_orthogonal: negative weight");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw Error("example2_orthogonal: weights must sum to 1");
  check_shield_pair(rho, "rho");
  check_shield_pair(sigma, "sigma");
  check_shield_pair(tau, "tau");

  SystemLayout layout = example2_layout(rho, sigma, tau);
  Matrix out(layout.total_dim(), layout.total_dim());
  const std::array<std::array<int, 3>, 4> pick = {{{0, 0, 0}, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}}};
  for (int m = 0; m < 4; ++m) {
    if (weights[static_cast<std::size_t>(m)] == 0.0) continue;
    const Matrix& r = pick[static_cast<std::size_t>(m)][0] ? rho.second : rho.first;
    const Matrix& s = pick[static_cast<std::size_t>(m)][1] ? sigma.second : sigma.first;
    const Matrix& t = pick[static_cast<std::size_t>(m)][2] ? tau.second : tau.first;
    Matrix term = kron(outer(psi_m(m)), kron(r, kron(s, t)));
    term *= cplx{weights[static_cast<std::size_t>(m)], 0.0};
    out += term;
  }
  return QuantumState::mixed(std::move(layout), std::move(out));
}

QuantumState example2_orthogonal(const std::array<double, 4>& weights) {
  const ShieldPair pair = projector_shield_pair();
  return example2_orthogonal(weights, pair, pair, pair);
}

GssSpec example2_orthogonal_as_spec(const std::array<double, 4>& weights, const ShieldPair& rho,
                                    const ShieldPair& sigma, const ShieldPair& tau) {
  // Support projector difference I - 2P(second): eigenvalue +1 on the first
  // state's support, -1 on the second's.
  auto sign_unitary = [](const ShieldPair& pair) {
    const std::size_t dim = pair.dims[0] * pair.dims[1];
    const auto es = hermitian_eigen(pair.second);
    Matrix u = Matrix::identity(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (es.values[k] <= 1e-12) continue;
      for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
          u(x, y) -= 2.0 * es.vectors(x, k) * std::conj(es.vectors(y, k));
    }
    return u;
  };
  const Matrix v = sign_unitary(sigma);  // on (B1', C2')
  const Matrix w = sign_unitary(tau);    // on (C1', A2')

  // Player shields flattened: A' = A1' (x) A2', B' = B1' (x) B2', C' = C1' (x) C2'.
  const std::array<std::size_t, 3> pdims = {rho.dims[0] * tau.dims[1],
                                            sigma.dims[0] * rho.dims[1],
                                            tau.dims[0] * sigma.dims[1]};
  GssSpec spec;
  spec.n = 3;
  spec.d = 2;
  spec.order = {2, 3, 1};  // B, C, A
  spec.shield_dims = {pdims[0], pdims[1], pdims[2]};

  // Pair (B, C): V^a on (B1', C2') inside B' (x) C' = (B1' B2') (x) (C1' C2').
  const std::vector<std::size_t> bc_dims = {sigma.dims[0], rho.dims[1], tau.dims[0],
                                            sigma.dims[1]};
  const Matrix v_emb = embed_operator(bc_dims, {0, 3}, v);
  // Pair (C, A): W^b on (C1', A2') inside C' (x) A' = (C1' C2') (x) (A1' A2').
  const std::vector<std::size_t> ca_dims = {tau.dims[0], sigma.dims[1], rho.dims[0],
                                            tau.dims[1]};
  const Matrix w_emb = embed_operator(ca_dims, {0, 3}, w);

  std::vector<Matrix> fam_bc, fam_ca;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      fam_bc.push_back(a == 0 ? Matrix::identity(v_emb.rows()) : v_emb);
      fam_ca.push_back(b == 0 ? Matrix::identity(w_emb.rows()) : w_emb);
    }
  spec.pair_families = {fam_bc, fam_ca};

  // sigma on player shields (A1' A2')(B1' B2')(C1' C2'), built by permuting
  // the natural pair order and summing the weighted product terms.
  SystemLayout pair_order({{"A1'", 1, Role::Shield, rho.dims[0]},
                           {"B2'", 2, Role::Shield, rho.dims[1]},
                           {"B1'", 2, Role::Shield, sigma.dims[0]},
                           {"C2'", 3, Role::Shield, sigma.dims[1]},
                           {"C1'", 3, Role::Shield, tau.dims[0]},
                           {"A2'", 1, Role::Shield, tau.dims[1]}});
  const std::array<std::array<int, 3>, 4> pick = {{{0, 0, 0}, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}}};
  Matrix sig_total(pair_order.total_dim(), pair_order.total_dim());
  for (int m = 0; m < 4; ++m) {
    if (weights[static_cast<std::size_t>(m)] == 0.0) continue;
    const Matrix& r = pick[static_cast<std::size_t>(m)][0] ? rho.second : rho.first;
    const Matrix& s = pick[static_cast<std::size_t>(m)][1] ? sigma.second : sigma.first;
    const Matrix& t = pick[static_cast<std::size_t>(m)][2] ? tau.second : tau.first;
    Matrix term = kron(r, kron(s, t));
    term *= cplx{weights[static_cast<std::size_t>(m)], 0.0};
    sig_total += term;
  }
  auto sig_state = QuantumState::mixed(pair_order, std::move(sig_total));
  sig_state = qmath::permute_subsystems(sig_state, {"A1'", "A2'", "B1'", "B2'", "C1'", "C2'"});
  SystemLayout flat({{"A1'", 1, Role::Shield, pdims[0]},
                     {"A2'", 2, Role::Shield, pdims[1]},
                     {"A3'", 3, Role::Shield, pdims[2]}});
  spec.sigma = QuantumState::mixed(flat, sig_state.density());
  return spec;
}

QuantumState example2_werner(int d, double p) {
  if (p < 0.0 || p > 0.5) throw Error("example2_werner: p must lie in [0, 1/2]");
  if (d < 2) throw Error("example2_werner: need d >= 2");
  const Matrix ws = werner_symmetric_matrix(d);
  const Matrix wa = werner_antisymmetric_matrix(d);
  ShieldPair sigma = projector_shield_pair();

  SystemLayout layout({{"A", 1, Role::Secret, 2},
                       {"B", 2, Role::Secret, 2},
                       {"C", 3, Role::Secret, 2},
                       {"A1'", 1, Role::Shield, static_cast<std::size_t>(d)},
                       {"B2'", 2, Role::Shield, static_cast<std::size_t>(d)},
                       {"B1'", 2, Role::Shield, 2},
                       {"C2'", 3, Role::Shield, 2},
                       {"C1'", 3, Role::Shield, static_cast<std::size_t>(d)},
                       {"A2'", 1, Role::Shield, static_cast<std::size_t>(d)}});
  Matrix out(layout.total_dim(), layout.total_dim());
  const std::array<double, 4> weights = {p, p, 0.5 - p, 0.5 - p};
  for (int m = 0; m < 4; ++m) {
    if (weights[static_cast<std::size_t>(m)] == 0.0) continue;
    const Matrix& r = (m == 1 || m == 2) ? wa : ws;
    const Matrix& s = (m < 2) ? sigma.first : sigma.second;
    const Matrix& t = (m == 1 || m == 3) ? wa : ws;
    Matrix term = kron(outer(psi_m(m)), kron(r, kron(s, t)));
    term *= cplx{weights[static_cast<std::size_t>(m)], 0.0};
    out += term;
  }
  return QuantumState::mixed(std::move(layout), std::move(out));
}

double example2_werner_formula(int d, double p) {
  const double dd = static_cast<double>(d);
  return 1.0 + (2.0 / (dd * dd) + 2.0 / dd) * (1.0 + 2.0 * p);
}

Matrix bell_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix b(4, 4);
  // Columns: Phi+ = (|00>+|11>)/sqrt2, Psi+ = (|01>+|10>)/sqrt2,
  //          Psi- = (|01>-|10>)/sqrt2, Phi- = (|00>-|11>)/sqrt2.
  b(0, 0) = r;
  b(3, 0) = r;
  b(1, 1) = r;
  b(2, 1) = r;
  b(1, 2) = r;
  b(2, 2) = -r;
  b(0, 3) = r;
  b(3, 3) = -r;
  return b;
}

}  // namespace gss::states
