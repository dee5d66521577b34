#include "gss/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace gss::protocols {

namespace {

// One secret subsystem per player, all of equal dimension.
struct SecretStructure {
  std::vector<int> players;            // sorted ids
  std::vector<std::string> secrets;    // player order
  int d = 0;
};

SecretStructure secret_structure(const QuantumState& s) {
  SecretStructure st;
  st.players = s.layout().players();
  if (st.players.size() < 2) throw Error("protocol layer: need at least two players");
  std::size_t d = 0;
  for (int p : st.players) {
    const auto labels = s.layout().secret_labels(p);
    if (labels.size() != 1) {
      std::ostringstream msg;
      msg << "protocol layer: player " << p << " must hold exactly one secret part, found "
          << labels.size();
      throw Error(msg.str());
    }
    const std::size_t dim = s.layout()[s.layout().position(labels[0])].dim;
    if (d == 0) d = dim;
    if (dim != d) throw Error("protocol layer: secret parts have unequal dimensions");
    st.secrets.push_back(labels[0]);
  }
  st.d = static_cast<int>(d);
  return st;
}

int mod_d(int x, int d) { return ((x % d) + d) % d; }

std::vector<std::string> coalition_labels(const QuantumState& s, const std::vector<int>& players) {
  std::vector<std::string> out;
  for (int p : players) {
    for (const auto& l : s.layout().secret_labels(p)) out.push_back(l);
    for (const auto& l : s.layout().shield_labels(p)) out.push_back(l);
  }
  return out;
}

}  // namespace

ConditionIResult check_condition_i(const QuantumState& s, const Tolerances& tols) {
  const auto st = secret_structure(s);
  const int n = static_cast<int>(st.players.size());
  const int d = st.d;
  ConditionIResult res;
  res.n = n;
  res.d = d;
  auto m = qmath::measure_computational(s, st.secrets, tols);
  res.distribution = m.distribution;
  const double uniform = std::pow(static_cast<double>(d), -(n - 1));
  double leak = 0.0;
  double dev = 0.0;
  std::size_t in_class = 0;
  for (const auto& [key, p] : res.distribution.probs) {
    int sum = 0;
    for (int v : key) sum += v;
    if (mod_d(sum, d) == 0) {
      ++in_class;
      dev = std::max(dev, std::abs(p - uniform));
    } else {
      leak += p;
    }
  }
  // A class member carrying no weight deviates by the full uniform share.
  const std::size_t class_size = static_cast<std::size_t>(std::llround(std::pow(d, n - 1)));
  if (in_class < class_size) dev = std::max(dev, uniform);
  res.support_leak = leak;
  res.max_uniform_deviation = dev;
  res.support_ok = leak <= tols.support_leak;
  res.uniform_ok = dev <= tols.uniformity;
  return res;
}

double VerificationReport::max_chi() const {
  double m = 0.0;
  for (const auto& c : holevo_checks) m = std::max(m, c.chi);
  return m;
}

VerificationReport verify_gss(const QuantumState& s, const Tolerances& tols, bool exhaustive) {
  const auto st = secret_structure(s);
  const int n = static_cast<int>(st.players.size());

  VerificationReport report;
  report.tolerances = tols;
  report.n = n;
  report.d = st.d;

  const auto cond = check_condition_i(s, tols);
  report.support_ok = cond.support_ok;
  report.uniform_ok = cond.uniform_ok;
  report.support_leak = cond.support_leak;
  report.max_uniform_deviation = cond.max_uniform_deviation;

  // Purify once; the reference joins every coalition.
  QuantumState purified = s.is_pure() ? s : qmath::purify(s, tols.rank_cutoff);

  auto run_check = [&](int k, const std::vector<int>& coalition_players) {
    infotheory::HolevoQuery q;
    q.state = purified;
    q.measured = {st.secrets[static_cast<std::size_t>(
        std::find(st.players.begin(), st.players.end(), k) - st.players.begin())]};
    q.coalition = coalition_labels(purified, coalition_players);
    q.include_reference = true;
    HolevoCheck check;
    check.measured_player = k;
    check.coalition_players = coalition_players;
    check.chi = infotheory::holevo_information(q, tols);
    report.holevo_checks.push_back(check);
  };

  if (!exhaustive) {
    for (std::size_t a = 0; a < st.players.size(); ++a)
      for (std::size_t b = a + 1; b < st.players.size(); ++b) {
        std::vector<int> coalition;
        for (std::size_t c = 0; c < st.players.size(); ++c)
          if (c != a && c != b) coalition.push_back(st.players[c]);
        run_check(st.players[a], coalition);
        run_check(st.players[b], coalition);
      }
  } else {
    // Every coalition of size <= N-2 for every measured player.
    for (std::size_t a = 0; a < st.players.size(); ++a) {
      std::vector<int> others;
      for (std::size_t c = 0; c < st.players.size(); ++c)
        if (c != a) others.push_back(st.players[c]);
      const std::size_t m = others.size();
      for (std::size_t mask = 0; mask < (1u << m); ++mask) {
        if (static_cast<int>(std::popcount(mask)) > n - 2) continue;
        std::vector<int> coalition;
        for (std::size_t bit = 0; bit < m; ++bit)
          if (mask & (1u << bit)) coalition.push_back(others[bit]);
        run_check(st.players[a], coalition);
      }
    }
  }

  const double max_chi = report.max_chi();
  const bool chi_ok = max_chi <= tols.chi_zero;
  report.verdict =
      (report.support_ok && report.uniform_ok && chi_ok) ? Verdict::GSS : Verdict::NotGSS;
  if (!report.holevo_checks.empty()) {
    const auto worst = std::max_element(
        report.holevo_checks.begin(), report.holevo_checks.end(),
        [](const HolevoCheck& x, const HolevoCheck& y) { return x.chi < y.chi; });
    report.witness = *worst;
  }
  return report;
}

RoundTranscript simulate_rounds(const QuantumState& s, int dealer, int num_rounds,
                                std::uint64_t seed, const Tolerances& tols) {
  const auto st = secret_structure(s);
  const auto it = std::find(st.players.begin(), st.players.end(), dealer);
  if (it == st.players.end()) throw Error("simulate_rounds: unknown dealer");
  const std::size_t dealer_pos = static_cast<std::size_t>(it - st.players.begin());

  const auto m = qmath::measure_computational(s, st.secrets, tols);
  std::vector<std::pair<std::vector<int>, double>> outcomes(m.distribution.probs.begin(),
                                                            m.distribution.probs.end());
  Rng rng(seed);
  RoundTranscript t;
  t.dealer = dealer;
  for (int r = 0; r < num_rounds; ++r) {
    double u = rng.uniform();
    std::size_t pick = outcomes.size() - 1;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (u < outcomes[i].second) {
        pick = i;
        break;
      }
      u -= outcomes[i].second;
    }
    RoundRecord rec;
    rec.outcomes = outcomes[pick].first;
    rec.dealer_dit = rec.outcomes[dealer_pos];
    int sum_others = 0;
    for (std::size_t i = 0; i < rec.outcomes.size(); ++i)
      if (i != dealer_pos) sum_others += rec.outcomes[i];
    rec.reconstructed = mod_d(-sum_others, st.d);
    rec.success = rec.reconstructed == rec.dealer_dit;
    if (rec.success) ++t.successes;
    t.rounds.push_back(std::move(rec));
  }
  t.success_rate = num_rounds > 0 ? static_cast<double>(t.successes) / num_rounds : 0.0;
  return t;
}

double coalition_attack(const QuantumState& s, int target_player,
                        const std::vector<std::string>& coalition_targets,
                        const Matrix& attack_basis, const Tolerances& tols) {
  const auto st = secret_structure(s);
  const auto it = std::find(st.players.begin(), st.players.end(), target_player);
  if (it == st.players.end()) throw Error("coalition_attack: unknown target player");
  const std::string target_secret =
      st.secrets[static_cast<std::size_t>(it - st.players.begin())];
  for (const auto& l : coalition_targets)
    if (l == target_secret) throw Error("coalition_attack: coalition measures the target secret");

  const double defect = attack_basis.unitarity_defect();
  if (defect > tols.unitarity) {
    std::ostringstream msg;
    msg << "coalition_attack: attack basis is not orthonormal (defect " << defect << ")";
    throw Error(msg.str());
  }

  // Rotate the attack basis onto the computational one, then measure jointly.
  auto rotated = qmath::apply_local(
      LocalOperator::general(coalition_targets, attack_basis.adjoint()), s);
  std::vector<std::string> measured = {target_secret};
  measured.insert(measured.end(), coalition_targets.begin(), coalition_targets.end());
  const auto m = qmath::measure_computational(rotated, measured, tols);
  return infotheory::mutual_information(m.distribution, 1);
}

namespace {

struct ReductionSetup {
  SecretStructure st;
  std::vector<int> measured_players;
  std::vector<std::string> measured_secrets;
  int correction_target = 0;
};

ReductionSetup reduction_setup(const QuantumState& s, const ReductionPlan& plan) {
  ReductionSetup setup;
  setup.st = secret_structure(s);
  if (plan.keep.size() < 2) throw Error("reduce_gss: must keep at least two players");
  std::set<int> keep(plan.keep.begin(), plan.keep.end());
  if (keep.size() != plan.keep.size()) throw Error("reduce_gss: repeated player in keep set");
  for (int p : keep)
    if (!std::count(setup.st.players.begin(), setup.st.players.end(), p))
      throw Error("reduce_gss: keep set names an unknown player");
  for (std::size_t i = 0; i < setup.st.players.size(); ++i)
    if (!keep.count(setup.st.players[i])) {
      setup.measured_players.push_back(setup.st.players[i]);
      setup.measured_secrets.push_back(setup.st.secrets[i]);
    }
  setup.correction_target = plan.correction_target != 0 ? plan.correction_target
                                                        : *keep.begin();
  if (!keep.count(setup.correction_target))
    throw Error("reduce_gss: correction target must be a kept player");
  return setup;
}

QuantumState finish_branch(const QuantumState& conditional, const ReductionSetup& setup,
                           int beta) {
  // Discard the measured players' shields.
  std::vector<std::string> keep_labels;
  std::set<int> measured(setup.measured_players.begin(), setup.measured_players.end());
  for (const auto& sub : conditional.layout().subsystems()) {
    if (sub.role != Role::Reference && measured.count(sub.player)) continue;
    keep_labels.push_back(sub.label);
  }
  QuantumState out = conditional;
  if (keep_labels.size() != conditional.layout().size())
    out = qmath::partial_trace(conditional, keep_labels);
  if (beta != 0) {
    const auto target_labels = out.layout().secret_labels(setup.correction_target);
    out = qmath::apply_local(qmath::shift_operator(out, target_labels[0], beta), out);
  }
  return out;
}

}  // namespace

std::vector<ReductionBranch> reduce_gss_branches(const QuantumState& s, const ReductionPlan& plan,
                                                 const Tolerances& tols) {
  const auto setup = reduction_setup(s, plan);
  std::vector<ReductionBranch> branches;
  if (setup.measured_players.empty()) {
    branches.push_back({1.0, {}, 0, s});
    return branches;
  }
  const auto m = qmath::measure_computational(s, setup.measured_secrets, tols);
  for (const auto& [key, p] : m.distribution.probs) {
    ReductionBranch b;
    b.probability = p;
    b.outcomes = key;
    int beta = 0;
    for (int v : key) beta += v;
    b.beta = mod_d(beta, setup.st.d);
    b.state = finish_branch(m.conditionals.at(key), setup, b.beta);
    branches.push_back(std::move(b));
  }
  return branches;
}

ReductionBranch reduce_gss_sample(const QuantumState& s, const ReductionPlan& plan,
                                  std::uint64_t seed, const Tolerances& tols) {
  auto branches = reduce_gss_branches(s, plan, tols);
  Rng rng(seed);
  double u = rng.uniform();
  for (auto& b : branches) {
    if (u < b.probability) return b;
    u -= b.probability;
  }
  return branches.back();
}

QuantumState reduce_gss_average(const QuantumState& s, const ReductionPlan& plan,
                                const Tolerances& tols) {
  const auto setup = reduction_setup(s, plan);
  auto branches = reduce_gss_branches(s, plan, tols);
  if (branches.size() == 1 && branches[0].outcomes.empty()) return branches[0].state;

  // Record register dimension: one slot per possible outcome string.
  std::size_t flag_dim = 1;
  for (std::size_t i = 0; i < setup.measured_secrets.size(); ++i)
    flag_dim *= static_cast<std::size_t>(setup.st.d);
  const SystemLayout& base = branches[0].state.layout();
  std::vector<Subsystem> subs = base.subsystems();
  subs.push_back(Subsystem{base.fresh_label("RFLAG"), setup.correction_target, Role::Shield,
                           flag_dim});
  SystemLayout layout{subs};

  const std::size_t inner = base.total_dim();
  Matrix rho(inner * flag_dim, inner * flag_dim);
  for (const auto& b : branches) {
    std::size_t slot = 0;
    for (int v : b.outcomes) slot = slot * static_cast<std::size_t>(setup.st.d) +
                                    static_cast<std::size_t>(v);
    const Matrix body = b.state.to_density();
    for (std::size_t x = 0; x < inner; ++x)
      for (std::size_t y = 0; y < inner; ++y)
        rho(x * flag_dim + slot, y * flag_dim + slot) = b.probability * body(x, y);
  }
  return QuantumState::mixed(std::move(layout), std::move(rho));
}

RateReport devetak_winter_rate(const QuantumState& s, const Tolerances& tols) {
  const auto st = secret_structure(s);
  const int n = static_cast<int>(st.players.size());
  const auto m = qmath::measure_computational(s, st.secrets, tols);

  QuantumState purified = s.is_pure() ? s : qmath::purify(s, tols.rank_cutoff);

  RateReport report;
  bool first = true;
  for (std::size_t a = 0; a < st.players.size(); ++a) {
    // I(m_i : mbar_i) with mbar the modular sum of the other outcomes.
    OutcomeDistribution pair;
    pair.labels = {"m", "msum"};
    pair.dims = {static_cast<std::size_t>(st.d), static_cast<std::size_t>(st.d)};
    for (const auto& [key, p] : m.distribution.probs) {
      int sum = 0;
      for (std::size_t i = 0; i < key.size(); ++i)
        if (i != a) sum += key[i];
      std::vector<int> k = {key[a], mod_d(sum, st.d)};
      pair.probs[k] += p;
    }
    const double mi = infotheory::mutual_information(pair, 1);

    std::vector<int> others;
    for (std::size_t c = 0; c < st.players.size(); ++c)
      if (c != a) others.push_back(st.players[c]);
    const std::size_t mo = others.size();
    for (std::size_t mask = 0; mask < (1u << mo); ++mask) {
      if (static_cast<int>(std::popcount(mask)) > n - 2) continue;
      std::vector<int> coalition;
      for (std::size_t bit = 0; bit < mo; ++bit)
        if (mask & (1u << bit)) coalition.push_back(others[bit]);
      infotheory::HolevoQuery q;
      q.state = purified;
      q.measured = {st.secrets[a]};
      q.coalition = coalition_labels(purified, coalition);
      q.include_reference = true;
      const double chi = infotheory::holevo_information(q, tols);
      const double diff = mi - chi;
      if (first || diff < report.min_difference) {
        report.min_difference = diff;
        report.argmin_player = st.players[a];
        report.argmin_coalition = coalition;
        report.mutual_information = mi;
        report.holevo = chi;
        first = false;
      }
    }
  }
  report.rate = std::max(0.0, report.min_difference);
  return report;
}

}  // namespace gss::protocols
