#ifndef GSS_PROTOCOLS_HPP
#define GSS_PROTOCOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gss/infotheory.hpp"
#include "gss/state.hpp"

namespace gss::protocols {

struct ConditionIResult {
  bool support_ok = false;   // mass outside the zero-parity class within tolerance
  bool uniform_ok = false;   // class probabilities within tolerance of d^-(N-1)
  double support_leak = 0.0;
  double max_uniform_deviation = 0.0;
  OutcomeDistribution distribution;
  int n = 0;
  int d = 0;
};

ConditionIResult check_condition_i(const QuantumState& s,
                                   const Tolerances& tols = default_tolerances());

struct HolevoCheck {
  int measured_player = 0;
  std::vector<int> coalition_players;
  double chi = 0.0;
};

enum class Verdict { GSS, NotGSS };

struct VerificationReport {
  bool support_ok = false;
  bool uniform_ok = false;
  double support_leak = 0.0;
  double max_uniform_deviation = 0.0;
  std::vector<HolevoCheck> holevo_checks;
  Verdict verdict = Verdict::NotGSS;
  std::optional<HolevoCheck> witness;  // worst offending check
  Tolerances tolerances;
  int n = 0;
  int d = 0;

  double max_chi() const;
};

// Theorem-4 style verification: condition (i) plus, for every excluded pair
// {k, l}, the Holevo information of each of k and l against the remaining
// players (secrets and shields) and the purification reference. N(N-1) Holevo
// evaluations; the exhaustive flag extends the coalitions to every subset of
// size at most N-2.
VerificationReport verify_gss(const QuantumState& s,
                              const Tolerances& tols = default_tolerances(),
                              bool exhaustive = false);

struct RoundRecord {
  std::vector<int> outcomes;  // one dit per player, player order
  int dealer_dit = 0;
  int reconstructed = 0;
  bool success = false;
};

struct RoundTranscript {
  int dealer = 0;
  std::vector<RoundRecord> rounds;
  std::size_t successes = 0;
  double success_rate = 0.0;
};

RoundTranscript simulate_rounds(const QuantumState& s, int dealer, int num_rounds,
                                std::uint64_t seed,
                                const Tolerances& tols = default_tolerances());

// Classical mutual information (bits) between the coalition's generalized
// measurement outcome and the target player's computational dit. The attack
// basis columns must be orthonormal on the measured coalition subsystems.
double coalition_attack(const QuantumState& s, int target_player,
                        const std::vector<std::string>& coalition_targets,
                        const Matrix& attack_basis,
                        const Tolerances& tols = default_tolerances());

struct ReductionPlan {
  std::vector<int> keep;        // player ids, size >= 2
  int correction_target = 0;    // 0 = lowest kept player id
};

struct ReductionBranch {
  double probability = 0.0;
  std::vector<int> outcomes;  // measured players' dits, player order
  int beta = 0;
  QuantumState state;
};

// Measured players read their secret parts, their shields are discarded, and
// the correction target applies T_beta with beta the outcome digit sum.
ReductionBranch reduce_gss_sample(const QuantumState& s, const ReductionPlan& plan,
                                  std::uint64_t seed,
                                  const Tolerances& tols = default_tolerances());
std::vector<ReductionBranch> reduce_gss_branches(const QuantumState& s, const ReductionPlan& plan,
                                                 const Tolerances& tols = default_tolerances());
// Outcome-averaged channel output. The classical record of the measured dits
// stays in a shield register of the correction target, which is what makes
// the averaged state verify as GSS.
QuantumState reduce_gss_average(const QuantumState& s, const ReductionPlan& plan,
                                const Tolerances& tols = default_tolerances());

struct RateReport {
  double rate = 0.0;  // clamped at zero
  double min_difference = 0.0;
  int argmin_player = 0;
  std::vector<int> argmin_coalition;
  double mutual_information = 0.0;
  double holevo = 0.0;
};

// min over players i and coalitions D (|D| <= N-2) of I(m_i : mbar_i) - chi(m_i : DE).
RateReport devetak_winter_rate(const QuantumState& s,
                               const Tolerances& tols = default_tolerances());

}  // namespace gss::protocols

#endif
