#ifndef GSS_INFOTHEORY_HPP
#define GSS_INFOTHEORY_HPP

#include <string>
#include <vector>

#include "gss/state.hpp"

namespace gss::infotheory {

// All quantities are in bits (base-2 logarithms throughout).

double shannon_entropy(const std::vector<double>& probs);

double von_neumann_entropy(const Matrix& rho, const Tolerances& tols = default_tolerances());
double von_neumann_entropy(const QuantumState& s, const Tolerances& tols = default_tolerances());

// S(rho || sigma) = -S(rho) - tr rho log2 sigma. Returns +infinity when the
// support of rho is not contained in the support of sigma.
double relative_entropy(const Matrix& rho, const Matrix& sigma,
                        const Tolerances& tols = default_tolerances());
double relative_entropy(const QuantumState& rho, const QuantumState& sigma,
                        const Tolerances& tols = default_tolerances());

// I(X:Y) of a joint distribution; the first x_digits outcome positions are X.
double mutual_information(const OutcomeDistribution& joint, std::size_t x_digits);

struct HolevoQuery {
  QuantumState state;
  std::vector<std::string> measured;
  std::vector<std::string> coalition;   // labels; reference labels are added by the flag
  bool include_reference = true;
};

// chi = S(avg conditional) - sum_x p_x S(conditional_x), with conditionals on
// the coalition (plus purification reference when requested).
double holevo_information(const HolevoQuery& q, const Tolerances& tols = default_tolerances());

}  // namespace gss::infotheory

#endif
