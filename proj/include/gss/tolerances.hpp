#ifndef GSS_TOLERANCES_HPP
#define GSS_TOLERANCES_HPP

namespace gss {

// Every floating-point slack used by the library lives here. The quantities
// the protocols compute are exact in exact arithmetic; these thresholds are
// sized to the error of the dense eigensolver at desk-scale dimensions.
struct Tolerances {
  double hermiticity = 1e-10;       // max |H - H^dag| entry accepted as Hermitian
  double unitarity = 1e-10;         // max |U U^dag - I| entry accepted as unitary
  double psd_slack = 1e-10;         // eigenvalues >= -psd_slack accepted as PSD
  double trace_one = 1e-10;         // |tr(rho) - 1| accepted
  double pure_norm = 1e-12;         // | ||psi|| - 1 | accepted
  double rank_cutoff = 1e-12;       // purification keeps eigenvalues > rank_cutoff
  double entropy_cutoff = 1e-14;    // eigenvalues below this skip the lambda*log(lambda) term
  double support_cutoff = 1e-12;    // support of a state = eigenvalues > support_cutoff
  double prob_cutoff = 1e-14;       // measurement outcomes below this carry no conditional
  double chi_zero = 1e-9;           // Holevo information <= chi_zero counts as zero (bits)
  double support_leak = 1e-10;      // probability mass outside the parity class counted as zero
  double uniformity = 1e-9;         // max deviation from 1/d^(N-1) on the parity class
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tols{};
  return tols;
}

}  // namespace gss

#endif
