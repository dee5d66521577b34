#ifndef GSS_STATE_HPP
#define GSS_STATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gss/layout.hpp"
#include "gss/linalg.hpp"
#include "gss/tolerances.hpp"

namespace gss {

// Pure amplitude vector or density operator over a SystemLayout. Pure states
// stay vectors until a caller explicitly promotes them.
class QuantumState {
 public:
  QuantumState() = default;

  static QuantumState pure(SystemLayout layout, std::vector<cplx> amplitudes,
                           const Tolerances& tols = default_tolerances());
  static QuantumState mixed(SystemLayout layout, Matrix density,
                            const Tolerances& tols = default_tolerances());

  bool is_pure() const { return is_pure_; }
  std::size_t dim() const { return layout_.total_dim(); }
  const SystemLayout& layout() const { return layout_; }
  const std::vector<cplx>& amplitudes() const;
  const Matrix& density() const;
  Matrix to_density() const;  // explicit promotion

  // Spectrum check (costly for large states): min eigenvalue of the density.
  double min_eigenvalue() const;

  void relabel(const std::vector<std::string>& new_labels);
  void set_role(const std::string& label, Role role);

 private:
  SystemLayout layout_;
  bool is_pure_ = true;
  std::vector<cplx> amps_;
  Matrix rho_;
};

struct LocalOperator {
  std::vector<std::string> targets;  // operator indices follow this order
  Matrix matrix;
  enum class Kind { Unitary, General } kind = Kind::Unitary;

  static LocalOperator unitary(std::vector<std::string> targets, Matrix m,
                               const Tolerances& tols = default_tolerances());
  static LocalOperator general(std::vector<std::string> targets, Matrix m);
};

// Probability map over dit-strings from a computational-basis measurement.
// Outcome digits follow the measured labels' order; dims[i] is the radix of
// digit i. Entries below the probability cutoff are omitted.
struct OutcomeDistribution {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::map<std::vector<int>, double> probs;

  double total() const;
  // Uniform radix accessor (throws when the measured dits differ in dimension).
  std::size_t common_dim() const;
};

struct MeasurementResult {
  OutcomeDistribution distribution;
  std::map<std::vector<int>, QuantumState> conditionals;  // on the remaining labels
};

namespace qmath {

QuantumState tensor(const QuantumState& a, const QuantumState& b);

QuantumState partial_trace(const QuantumState& s, const std::vector<std::string>& keep);

// Transpose on the given subset's indices only; returns the full matrix (the
// layout is unchanged). Pure states are promoted to projectors first.
Matrix partial_transpose(const QuantumState& s, const std::vector<std::string>& subset);

QuantumState permute_subsystems(const QuantumState& s, const std::vector<std::string>& new_order);

QuantumState apply_local(const LocalOperator& op, const QuantumState& s);

// Appends a Reference subsystem of dimension rank(rho); tracing it out
// reproduces the input. Pure inputs gain a dimension-1 Reference.
QuantumState purify(const QuantumState& s, double rank_tol = 1e-12);

MeasurementResult measure_computational(const QuantumState& s,
                                        const std::vector<std::string>& targets,
                                        const Tolerances& tols = default_tolerances());

// Modular shift |i> -> |i+shift mod d| on one subsystem.
LocalOperator shift_operator(const QuantumState& s, const std::string& label, int shift);

}  // namespace qmath

}  // namespace gss

#endif
