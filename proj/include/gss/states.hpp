#ifndef GSS_STATES_HPP
#define GSS_STATES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gss/state.hpp"

namespace gss::states {

// Dit strings over Z_d of length n whose digit sum is t (mod d).
std::vector<std::vector<int>> parity_class(int n, int d, int t);

// Uniform superposition over the zero-parity class, amplitude d^{-(n-1)/2};
// secret parts only, no shields.
QuantumState ghz_state(int n, int d);

// Recipe for the chained-twist construction: one shield subsystem per player,
// pairwise unitary families along `order`, and a joint shield state sigma.
struct GssSpec {
  int n = 3;
  int d = 2;
  std::vector<int> order;                // player ids (1-based), permutation of 1..n
  std::vector<std::size_t> shield_dims;  // per player, 1 = trivial
  // pair_families[t][a*d+b] acts on the shields of (order[t], order[t+1]);
  // index convention: shield of order[t] major, shield of order[t+1] minor.
  // The (0,0) member must be the identity.
  std::vector<std::vector<Matrix>> pair_families;
  QuantumState sigma;  // state on shields A1'..An' (player order)

  std::size_t shield_dim_total() const;
  void validate(const Tolerances& tols = default_tolerances()) const;
};

// Seeded member of the certified sub-family (per-player own-dit-controlled
// twists): verifies as GSS for every bipartition.
GssSpec random_gss_spec(int n, int d, const std::vector<std::size_t>& shield_dims,
                        std::uint64_t seed, bool pure_sigma = true);

// Seeded chained-form state with free pair families: condition (i) holds but
// some coalition generically learns the dit (a near-miss non-member).
GssSpec random_free_chain_spec(int n, int d, const std::vector<std::size_t>& shield_dims,
                               std::uint64_t seed, bool pure_sigma = true);

// Chained twist U_I for a zero-parity string I, as a matrix on the full
// shield space (players in id order).
Matrix chained_twist(const GssSpec& spec, const std::vector<int>& digits);

QuantumState gss_from_spec(const GssSpec& spec);

// The two counterexample states: valid secret-sharing states which leak to a
// dishonest-player coalition.
QuantumState upsilon1();
QuantumState upsilon2();

struct PrivateStateSpec {
  int d = 2;
  std::array<std::size_t, 2> shield_dims{1, 1};
  std::vector<Matrix> twists;  // d unitaries on the shield pair, twists[0] = I
  Matrix sigma;                // state on the shield pair
};

PrivateStateSpec random_private_spec(int d, std::array<std::size_t, 2> shield_dims,
                                     std::uint64_t seed, bool pure_sigma = true);
PrivateStateSpec bell_private_spec(int d = 2);

// (1/d) sum |ii><i'i'| (x) U_i sigma U_i'^dag, with the key parts labeled
// key_labels and shields shield_labels, owned by the two given players.
QuantumState private_state(const PrivateStateSpec& spec,
                           const std::array<std::string, 2>& key_labels = {"K1", "K2"},
                           const std::array<std::string, 2>& shield_labels = {"K1'", "K2'"},
                           const std::array<int, 2>& players = {1, 2});

// Three pairwise private states gamma_{A1 B2}, gamma_{B1 C2}, gamma_{C1 A2}
// tensored with the paper's player assignment (A holds A1, A2, A1', A2', ...).
QuantumState example1_network(const PrivateStateSpec& ab, const PrivateStateSpec& bc,
                              const PrivateStateSpec& ca);

// Wiring group: a player's key parts (with orientation signs); after wiring
// the first listed key carries the signed sum and becomes the secret part,
// the others are demoted to shields.
struct WiringGroup {
  std::vector<std::string> keys;
  std::vector<int> signs;  // +1/-1 per key; defaults to all +1
};

QuantumState apply_w_wiring(const QuantumState& s, const std::vector<WiringGroup>& groups);

// Wires the Example-1 network (W = sum |i+j,j><i,j| per player).
QuantumState wire_example1(const QuantumState& network);

// Complete-graph private-state network for n players at dit dimension d,
// wired with oriented sums so every player's secret is parity-correlated.
QuantumState network_gss(int n, int d, std::uint64_t seed, bool nontrivial_twists = true);

Matrix flip_operator(int d);
Matrix werner_symmetric_matrix(int d);
Matrix werner_antisymmetric_matrix(int d);
QuantumState werner_symmetric(int d);
QuantumState werner_antisymmetric(int d);

// Orthogonal-support shield pair on a two-part shield system.
struct ShieldPair {
  std::array<std::size_t, 2> dims{2, 2};
  Matrix first;   // e.g. rho_0
  Matrix second;  // rho_1, support orthogonal to rho_0
};

ShieldPair projector_shield_pair();  // |00><00| vs |11><11| on qubit (x) qubit

// First Example-2 family: mixture of Z-phased even-parity states with
// orthogonal-support shields on (A1',B2'), (B1',C2'), (C1',A2').
QuantumState example2_orthogonal(const std::array<double, 4>& weights, const ShieldPair& rho,
                                 const ShieldPair& sigma, const ShieldPair& tau);
QuantumState example2_orthogonal(const std::array<double, 4>& weights);

// The same state presented as a chained-twist spec (order B, C, A).
GssSpec example2_orthogonal_as_spec(const std::array<double, 4>& weights, const ShieldPair& rho,
                                    const ShieldPair& sigma, const ShieldPair& tau);

// Second Example-2 family: Werner-state shields, weights (p, p, 1/2-p, 1/2-p).
QuantumState example2_werner(int d, double p);

// Closed form for || Gamma^{T_A} ||_1 of example2_werner.
double example2_werner_formula(int d, double p);

// Bell basis columns Phi+, Psi+, Psi-, Phi- (two qubits).
Matrix bell_basis();

}  // namespace gss::states

#endif
