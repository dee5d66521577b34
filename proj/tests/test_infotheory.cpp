#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gss/infotheory.hpp"
#include "gss/states.hpp"
#include "oracles.hpp"

using namespace gss;
using namespace gss::infotheory;

namespace {

SystemLayout one(const std::string& label, std::size_t d) {
  return SystemLayout({{label, 1, Role::Shield, d}});
}

}  // namespace

TEST_CASE("entropy basics") {
  CHECK(von_neumann_entropy(states::ghz_state(3, 2)) == 0.0);
  Matrix half(2, 2);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(von_neumann_entropy(half) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(states::werner_symmetric_matrix(2)) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-10));
}

TEST_CASE("entropy unitary invariance and additivity") {
  Rng rng(2718);
  for (std::size_t n : {3, 5, 8}) {
    Matrix rho = random_density(n, rng);
    Matrix u = random_unitary(n, rng);
    const double s0 = von_neumann_entropy(rho);
    const double s1 = von_neumann_entropy(u * rho * u.adjoint());
    CHECK(std::abs(s0 - s1) < 1e-9);

    Matrix sig = random_density(3, rng);
    const double joint = von_neumann_entropy(kron(rho, sig));
    CHECK(std::abs(joint - s0 - von_neumann_entropy(sig)) < 1e-9);
  }
}

TEST_CASE("relative entropy basics") {
  Rng rng(13);
  Matrix rho = random_density(4, rng);
  CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-9));

  Matrix zero(2, 2);
  zero(0, 0) = 1.0;
  Matrix half(2, 2);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(relative_entropy(zero, half) == doctest::Approx(1.0).epsilon(1e-10));

  // Support failure: sigma strictly narrower than rho.
  CHECK(std::isinf(relative_entropy(half, zero)));
}

TEST_CASE("relative entropy of ghz against the dephased mixture") {
  auto ghz = states::ghz_state(3, 2);
  Matrix diag(8, 8);
  for (int i : {0b000, 0b011, 0b101, 0b110}) diag(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 0.25;
  CHECK(relative_entropy(ghz.to_density(), diag) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("klein inequality on random pairs") {
  Rng rng(515);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix rho = random_density(5, rng);
    Matrix sig = random_density(5, rng);  // full rank almost surely
    const double s = relative_entropy(rho, sig);
    CHECK(s > -1e-9);
  }
}

TEST_CASE("mutual information basics") {
  OutcomeDistribution j;
  j.labels = {"x", "y"};
  j.dims = {2, 2};
  j.probs[{0, 0}] = 0.25;
  j.probs[{0, 1}] = 0.25;
  j.probs[{1, 0}] = 0.25;
  j.probs[{1, 1}] = 0.25;
  CHECK(mutual_information(j, 1) == doctest::Approx(0.0).epsilon(1e-12));

  OutcomeDistribution c;
  c.labels = {"x", "y"};
  c.dims = {3, 3};
  for (int i = 0; i < 3; ++i) c.probs[{i, i}] = 1.0 / 3.0;
  CHECK(mutual_information(c, 1) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));

  // GHZ parity pair: m1 against m2+m3.
  auto m = qmath::measure_computational(states::ghz_state(3, 2), {"A1", "A2", "A3"});
  OutcomeDistribution pair;
  pair.labels = {"m1", "sum"};
  pair.dims = {2, 2};
  for (const auto& [k, p] : m.distribution.probs) pair.probs[{k[0], (k[1] + k[2]) % 2}] += p;
  CHECK(mutual_information(pair, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("holevo on upsilon1 matches the paper attack value") {
  HolevoQuery q;
  q.state = states::upsilon1();
  q.measured = {"A1"};
  q.coalition = {"A3", "A3'"};
  q.include_reference = true;
  CHECK(holevo_information(q) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("holevo on ghz against one player is zero") {
  HolevoQuery q;
  q.state = states::ghz_state(3, 2);
  q.measured = {"A1"};
  q.coalition = {"A3"};
  CHECK(holevo_information(q) < 1e-10);
}

TEST_CASE("holevo on upsilon2 bell coalition is one bit") {
  // Independent oracle: conditionals on (A3, A4) are 1/2(Phi+ + Psi+) for
  // i1 = 0 and 1/2(Psi- + Phi-) for i1 = 1; these have orthogonal supports,
  // so chi = S(avg) - avg S = 2 - 1 = 1 bit. Recomputed here by hand.
  const Matrix b = states::bell_basis();
  auto proj = [&](int col) {
    std::vector<cplx> v(4);
    for (std::size_t r = 0; r < 4; ++r) v[r] = b(r, static_cast<std::size_t>(col));
    return outer(v);
  };
  Matrix rho0 = proj(0) + proj(1);
  rho0 *= cplx{0.5, 0.0};
  Matrix rho1 = proj(2) + proj(3);
  rho1 *= cplx{0.5, 0.0};
  Matrix avg = rho0 + rho1;
  avg *= cplx{0.5, 0.0};
  const double oracle = von_neumann_entropy(avg) -
                        0.5 * (von_neumann_entropy(rho0) + von_neumann_entropy(rho1));
  CHECK(oracle == doctest::Approx(1.0).epsilon(1e-10));

  HolevoQuery q;
  q.state = states::upsilon2();
  q.measured = {"A1"};
  q.coalition = {"A3", "A4", "A3'", "A4'"};
  CHECK(holevo_information(q) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("holevo bounds on random states") {
  Rng rng(808);
  for (int trial = 0; trial < 10; ++trial) {
    SystemLayout layout({{"x", 1, Role::Secret, 2},
                         {"y", 2, Role::Secret, 2},
                         {"z", 2, Role::Shield, 2}});
    auto s = QuantumState::mixed(layout, random_density(8, rng));
    HolevoQuery q;
    q.state = s;
    q.measured = {"x"};
    q.coalition = {"y", "z"};
    const double chi = holevo_information(q);
    CHECK(chi > -1e-9);
    CHECK(chi < 1.0 + 1e-9);  // log2(d_measured alphabet) = 1
  }
}

TEST_CASE("pure states: explicit dim-1 reference does not change holevo") {
  auto u1 = states::upsilon1();
  HolevoQuery q;
  q.state = u1;
  q.measured = {"A1"};
  q.coalition = {"A3", "A3'"};
  q.include_reference = false;
  const double chi_plain = holevo_information(q);
  q.state = qmath::purify(u1);
  q.include_reference = true;
  const double chi_ref = holevo_information(q);
  CHECK(std::abs(chi_plain - chi_ref) < 1e-10);
}

TEST_CASE("holevo rejects overlapping query sets") {
  HolevoQuery q;
  q.state = states::ghz_state(3, 2);
  q.measured = {"A1"};
  q.coalition = {"A1", "A2"};
  CHECK_THROWS_AS(holevo_information(q), Error);
}

TEST_CASE("holevo with reference detects purification leakage for mixed states") {
  // Classically correlated state: the reference learns the dit perfectly.
  SystemLayout layout({{"x", 1, Role::Secret, 2}, {"y", 2, Role::Secret, 2}});
  Matrix rho(4, 4);
  rho(0b00, 0b00) = 0.5;
  rho(0b11, 0b11) = 0.5;
  auto s = QuantumState::mixed(layout, rho);
  HolevoQuery q;
  q.state = s;
  q.measured = {"x"};
  q.coalition = {};
  q.include_reference = true;
  CHECK(holevo_information(q) == doctest::Approx(1.0).epsilon(1e-10));
}
