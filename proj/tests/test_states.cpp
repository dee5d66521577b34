#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gss/states.hpp"
#include "oracles.hpp"

using namespace gss;
using namespace gss::states;

TEST_CASE("ghz amplitudes sit on the zero-parity class") {
  auto g32 = ghz_state(3, 2);
  const auto& a = g32.amplitudes();
  CHECK(a[0b000].real() == doctest::Approx(0.5));
  CHECK(a[0b011].real() == doctest::Approx(0.5));
  CHECK(a[0b101].real() == doctest::Approx(0.5));
  CHECK(a[0b110].real() == doctest::Approx(0.5));
  CHECK(std::abs(a[0b001]) == 0.0);

  auto g22 = ghz_state(2, 2);
  CHECK(g22.amplitudes()[0b00].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(g22.amplitudes()[0b11].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  auto g33 = ghz_state(3, 3);
  int nonzero = 0;
  for (const auto& x : g33.amplitudes())
    if (std::abs(x) > 1e-15) {
      ++nonzero;
      CHECK(x.real() == doctest::Approx(1.0 / 3.0));
    }
  CHECK(nonzero == 9);
  for (const auto& digits : parity_class(3, 3, 0))
    CHECK((digits[0] + digits[1] + digits[2]) % 3 == 0);
}

TEST_CASE("upsilon states are normalized with the right supports") {
  auto u1 = upsilon1();
  CHECK(u1.dim() == 64);
  auto m1 = qmath::measure_computational(u1, {"A1", "A2", "A3"});
  CHECK(m1.distribution.probs.size() == 4);
  for (const auto& [k, p] : m1.distribution.probs) CHECK(p == doctest::Approx(0.25));

  auto u2 = upsilon2();
  CHECK(u2.dim() == 256);
  auto m2 = qmath::measure_computational(u2, {"A1", "A2", "A3", "A4"});
  CHECK(m2.distribution.probs.size() == 8);
  for (const auto& [k, p] : m2.distribution.probs) {
    CHECK(p == doctest::Approx(0.125));
    CHECK((k[0] + k[1] + k[2] + k[3]) % 2 == 0);
  }
}

TEST_CASE("gss_from_spec with identity twists is ghz tensor sigma") {
  GssSpec spec;
  spec.n = 3;
  spec.d = 2;
  spec.order = {1, 2, 3};
  spec.shield_dims = {2, 2, 2};
  for (int t = 0; t < 2; ++t)
    spec.pair_families.push_back(std::vector<Matrix>(4, Matrix::identity(4)));
  Rng rng(99);
  SystemLayout shields({{"A1'", 1, Role::Shield, 2},
                        {"A2'", 2, Role::Shield, 2},
                        {"A3'", 3, Role::Shield, 2}});
  spec.sigma = QuantumState::pure(shields, random_pure(8, rng));
  auto s = gss_from_spec(spec);
  CHECK(s.is_pure());
  auto expected = qmath::tensor(ghz_state(3, 2), spec.sigma);
  double diff = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    diff = std::max(diff, std::abs(s.amplitudes()[i] - expected.amplitudes()[i]));
  CHECK(diff < 1e-12);
}

TEST_CASE("gss_from_spec support is the zero-parity class") {
  auto spec = random_gss_spec(3, 2, {2, 2, 2}, 1234);
  auto s = gss_from_spec(spec);
  auto m = qmath::measure_computational(s, {"A1", "A2", "A3"});
  for (const auto& [k, p] : m.distribution.probs) {
    CHECK((k[0] + k[1] + k[2]) % 2 == 0);
    CHECK(p == doctest::Approx(0.25).epsilon(1e-10));
  }
  auto spec3 = random_gss_spec(3, 3, {2, 2, 2}, 77);
  auto s3 = gss_from_spec(spec3);
  auto m3 = qmath::measure_computational(s3, {"A1", "A2", "A3"});
  CHECK(m3.distribution.probs.size() == 9);
  for (const auto& [k, p] : m3.distribution.probs) {
    CHECK((k[0] + k[1] + k[2]) % 3 == 0);
    CHECK(p == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
  }
}

TEST_CASE("gss_from_spec mixed sigma keeps block traces") {
  auto spec = random_gss_spec(3, 2, {2, 1, 2}, 555, /*pure_sigma=*/false);
  auto s = gss_from_spec(spec);
  CHECK(!s.is_pure());
  CHECK(s.density().trace().real() == doctest::Approx(1.0));
  CHECK(s.density().hermiticity_defect() < 1e-12);
}

TEST_CASE("private state basics") {
  // Identity twists, pure sigma: maximally entangled key pair (x) sigma.
  PrivateStateSpec spec;
  spec.d = 2;
  spec.shield_dims = {2, 2};
  spec.twists = {Matrix::identity(4), Matrix::identity(4)};
  std::vector<cplx> sig = {1, 0, 0, 0};
  spec.sigma = outer(sig);
  auto s = private_state(spec);
  CHECK(s.is_pure());
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitudes()[0] - cplx{r, 0.0}) < 1e-12);          // |00>|00>
  CHECK(std::abs(s.amplitudes()[0b1100] - cplx{r, 0.0}) < 1e-12);     // |11>|00>

  // Swap twist on the shields.
  Matrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  PrivateStateSpec spec2 = spec;
  spec2.twists[1] = swap;
  std::vector<cplx> prod = {0, 1, 0, 0};  // |01>
  spec2.sigma = outer(prod);
  auto s2 = private_state(spec2);
  CHECK(s2.is_pure());
  CHECK(std::abs(s2.amplitudes()[0b0001] - cplx{r, 0.0}) < 1e-12);  // |00>|01>
  CHECK(std::abs(s2.amplitudes()[0b1110] - cplx{r, 0.0}) < 1e-12);  // |11>|10>

  // Key measurement is uniform and perfectly correlated for any spec.
  auto spec3 = random_private_spec(3, {2, 2}, 2024, /*pure_sigma=*/false);
  auto s3 = private_state(spec3);
  auto m = qmath::measure_computational(s3, {"K1", "K2"});
  for (const auto& [k, p] : m.distribution.probs) {
    CHECK(k[0] == k[1]);
    CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("w wiring acts as modular sum") {
  SystemLayout layout({{"P", 1, Role::Secret, 2}, {"Q", 1, Role::Secret, 2}});
  std::vector<cplx> v(4, cplx{0.0, 0.0});
  v[0b11] = 1.0;
  auto s = QuantumState::pure(layout, v);
  auto wired = apply_w_wiring(s, {WiringGroup{{"P", "Q"}, {}}});
  CHECK(std::abs(wired.amplitudes()[0b01] - cplx{1.0, 0.0}) < 1e-14);
  CHECK(wired.layout()[0].role == Role::Secret);
  CHECK(wired.layout()[1].role == Role::Shield);
}

TEST_CASE("example1 network with bell pairs wires to even parity") {
  auto bell = bell_private_spec(2);
  auto net = example1_network(bell, bell, bell);
  CHECK(net.dim() == 64);
  CHECK(net.is_pure());
  auto wired = wire_example1(net);
  auto m = qmath::measure_computational(wired, {"A1", "B1", "C1"});
  CHECK(m.distribution.probs.size() == 4);
  for (const auto& [k, p] : m.distribution.probs) {
    CHECK((k[0] + k[1] + k[2]) % 2 == 0);
    CHECK(p == doctest::Approx(0.25).epsilon(1e-10));
  }
}

TEST_CASE("wiring preserves the spectrum") {
  auto net = example1_network(random_private_spec(2, {2, 2}, 10),
                              random_private_spec(2, {2, 2}, 11),
                              random_private_spec(2, {2, 2}, 12));
  auto wired = wire_example1(net);
  CHECK(wired.is_pure());  // pure in, pure out
  double n2 = 0.0;
  for (const auto& a : wired.amplitudes()) n2 += std::norm(a);
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("werner states") {
  auto ws = werner_symmetric(2);
  auto ev_s = hermitian_eigenvalues(ws.density());
  CHECK(ev_s[0] == doctest::Approx(1.0 / 3.0));
  CHECK(ev_s[1] == doctest::Approx(1.0 / 3.0));
  CHECK(ev_s[2] == doctest::Approx(1.0 / 3.0));
  CHECK(ev_s[3] == doctest::Approx(0.0));

  auto wa = werner_antisymmetric(2);
  auto ev_a = hermitian_eigenvalues(wa.density());
  CHECK(ev_a[0] == doctest::Approx(1.0));
  CHECK(ev_a[1] == doctest::Approx(0.0));

  // Flip eigenoperator relations: F rho_s = rho_s, F rho_a = -rho_a.
  for (int d : {2, 3}) {
    const Matrix f = flip_operator(d);
    const Matrix s = werner_symmetric_matrix(d);
    const Matrix a = werner_antisymmetric_matrix(d);
    CHECK((f * s - s).max_abs() < 1e-14);
    CHECK((f * a + a).max_abs() < 1e-14);
  }
  CHECK_THROWS_AS(werner_antisymmetric(1), Error);
}

TEST_CASE("example2 orthogonal family") {
  auto pure0 = example2_orthogonal({1.0, 0.0, 0.0, 0.0});
  // Single term with rank-1 shields: density is a projector onto psi0 (x) shields.
  auto ev = hermitian_eigenvalues(pure0.density());
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(0.0));

  auto gamma = example2_orthogonal({0.4, 0.3, 0.2, 0.1});
  CHECK(gamma.density().trace().real() == doctest::Approx(1.0));
  auto m = qmath::measure_computational(gamma, {"A", "B", "C"});
  CHECK(m.distribution.probs.size() == 4);
  for (const auto& [k, p] : m.distribution.probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-10));

  // Overlapping supports are rejected.
  ShieldPair bad = projector_shield_pair();
  bad.second = bad.first;
  CHECK_THROWS_AS(example2_orthogonal({0.4, 0.3, 0.2, 0.1}, bad, projector_shield_pair(),
                                      projector_shield_pair()),
                  Error);
}

TEST_CASE("example2 orthogonal equals its spec presentation") {
  const std::array<double, 4> w = {0.4, 0.3, 0.2, 0.1};
  const ShieldPair pair = projector_shield_pair();
  auto direct = example2_orthogonal(w, pair, pair, pair);
  auto spec = example2_orthogonal_as_spec(w, pair, pair, pair);
  auto from_spec = gss_from_spec(spec);
  // Align subsystem order: direct layout is A,B,C, A1',B2',B1',C2',C1',A2'.
  auto aligned = qmath::permute_subsystems(
      direct, {"A", "B", "C", "A1'", "A2'", "B1'", "B2'", "C1'", "C2'"});
  CHECK((aligned.density() - from_spec.density()).max_abs() < 1e-12);
}

TEST_CASE("example2 werner block traces and trace norms") {
  for (double p : {0.0, 0.25, 0.5}) {
    auto g = example2_werner(2, p);
    CHECK(g.density().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.density().hermiticity_defect() < 1e-12);
    CHECK(g.dim() == 512);
  }
  CHECK_THROWS_AS(example2_werner(2, 0.75), Error);
  CHECK_THROWS_AS(example2_werner(2, -0.1), Error);

  // Block traces equal the weights: measure the sigma-pair shields.
  auto g = example2_werner(2, 0.25);
  auto m = qmath::measure_computational(g, {"B1'", "C2'"});
  CHECK(m.distribution.probs.at({0, 0}) == doctest::Approx(0.5));  // p + p
  CHECK(m.distribution.probs.at({1, 1}) == doctest::Approx(0.5));  // (1/2-p)*2
}

TEST_CASE("bell basis is unitary with the expected columns") {
  const Matrix b = bell_basis();
  CHECK(b.unitarity_defect() < 1e-14);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(b(0, 0) - cplx{r, 0.0}) < 1e-14);
  CHECK(std::abs(b(3, 3) + cplx{r, 0.0}) < 1e-14);
}

TEST_CASE("network_gss wires any player count") {
  auto s = network_gss(3, 2, 31337, /*nontrivial_twists=*/true);
  CHECK(s.is_pure());
  CHECK(s.layout().secret_labels().size() == 3);
  std::vector<std::string> secrets = s.layout().secret_labels();
  auto m = qmath::measure_computational(s, secrets);
  for (const auto& [k, p] : m.distribution.probs) {
    CHECK((k[0] + k[1] + k[2]) % 2 == 0);
    CHECK(p == doctest::Approx(0.25).epsilon(1e-9));
  }
  // Oriented wiring keeps parity at d = 3 as well.
  auto s3 = network_gss(3, 3, 777, /*nontrivial_twists=*/false);
  auto secrets3 = s3.layout().secret_labels();
  auto m3 = qmath::measure_computational(s3, secrets3);
  for (const auto& [k, p] : m3.distribution.probs) {
    CHECK((k[0] + k[1] + k[2]) % 3 == 0);
    CHECK(p == doctest::Approx(1.0 / 9.0).epsilon(1e-9));
  }
}
