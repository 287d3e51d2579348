#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "admdiag/model.hpp"

using namespace admdiag;

namespace {

ModelParams params(double omega, double omega0, double g1, double g2, double j, int n_max) {
  ModelParams p;
  p.omega = omega;
  p.omega0 = omega0;
  p.g1 = g1;
  p.g2 = g2;
  p.j = j;
  p.n_max = n_max;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params(1, 1, 0, 0, 0.7, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(1, 1, 0, 0, -0.5, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(0, 1, 0, 0, 0.5, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(1, 1, -0.1, 0, 0.5, 10).validate(), std::invalid_argument);
  CHECK_NOTHROW(params(1, -1, 0.3, 0.7, 1.5, ModelParams::kAutoCutoff).validate());
  CHECK(params(1, 1, 0, 0, 10, 5).two_j() == 20);
}

TEST_CASE("sector enumeration for j=1/2, n_max=1") {
  const SectorBasis plus = enumerate_basis(params(1, 1, 0, 0, 0.5, 1), +1);
  REQUIRE(plus.dimension() == 2);
  CHECK(plus.state(0) == BasisState{0, -1});
  CHECK(plus.state(1) == BasisState{1, +1});

  const SectorBasis minus = enumerate_basis(params(1, 1, 0, 0, 0.5, 1), -1);
  REQUIRE(minus.dimension() == 2);
  CHECK(minus.state(0) == BasisState{0, +1});
  CHECK(minus.state(1) == BasisState{1, -1});
}

TEST_CASE("sector dimensions at j=10, n_max=400 by independent count") {
  // Independent enumeration over the raw 401 x 21 grid.
  int expected_plus = 0;
  for (int n = 0; n <= 400; ++n) {
    for (int k = 0; k <= 20; ++k) {  // m = k - 10, so n + m + j = n + k
      if ((n + k) % 2 == 0) ++expected_plus;
    }
  }
  const ModelParams p = params(1, 1, 0, 0, 10, 400);
  const SectorBasis plus = enumerate_basis(p, +1);
  const SectorBasis minus = enumerate_basis(p, -1);
  CHECK(plus.dimension() == expected_plus);
  CHECK(plus.dimension() + minus.dimension() == 401 * 21);
}

TEST_CASE("canonical ordering and parity consistency") {
  const ModelParams p = params(1, 1, 0.3, 0.4, 1.5, 12);
  for (int parity : {+1, -1}) {
    const SectorBasis basis = enumerate_basis(p, parity);
    for (int i = 0; i < basis.dimension(); ++i) {
      CHECK(state_parity(basis.state(i), p.two_j()) == parity);
      if (i > 0) {
        const BasisState& a = basis.state(i - 1);
        const BasisState& b = basis.state(i);
        CHECK((a.n < b.n || (a.n == b.n && a.twice_m < b.twice_m)));
      }
      CHECK(basis.index_of(basis.state(i).n, basis.state(i).twice_m) == i);
    }
  }
  CHECK_THROWS_AS(enumerate_basis(params(1, 1, 0, 0, 0.5, ModelParams::kAutoCutoff), +1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(p, 0), std::invalid_argument);
}

TEST_CASE("hamiltonian matrix elements for j=1/2") {
  // <(1,+1/2)| H |(0,-1/2)> = g2 * sqrt(1) * sqrt(1) / sqrt(1)
  const SectorBasis basis = enumerate_basis(params(1, 1, 0.3, 0.45, 0.5, 1), +1);
  const OperatorMatrix h = build_hamiltonian(basis);
  CHECK(h.entries(1, 0) == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(h.entries(0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(h.entries(1, 1) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("decoupled limit is diagonal with omega n + omega0 m") {
  const SectorBasis basis = enumerate_basis(params(1.3, 0.7, 0, 0, 2.5, 14), +1);
  const OperatorMatrix h = build_hamiltonian(basis);
  for (int i = 0; i < basis.dimension(); ++i) {
    for (int k = 0; k < basis.dimension(); ++k) {
      if (i == k) {
        CHECK(h.entries(i, i) == 1.3 * basis.state(i).n + 0.7 * basis.state(i).m());
      } else {
        CHECK(h.entries(i, k) == 0.0);
      }
    }
  }
}

TEST_CASE("hamiltonian is exactly symmetric") {
  const SectorBasis basis = enumerate_basis(params(1, 0.9, 0.6, 0.8, 2, 20), -1);
  const OperatorMatrix h = build_hamiltonian(basis);
  CHECK((h.entries - h.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parity sectors are exactly decoupled in the full basis") {
  const ModelParams p = params(1, 1, 0.7, 0.9, 1.5, 10);
  const Eigen::MatrixXd h = build_hamiltonian_full(p);
  const std::vector<BasisState> states = enumerate_full_basis(p);
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t k = 0; k < states.size(); ++k) {
      if (state_parity(states[i], p.two_j()) != state_parity(states[k], p.two_j())) {
        CHECK(h(static_cast<int>(i), static_cast<int>(k)) == 0.0);
      }
    }
  }
}

TEST_CASE("dicke line merges both couplings into (a†+a)(J+ + J-)") {
  // Independent construction through explicit operator products on the full
  // basis: boson ladder x spin ladder Kronecker blocks.
  const double g = 0.7;
  const ModelParams p = params(1, 1, g, g, 1.5, 6);
  const int two_j = p.two_j();
  const int nspin = two_j + 1;
  const int nboson = p.n_max + 1;
  const int dim = nboson * nspin;

  Eigen::MatrixXd adag = Eigen::MatrixXd::Zero(nboson, nboson);
  for (int n = 0; n + 1 < nboson; ++n) adag(n + 1, n) = std::sqrt(n + 1.0);
  Eigen::MatrixXd jplus = Eigen::MatrixXd::Zero(nspin, nspin);
  const double jj1 = 0.25 * two_j * (two_j + 2);
  for (int k = 0; k + 1 < nspin; ++k) {
    const double m = k - 0.5 * two_j;
    jplus(k + 1, k) = std::sqrt(jj1 - m * (m + 1));
  }

  auto kron = [&](const Eigen::MatrixXd& b, const Eigen::MatrixXd& s) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
    for (int nb = 0; nb < nboson; ++nb)
      for (int mb = 0; mb < nboson; ++mb)
        for (int ns = 0; ns < nspin; ++ns)
          for (int ms = 0; ms < nspin; ++ms)
            out(nb * nspin + ns, mb * nspin + ms) = b(nb, mb) * s(ns, ms);
    return out;
  };

  Eigen::MatrixXd number_spin = Eigen::MatrixXd::Zero(nspin, nspin);
  for (int k = 0; k < nspin; ++k) number_spin(k, k) = k - 0.5 * two_j;
  Eigen::MatrixXd number_boson = Eigen::MatrixXd::Zero(nboson, nboson);
  for (int n = 0; n < nboson; ++n) number_boson(n, n) = n;

  const Eigen::MatrixXd identity_spin = Eigen::MatrixXd::Identity(nspin, nspin);
  const Eigen::MatrixXd identity_boson = Eigen::MatrixXd::Identity(nboson, nboson);
  const Eigen::MatrixXd reference =
      p.omega * kron(number_boson, identity_spin) + p.omega0 * kron(identity_boson, number_spin) +
      (g / std::sqrt(static_cast<double>(two_j))) *
          kron(adag + adag.transpose(), jplus + jplus.transpose());

  const Eigen::MatrixXd h = build_hamiltonian_full(p);
  CHECK((h - reference).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("co-rotating model conserves the excitation number exactly") {
  const ModelParams p = params(1, 0.8, 0.5, 0, 2, 15);
  const Eigen::MatrixXd h = build_hamiltonian_full(p);
  const std::vector<BasisState> states = enumerate_full_basis(p);
  Eigen::MatrixXd excitation = Eigen::MatrixXd::Zero(h.rows(), h.cols());
  for (size_t i = 0; i < states.size(); ++i) {
    excitation(static_cast<int>(i), static_cast<int>(i)) =
        states[i].n + states[i].m() + p.j;
  }
  const Eigen::MatrixXd commutator = h * excitation - excitation * h;
  CHECK(commutator.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("observable matrices on the j=1/2 sector") {
  const SectorBasis basis = enumerate_basis(params(1, 1, 0, 0, 0.5, 1), +1);
  const OperatorMatrix number = observable_matrix(basis, Observable::number());
  CHECK(number.entries(0, 0) == 0.0);
  CHECK(number.entries(1, 1) == 1.0);
  const OperatorMatrix shifted = observable_matrix(basis, Observable::number_plus_shift(100));
  CHECK(shifted.entries(0, 0) == 100.0);
  CHECK(shifted.entries(1, 1) == 101.0);
  const OperatorMatrix jz = observable_matrix(basis, Observable::jz());
  CHECK(jz.entries(0, 0) == -0.5);
  CHECK(jz.entries(1, 1) == +0.5);
  CHECK(number.entries.isDiagonal(0.0));
}

TEST_CASE("symmetry partner swaps couplings and flips omega0") {
  const ModelParams partner = symmetry_partner(params(1, 1, 0.3, 0.7, 1.5, 30));
  CHECK(partner.omega == 1.0);
  CHECK(partner.omega0 == -1.0);
  CHECK(partner.g1 == 0.7);
  CHECK(partner.g2 == 0.3);
  CHECK(partner.j == 1.5);
  CHECK(partner.n_max == 30);

  const ModelParams dicke = symmetry_partner(params(1, 1, 0.5, 0.5, 1, 10));
  CHECK(dicke.g1 == 0.5);
  CHECK(dicke.g2 == 0.5);
  CHECK(dicke.omega0 == -1.0);
}
