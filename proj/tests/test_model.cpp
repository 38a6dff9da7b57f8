#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "espec/errors.hpp"
#include "espec/model.hpp"

using namespace espec;

TEST_CASE("validate_params accepts a well-formed chain") {
  ModelParams params{8, 1.0, 0.2, 0.0};
  ModelParams out = validate_params(params);
  CHECK(out.sites == 8);
  CHECK(out.delta_t == 0.2);
}

TEST_CASE("validate_params rejects bad input") {
  CHECK_THROWS_AS(validate_params({7, 1.0, 0.2, 0.0}), InvalidParamsError);   // odd L
  CHECK_THROWS_AS(validate_params({2, 1.0, 0.2, 0.0}), InvalidParamsError);   // L < 4
  CHECK_THROWS_AS(validate_params({4, 0.0, 0.2, 0.0}), InvalidParamsError);   // t = 0
  CHECK_THROWS_AS(validate_params({4, -1.0, 0.2, 0.0}), InvalidParamsError);  // t < 0
  CHECK_THROWS_AS(validate_params({4, 1.0, std::nan(""), 0.0}), InvalidParamsError);
  CHECK_THROWS_AS(validate_params({4, 1.0, 0.0, std::numeric_limits<double>::infinity()}),
                  InvalidParamsError);
}

TEST_CASE("validate_params permits strong dimerization") {
  CHECK_NOTHROW(validate_params({4, 1.0, 1.0, 0.0}));
  CHECK_NOTHROW(validate_params({4, 1.0, -1.5, 0.0}));
}

TEST_CASE("validate_cut bounds") {
  ModelParams params{8, 1.0, 0.0, 0.0};
  CHECK_NOTHROW(validate_cut(params, {4}));
  CHECK_NOTHROW(validate_cut(params, {2}));
  CHECK_NOTHROW(validate_cut(params, {6}));
  CHECK_THROWS_AS(validate_cut(params, {3}), InvalidParamsError);
  CHECK_THROWS_AS(validate_cut(params, {0}), InvalidParamsError);
  CHECK_THROWS_AS(validate_cut(params, {8}), InvalidParamsError);
}

TEST_CASE("hopping matrix bonds for L=4 PBC") {
  ModelParams params{4, 1.0, 0.2, 0.0};
  Eigen::MatrixXd h = build_hopping_matrix(params, BoundaryCondition::PBC);
  CHECK(h(0, 1) == -1.2);
  CHECK(h(1, 2) == -0.8);
  CHECK(h(2, 3) == -1.2);
  CHECK(h(3, 0) == -0.8);  // wrap bond carries t - delta_t
  CHECK(h(0, 2) == 0.0);
  CHECK(h(1, 3) == 0.0);
  CHECK(h(0, 0) == 0.0);
}

TEST_CASE("hopping matrix for L=4 OBC drops the wrap bond") {
  ModelParams params{4, 1.0, 0.2, 0.0};
  Eigen::MatrixXd pbc = build_hopping_matrix(params, BoundaryCondition::PBC);
  Eigen::MatrixXd obc = build_hopping_matrix(params, BoundaryCondition::OBC);
  CHECK(obc(3, 0) == 0.0);
  CHECK(obc(0, 3) == 0.0);
  pbc(3, 0) = pbc(0, 3) = 0.0;
  CHECK(pbc == obc);
}

TEST_CASE("undimerized L=6 PBC has six bonds of -1") {
  ModelParams params{6, 1.0, 0.0, 0.0};
  Eigen::MatrixXd h = build_hopping_matrix(params, BoundaryCondition::PBC);
  int bonds = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (h(i, j) != 0.0) {
        CHECK(h(i, j) == -1.0);
        ++bonds;
      }
  CHECK(bonds == 6);
}

TEST_CASE("hopping matrix is bitwise symmetric") {
  for (double delta_t : {-0.7, 0.0, 0.3, 1.0}) {
    ModelParams params{10, 1.0, delta_t, 0.0};
    for (auto bc : {BoundaryCondition::PBC, BoundaryCondition::OBC}) {
      Eigen::MatrixXd h = build_hopping_matrix(params, bc);
      for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) CHECK(h(i, j) == h(j, i));
    }
  }
}

TEST_CASE("row sparsity: PBC rows have exactly 2 nonzeros, OBC at most 2") {
  ModelParams params{8, 1.0, 0.3, 0.0};
  Eigen::MatrixXd pbc = build_hopping_matrix(params, BoundaryCondition::PBC);
  Eigen::MatrixXd obc = build_hopping_matrix(params, BoundaryCondition::OBC);
  for (int i = 0; i < 8; ++i) {
    int nz_pbc = 0, nz_obc = 0;
    for (int j = 0; j < 8; ++j) {
      if (pbc(i, j) != 0.0) ++nz_pbc;
      if (obc(i, j) != 0.0) ++nz_obc;
    }
    CHECK(nz_pbc == 2);
    CHECK(nz_obc <= 2);
  }
}

TEST_CASE("dimerization swap: negating delta_t equals a one-site rotation") {
  const int n = 8;
  ModelParams plus{n, 1.0, 0.35, 0.0};
  ModelParams minus{n, 1.0, -0.35, 0.0};
  Eigen::MatrixXd h_plus = build_hopping_matrix(plus, BoundaryCondition::PBC);
  Eigen::MatrixXd h_minus = build_hopping_matrix(minus, BoundaryCondition::PBC);
  // P h(-dt) P^T with P the cyclic relabeling i -> i+1 (mod L)
  Eigen::MatrixXd rotated(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rotated((i + 1) % n, (j + 1) % n) = h_minus(i, j);
  CHECK(rotated == h_plus);
}

TEST_CASE("bond list layout") {
  ModelParams params{6, 1.0, 0.1, 0.0};
  auto pbc = chain_bonds(params, BoundaryCondition::PBC);
  auto obc = chain_bonds(params, BoundaryCondition::OBC);
  CHECK(pbc.size() == 6);
  CHECK(obc.size() == 5);
  CHECK(pbc.back().a == 0);
  CHECK(pbc.back().b == 5);
  CHECK(pbc.back().amplitude == 0.9);
}
