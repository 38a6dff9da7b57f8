#include "espec/lanczos.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "espec/errors.hpp"

namespace espec {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// y -= c * x
void axpy(double c, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] -= c * x[i];
}

void fill_random(std::vector<double>& v, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double& x : v) x = gauss(rng);
}

void check_symmetry(const LinearOperator& apply, std::size_t dim, std::mt19937_64& rng) {
  std::vector<double> u(dim), v(dim), au(dim), av(dim);
  for (int trial = 0; trial < 2; ++trial) {
    fill_random(u, rng);
    fill_random(v, rng);
    double nu = norm2(u), nv = norm2(v);
    for (auto& x : u) x /= nu;
    for (auto& x : v) x /= nv;
    apply(u, au);
    apply(v, av);
    double lhs = dot(u, av), rhs = dot(au, v);
    double scale = std::max({1.0, norm2(au), norm2(av)});
    if (std::abs(lhs - rhs) > 1e-10 * scale)
      throw NonSymmetricOperatorError("operator fails the symmetry probe: <u,Av> - <Au,v> = " +
                                      std::to_string(lhs - rhs));
  }
}

}  // namespace

GroundStateResult lanczos_lowest(const LinearOperator& apply, std::size_t dim, int k,
                                 const LanczosOptions& opts) {
  if (dim == 0) throw InvalidParamsError("operator dimension must be positive");
  if (k < 1 || static_cast<std::size_t>(k) > dim)
    throw InvalidParamsError("k must lie in [1, dim], got " + std::to_string(k));

  std::mt19937_64 rng(opts.seed);
  check_symmetry(apply, dim, rng);

  std::vector<std::vector<double>> basis;  // Krylov vectors, kept for full reorthogonalization
  std::vector<double> alpha, beta;         // tridiagonal entries; beta[j] couples j and j+1
  std::vector<double> w(dim);

  auto push_random_orthonormal = [&]() -> bool {
    std::vector<double> v(dim);
    for (int attempt = 0; attempt < 16; ++attempt) {
      fill_random(v, rng);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) axpy(dot(q, v), q, v);
      double n = norm2(v);
      if (n > 1e-8) {
        for (double& x : v) x /= n;
        basis.push_back(std::move(v));
        return true;
      }
    }
    return false;
  };

  if (!push_random_orthonormal()) throw NotConvergedError("could not construct a start vector");

  GroundStateResult result;
  result.seed = opts.seed;

  auto solve_tridiagonal = [&](int from, int to) {
    // eigensystem of T[from..to) (to exclusive)
    const int m = to - from;
    Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i) diag(i) = alpha[static_cast<std::size_t>(from + i)];
    for (int i = 0; i + 1 < m; ++i) sub(i) = beta[static_cast<std::size_t>(from + i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (tri.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigensolver failed");
    return tri;
  };

  double scale = 1.0;      // running magnitude estimate, for breakdown detection
  int block_start = 0;     // where the current (post-restart) Krylov block begins in T
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const std::size_t j = basis.size() - 1;
    apply(basis[j], w);
    double a = dot(basis[j], w);
    alpha.resize(j + 1);
    alpha[j] = a;
    axpy(a, basis[j], w);
    if (j > 0 && beta.size() >= j && beta[j - 1] != 0.0) axpy(beta[j - 1], basis[j - 1], w);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) axpy(dot(q, w), q, w);
    double b = norm2(w);
    scale = std::max({scale, std::abs(a), b});
    const bool breakdown = b <= 1e-12 * scale;
    const bool full_span = basis.size() == dim;
    const int m = static_cast<int>(j + 1);

    auto tri = solve_tridiagonal(0, m);

    // Acceptance demands estimated residuals |b y_last| below tol for the k
    // wanted pairs AND for the lowest pair of the current block: a Ritz
    // value cannot be trusted as "k-th lowest" while the active block may
    // still dive below it. Earlier blocks ended in exact breakdown, so only
    // the active block can move. A breakdown short of the full space defers
    // acceptance to the restarted block.
    bool estimates_ok = false;
    if (m >= k) {
      if (full_span) {
        estimates_ok = true;
      } else if (!breakdown) {
        estimates_ok = true;
        for (int c = 0; c < k && estimates_ok; ++c)
          estimates_ok = std::abs(b * tri.eigenvectors()(m - 1, c)) < opts.tol;
        if (estimates_ok && block_start > 0) {
          auto block = solve_tridiagonal(block_start, m);
          const int bm = m - block_start;
          estimates_ok = std::abs(b * block.eigenvectors()(bm - 1, 0)) < opts.tol;
        }
      }
    }

    if (estimates_ok) {
      // assemble Ritz vectors and confirm with exact residuals
      std::vector<std::vector<double>> ritz(static_cast<std::size_t>(k),
                                            std::vector<double>(dim, 0.0));
      for (int c = 0; c < k; ++c)
        for (int i = 0; i < m; ++i) {
          double y = tri.eigenvectors()(i, c);
          const auto& q = basis[static_cast<std::size_t>(i)];
          auto& r = ritz[static_cast<std::size_t>(c)];
          for (std::size_t p = 0; p < dim; ++p) r[p] += y * q[p];
        }
      double worst = 0.0;
      std::vector<double> hv(dim);
      for (int c = 0; c < k; ++c) {
        auto& r = ritz[static_cast<std::size_t>(c)];
        double n = norm2(r);
        for (double& x : r) x /= n;
        apply(r, hv);
        axpy(tri.eigenvalues()(c), r, hv);
        worst = std::max(worst, norm2(hv));
      }
      if (worst < opts.tol) {
        result.energies.assign(tri.eigenvalues().data(), tri.eigenvalues().data() + k);
        result.ground_vector = std::move(ritz[0]);
        result.residual = worst;
        result.gap = k >= 2 ? result.energies[1] - result.energies[0] : 0.0;
        result.iterations = iter + 1;
        return result;
      }
    }

    if (full_span) throw NotConvergedError("Krylov basis spans the space without meeting tol");
    beta.resize(j + 1);
    if (breakdown) {
      // invariant subspace; restart the three-term recurrence in the
      // orthogonal complement
      beta[j] = 0.0;
      if (!push_random_orthonormal())
        throw NotConvergedError("breakdown: no direction orthogonal to the Krylov basis");
      block_start = m;
    } else {
      beta[j] = b;
      std::vector<double> next(dim);
      for (std::size_t p = 0; p < dim; ++p) next[p] = w[p] / b;
      basis.push_back(std::move(next));
    }
  }
  throw NotConvergedError("Lanczos did not reach tol " + std::to_string(opts.tol) + " within " +
                          std::to_string(opts.max_iter) + " iterations");
}

}  // namespace espec
