// Copyright 2026 The qhorn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Numerical witnesses for the multiplicative eigenvalue problem: unitaries
// A^j = U_j D_j U_j^* with prescribed spectra D_j = diag(exp(2 pi i delta^j))
// whose ordered product is the identity. The residual
// f(U_1..U_s) = |A^1 ... A^s - I|_F^2 is minimized over products of unitary
// groups; tangent steps U -> U (I + X), X skew-Hermitian, are pulled back to
// the manifold by QR.
//
// This is the only floating-point code in the library. A found witness
// certifies membership up to the tolerance; failure to find one proves
// nothing.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "qhorn/error.hpp"
#include "qhorn/horn.hpp"
#include "qhorn/schubert.hpp"

namespace qhorn {

using ComplexMatrix = Eigen::MatrixXcd;

enum class WitnessMethod {
  levenberg_marquardt,  // damped Gauss-Newton on the tangent space
  gradient_descent,     // Riemannian steepest descent with Armijo backtracking
};

struct WitnessOptions {
  int restarts = 100;
  int max_iters = 2000;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  WitnessMethod method = WitnessMethod::levenberg_marquardt;
  unsigned jobs = 1;
};

struct WitnessResult {
  bool found = false;
  double residual = std::numeric_limits<double>::infinity();
  std::vector<ComplexMatrix> matrices;
  int restarts_used = 0;
  int iterations_used = 0;
  std::uint64_t seed = 0;
};

/// diag(exp(2 pi i delta_b)).
inline ComplexMatrix class_diagonal(const ConjugacyClass& c) {
  const int r = c.rank();
  ComplexMatrix D = ComplexMatrix::Zero(r, r);
  for (int b = 0; b < r; ++b) D(b, b) = std::polar(1.0, 2.0 * std::numbers::pi * to_double(c[b]));
  return D;
}

/// |A A^* - I|_F.
inline double unitarity_defect(const ComplexMatrix& A) {
  return (A * A.adjoint() - ComplexMatrix::Identity(A.rows(), A.cols())).norm();
}

/// |A^1 ... A^s - I|_F.
inline double product_residual(const std::vector<ComplexMatrix>& A) {
  if (A.empty()) return 0.0;
  ComplexMatrix P = A.front();
  for (std::size_t j = 1; j < A.size(); ++j) P = P * A[j];
  return (P - ComplexMatrix::Identity(P.rows(), P.cols())).norm();
}

namespace detail {

/// Q factor of A with the phases of R's diagonal absorbed, so the result
/// depends continuously on A.
inline ComplexMatrix qr_unitary(const ComplexMatrix& A) {
  Eigen::HouseholderQR<ComplexMatrix> qr(A);
  ComplexMatrix Q = qr.householderQ();
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < A.cols(); ++k) {
    const std::complex<double> d = R(k, k);
    const double m = std::abs(d);
    if (m > 0) Q.col(k) *= d / m;
  }
  return Q;
}

inline ComplexMatrix haar_unitary(int r, std::mt19937_64& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix Z(r, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) Z(i, k) = {g(gen), g(gen)};
  return qr_unitary(Z);
}

/// Basis of the real vector space of r x r skew-Hermitian matrices.
inline std::vector<ComplexMatrix> skew_hermitian_basis(int r) {
  std::vector<ComplexMatrix> basis;
  const std::complex<double> I(0.0, 1.0);
  for (int k = 0; k < r; ++k) {
    ComplexMatrix E = ComplexMatrix::Zero(r, r);
    E(k, k) = I;
    basis.push_back(E);
  }
  for (int k = 0; k < r; ++k) {
    for (int l = k + 1; l < r; ++l) {
      ComplexMatrix E = ComplexMatrix::Zero(r, r);
      E(k, l) = 1.0;
      E(l, k) = -1.0;
      basis.push_back(E);
      ComplexMatrix F = ComplexMatrix::Zero(r, r);
      F(k, l) = I;
      F(l, k) = I;
      basis.push_back(F);
    }
  }
  return basis;
}

class OrbitProblem {
 public:
  explicit OrbitProblem(const ClassTuple& t) : r_(t.n()), basis_(skew_hermitian_basis(t.n())) {
    for (const auto& c : t.classes()) diag_.push_back(class_diagonal(c));
  }

  int rank() const { return r_; }
  std::size_t factors() const { return diag_.size(); }

  std::vector<ComplexMatrix> matrices(const std::vector<ComplexMatrix>& U) const {
    std::vector<ComplexMatrix> A;
    A.reserve(U.size());
    for (std::size_t j = 0; j < U.size(); ++j) A.push_back(U[j] * diag_[j] * U[j].adjoint());
    return A;
  }

  /// Residual matrix P - I and, optionally, prefix/suffix products.
  ComplexMatrix residual(const std::vector<ComplexMatrix>& A, std::vector<ComplexMatrix>* left = nullptr,
                         std::vector<ComplexMatrix>* right = nullptr) const {
    const std::size_t s = A.size();
    const ComplexMatrix Id = ComplexMatrix::Identity(r_, r_);
    std::vector<ComplexMatrix> L(s, Id), R(s, Id);
    for (std::size_t j = 1; j < s; ++j) L[j] = L[j - 1] * A[j - 1];
    for (std::size_t j = s - 1; j-- > 0;) R[j] = A[j + 1] * R[j + 1];
    const ComplexMatrix F = L[s - 1] * A[s - 1] - Id;
    if (left) *left = std::move(L);
    if (right) *right = std::move(R);
    return F;
  }

  /// Riemannian gradient of |F|^2 with respect to each U_j, as
  /// skew-Hermitian X_j for the tangent direction U_j X_j.
  std::vector<ComplexMatrix> gradient(const std::vector<ComplexMatrix>& U) const {
    const auto A = matrices(U);
    std::vector<ComplexMatrix> L, R;
    const ComplexMatrix F = residual(A, &L, &R);
    std::vector<ComplexMatrix> grad;
    for (std::size_t j = 0; j < U.size(); ++j) {
      const ComplexMatrix M = U[j].adjoint() * R[j] * F.adjoint() * L[j] * U[j];
      const ComplexMatrix G = diag_[j] * M - M * diag_[j];
      const ComplexMatrix Gh = G.adjoint();
      grad.push_back(Gh - Gh.adjoint());  // 2 * skew(G^*)
    }
    return grad;
  }

  /// Real Jacobian of vec(F) (real parts, then imaginary parts) against
  /// the skew-Hermitian basis coordinates of every X_j.
  Eigen::MatrixXd jacobian(const std::vector<ComplexMatrix>& U, const std::vector<ComplexMatrix>& A,
                           const std::vector<ComplexMatrix>& L, const std::vector<ComplexMatrix>& R) const {
    const Eigen::Index rows = 2 * r_ * r_;
    const Eigen::Index per = static_cast<Eigen::Index>(basis_.size());
    Eigen::MatrixXd J(rows, per * static_cast<Eigen::Index>(U.size()));
    for (std::size_t j = 0; j < U.size(); ++j) {
      for (Eigen::Index b = 0; b < per; ++b) {
        const ComplexMatrix& E = basis_[b];
        const ComplexMatrix dA = U[j] * (E * diag_[j] - diag_[j] * E) * U[j].adjoint();
        const ComplexMatrix dP = L[j] * dA * R[j];
        const Eigen::Index col = static_cast<Eigen::Index>(j) * per + b;
        for (Eigen::Index k = 0; k < r_ * r_; ++k) {
          J(k, col) = dP(k % r_, k / r_).real();
          J(k + r_ * r_, col) = dP(k % r_, k / r_).imag();
        }
      }
    }
    (void)A;
    return J;
  }

  std::vector<ComplexMatrix> retract(const std::vector<ComplexMatrix>& U, const std::vector<ComplexMatrix>& X) const {
    std::vector<ComplexMatrix> out;
    out.reserve(U.size());
    const ComplexMatrix Id = ComplexMatrix::Identity(r_, r_);
    for (std::size_t j = 0; j < U.size(); ++j) out.push_back(qr_unitary(U[j] * (Id + X[j])));
    return out;
  }

  std::vector<ComplexMatrix> from_coordinates(const Eigen::VectorXd& delta) const {
    const std::size_t per = basis_.size();
    std::vector<ComplexMatrix> X(diag_.size(), ComplexMatrix::Zero(r_, r_));
    for (std::size_t j = 0; j < diag_.size(); ++j)
      for (std::size_t b = 0; b < per; ++b) X[j] += delta(static_cast<Eigen::Index>(j * per + b)) * basis_[b];
    return X;
  }

 private:
  int r_;
  std::vector<ComplexMatrix> basis_;
  std::vector<ComplexMatrix> diag_;
};

struct RestartOutcome {
  double residual = std::numeric_limits<double>::infinity();
  std::vector<ComplexMatrix> matrices;
  int iterations = 0;
};

inline void check_finite(double x) {
  if (!std::isfinite(x)) throw NumericalError("non-finite residual during witness search");
}

inline Eigen::VectorXd residual_vector(const ComplexMatrix& F) {
  const Eigen::Index m = F.rows() * F.cols();
  Eigen::VectorXd v(2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    v(k) = F(k % F.rows(), k / F.rows()).real();
    v(k + m) = F(k % F.rows(), k / F.rows()).imag();
  }
  return v;
}

inline RestartOutcome run_levenberg_marquardt(const OrbitProblem& prob, std::vector<ComplexMatrix> U, int max_iters,
                                              double stop) {
  RestartOutcome out;
  double mu = 1e-3;
  auto A = prob.matrices(U);
  std::vector<ComplexMatrix> L, R;
  ComplexMatrix F = prob.residual(A, &L, &R);
  double f = F.squaredNorm();
  int it = 0;
  for (; it < max_iters; ++it) {
    check_finite(f);
    if (std::sqrt(f) < stop) break;
    const Eigen::MatrixXd J = prob.jacobian(U, A, L, R);
    const Eigen::VectorXd g = J.transpose() * residual_vector(F);
    const Eigen::MatrixXd H = J.transpose() * J;
    bool accepted = false;
    while (!accepted && mu < 1e12) {
      Eigen::MatrixXd damped = H;
      damped.diagonal().array() += mu;
      const Eigen::VectorXd delta = damped.ldlt().solve(-g);
      auto U_new = prob.retract(U, prob.from_coordinates(delta));
      auto A_new = prob.matrices(U_new);
      std::vector<ComplexMatrix> L_new, R_new;
      ComplexMatrix F_new = prob.residual(A_new, &L_new, &R_new);
      const double f_new = F_new.squaredNorm();
      if (std::isfinite(f_new) && f_new < f) {
        U = std::move(U_new);
        A = std::move(A_new);
        L = std::move(L_new);
        R = std::move(R_new);
        F = std::move(F_new);
        f = f_new;
        mu = std::max(mu / 3.0, 1e-15);
        accepted = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!accepted) break;  // stationary: no descent direction left
  }
  out.residual = std::sqrt(f);
  out.matrices = std::move(A);
  out.iterations = it;
  return out;
}

inline RestartOutcome run_gradient_descent(const OrbitProblem& prob, std::vector<ComplexMatrix> U, int max_iters,
                                           double stop) {
  RestartOutcome out;
  auto objective = [&](const std::vector<ComplexMatrix>& V) { return prob.residual(prob.matrices(V)).squaredNorm(); };
  double f = objective(U);
  double step = 0.1;
  int it = 0;
  for (; it < max_iters; ++it) {
    check_finite(f);
    if (std::sqrt(f) < stop) break;
    const auto grad = prob.gradient(U);
    double g2 = 0;
    for (const auto& G : grad) g2 += G.squaredNorm();
    if (g2 < 1e-30) break;
    bool accepted = false;
    step = std::min(step * 2.0, 10.0);
    while (step > 1e-14) {
      std::vector<ComplexMatrix> X;
      for (const auto& G : grad) X.push_back(-step * G);
      auto U_new = prob.retract(U, X);
      const double f_new = objective(U_new);
      if (std::isfinite(f_new) && f_new <= f - 1e-4 * step * g2) {
        U = std::move(U_new);
        f = f_new;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  out.residual = std::sqrt(f);
  out.matrices = prob.matrices(U);
  out.iterations = it;
  return out;
}

inline RestartOutcome run_restart(const OrbitProblem& prob, const WitnessOptions& opt, int index) {
  std::mt19937_64 gen(opt.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
  std::vector<ComplexMatrix> U;
  for (std::size_t j = 0; j < prob.factors(); ++j) U.push_back(haar_unitary(prob.rank(), gen));
  const double stop = opt.tol * 1e-2;
  return opt.method == WitnessMethod::levenberg_marquardt ? run_levenberg_marquardt(prob, std::move(U), opt.max_iters, stop)
                                                          : run_gradient_descent(prob, std::move(U), opt.max_iters, stop);
}

}  // namespace detail

/// Searches for unitaries in the classes of `t` with product I.
///
/// Restarts are seeded deterministically from opt.seed and the restart
/// index, and run in batches of opt.jobs. The result is the lowest-index
/// restart that meets the tolerance, or else the best residual (ties to the
/// lowest index), so it does not depend on the job count.
inline WitnessResult realize(const ClassTuple& t, const WitnessOptions& opt = {}) {
  if (opt.restarts < 1 || opt.max_iters < 1) throw DomainError("restarts and max_iters must be >= 1");
  if (!(opt.tol > 0)) throw DomainError("tolerance must be positive");
  const detail::OrbitProblem prob(t);
  WitnessResult result;
  result.seed = opt.seed;
  int best = -1;
  detail::RestartOutcome best_outcome;
  const int batch = static_cast<int>(std::max(1u, opt.jobs));
  for (int start = 0; start < opt.restarts; start += batch) {
    const int count = std::min(batch, opt.restarts - start);
    std::vector<detail::RestartOutcome> outcomes(static_cast<std::size_t>(count));
    if (count == 1) {
      outcomes[0] = detail::run_restart(prob, opt, start);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
      for (int k = 0; k < count; ++k)
        pool.emplace_back([&, k] {
          try {
            outcomes[k] = detail::run_restart(prob, opt, start + k);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    bool done = false;
    for (int k = 0; k < count; ++k) {
      result.iterations_used += outcomes[k].iterations;
      if (best < 0 || outcomes[k].residual < best_outcome.residual) {
        best = start + k;
        best_outcome = outcomes[k];
      }
      if (outcomes[k].residual < opt.tol) {
        best = start + k;
        best_outcome = std::move(outcomes[k]);
        result.restarts_used = start + k + 1;
        done = true;
        break;
      }
    }
    if (done) break;
    result.restarts_used = start + count;
  }
  result.found = best_outcome.residual < opt.tol;
  result.residual = best_outcome.residual;
  result.matrices = std::move(best_outcome.matrices);
  return result;
}

/// Closed-form witness for s = 2: A^1 = D, A^2 = D^{-1}, which lies in the
/// inverse class.
inline WitnessResult inverse_pair_witness(const ConjugacyClass& c) {
  WitnessResult result;
  const ComplexMatrix D = class_diagonal(c);
  result.matrices = {D, D.adjoint()};
  result.residual = product_residual(result.matrices);
  result.found = true;
  return result;
}

/// Whether a found witness is a valid unitary datum for `t`: right count
/// and shape, unitary, spectra equal to exp(2 pi i delta^j) as multisets
/// within 1e-8, and product residual below `tol`.
inline bool local_monodromy_check(const WitnessResult& w, const ClassTuple& t, double tol = 1e-6) {
  if (!w.found) return false;
  if (static_cast<int>(w.matrices.size()) != t.s()) return false;
  const int r = t.n();
  for (std::size_t j = 0; j < w.matrices.size(); ++j) {
    const ComplexMatrix& A = w.matrices[j];
    if (A.rows() != r || A.cols() != r) return false;
    if (unitarity_defect(A) > 1e-10) return false;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(A, false);
    if (es.info() != Eigen::Success) return false;
    std::vector<std::complex<double>> got(es.eigenvalues().data(), es.eigenvalues().data() + r);
    std::vector<bool> used(got.size(), false);
    for (int b = 0; b < r; ++b) {
      const std::complex<double> want = std::polar(1.0, 2.0 * std::numbers::pi * to_double(t[j][b]));
      std::size_t pick = got.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < got.size(); ++k) {
        if (used[k]) continue;
        const double dist = std::abs(got[k] - want);
        if (dist < best) {
          best = dist;
          pick = k;
        }
      }
      if (pick == got.size() || best > 1e-8) return false;
      used[pick] = true;
    }
  }
  return product_residual(w.matrices) < tol;
}

}  // namespace qhorn
