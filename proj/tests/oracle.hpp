// Copyright 2026 The boundent Authors
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

// Independent reference computations for the tests. Dense Eigen matrices,
// digit-by-digit index arithmetic and Eigen's self-adjoint solver; nothing
// here calls into the library routines it is used to check.

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "boundent/linalg.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Cplx = std::complex<double>;

inline Mat to_eigen(const boundent::ComplexOperator& op) {
  Mat m(op.dim(), op.dim());
  for (std::size_t r = 0; r < op.dim(); ++r) {
    for (std::size_t c = 0; c < op.dim(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = op(r, c);
  }
  return m;
}

inline Mat to_eigen(const boundent::DensityMatrix& rho) { return to_eigen(rho.op()); }

inline Vec to_eigen(const boundent::Ket& k) {
  Vec v(k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) v(static_cast<Eigen::Index>(i)) = k[i];
  return v;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

// Binary digits of an index, qubit 1 first.
inline std::vector<int> digits(std::uint64_t index, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(index % 2);
    index /= 2;
  }
  return d;
}

inline std::uint64_t undigits(const std::vector<int>& d) {
  std::uint64_t index = 0;
  for (int v : d) index = index * 2 + static_cast<std::uint64_t>(v);
  return index;
}

// Transpose of the listed qubits (1-based) by exchanging row and column digits.
inline Mat partial_transpose(const Mat& m, int n, const std::vector<int>& qubits) {
  Mat out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      auto dr = digits(static_cast<std::uint64_t>(r), n);
      auto dc = digits(static_cast<std::uint64_t>(c), n);
      for (int q : qubits) std::swap(dr[static_cast<std::size_t>(q - 1)], dc[static_cast<std::size_t>(q - 1)]);
      out(static_cast<Eigen::Index>(undigits(dr)), static_cast<Eigen::Index>(undigits(dc))) = m(r, c);
    }
  }
  return out;
}

inline Eigen::VectorXd eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double negativity(const Mat& rho, int n, const std::vector<int>& qubits) {
  const Eigen::VectorXd ev = eigenvalues(partial_transpose(rho, n, qubits));
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-10) s -= ev(i);
  }
  return 2.0 * s;
}

inline double trace_distance(const Mat& a, const Mat& b) {
  const Eigen::VectorXd ev = eigenvalues(a - b);
  return 0.5 * ev.cwiseAbs().sum();
}

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------- generators

inline Vec random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Cplx{g(rng), g(rng)};
  return v.normalized();
}

inline boundent::Ket random_ket(int n, std::mt19937_64& rng) {
  const Vec v = random_vector(std::size_t{1} << n, rng);
  return boundent::Ket(n, std::vector<Cplx>(v.data(), v.data() + v.size()));
}

// Ginibre-distributed mixed state of the given rank.
inline boundent::DensityMatrix random_density(int n, std::mt19937_64& rng, int rank = -1) {
  const std::size_t dim = std::size_t{1} << n;
  const auto cols = static_cast<Eigen::Index>(rank > 0 ? rank : static_cast<int>(dim));
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(static_cast<Eigen::Index>(dim), cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Cplx{g(rng), g(rng)};
  }
  Mat rho = a * a.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  std::vector<Cplx> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) entries[r * dim + c] = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  return boundent::DensityMatrix::from_operator(boundent::ComplexOperator(n, std::move(entries)));
}

inline boundent::ComplexOperator from_eigen(int n, const Mat& m) {
  std::vector<Cplx> entries(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
  }
  return boundent::ComplexOperator(n, std::move(entries));
}

}  // namespace oracle
