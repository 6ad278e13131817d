#pragma once

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "pfdimers/errors.hpp"
#include "pfdimers/kasteleyn.hpp"
#include "pfdimers/rational.hpp"

namespace pfdimers {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = Matrix<GaussRational>;
using FloatMatrix = Matrix<Complex>;

// a_jk = sum over edges j -> k of i^omega(e) w(e), antisymmetrized. Loops
// are rejected since they cannot be dimers and break skew-symmetry.
template <class Scalar>
Matrix<Scalar> build_adjacency(const CombinatorialMap& map, const Cochain1& omega, const Orientation& k) {
  using T = ScalarTraits<Scalar>;
  const int n = map.vertex_count();
  Matrix<Scalar> a = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (int e = 0; e < map.edge_count(); ++e) {
    if (map.is_loop(e)) throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(e) + " is a loop");
    Scalar entry = T::from(map.weight(e));
    if (omega[e]) entry = entry * T::i_power(1);
    int t = tail(map, k, e), h = head(map, k, e);
    a(t, h) = a(t, h) + entry;
    a(h, t) = a(h, t) - entry;
  }
  return a;
}

struct PfaffianDiagnostics {
  bool ill_conditioned = false;
  double smallest_pivot_ratio = 1.0;
};

// Pfaffian by skew-symmetric elimination. Floating point uses the largest
// entry in the row as pivot; exact arithmetic takes the first nonzero one.
template <class Scalar>
Scalar pfaffian(Matrix<Scalar> a, PfaffianDiagnostics* diagnostics = nullptr, double pivot_threshold = 1e-12) {
  using T = ScalarTraits<Scalar>;
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw Error(ErrorKind::OddDimension, "matrix is not square");
  if (n % 2 != 0) return Scalar(0);
  Scalar pf(1);
  double scale = 0.0;
  if (!T::exact)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scale = std::max(scale, T::magnitude(a(i, j)));
  for (int k = 0; k + 1 < n; k += 2) {
    int p = -1;
    if constexpr (T::exact) {
      for (int j = k + 1; j < n; ++j)
        if (!T::is_zero(a(k, j))) {
          p = j;
          break;
        }
    } else {
      double best = 0.0;
      for (int j = k + 1; j < n; ++j)
        if (double m = T::magnitude(a(k, j)); m > best) {
          best = m;
          p = j;
        }
      if (diagnostics && scale > 0.0) {
        double ratio = best / scale;
        diagnostics->smallest_pivot_ratio = std::min(diagnostics->smallest_pivot_ratio, ratio);
        if (ratio < pivot_threshold) diagnostics->ill_conditioned = true;
      }
    }
    if (p < 0) return Scalar(0);
    if (p != k + 1) {
      a.row(k + 1).swap(a.row(p));
      a.col(k + 1).swap(a.col(p));
      pf = -pf;
    }
    const Scalar pivot = a(k, k + 1);
    pf = pf * pivot;
    for (int i = k + 2; i < n; ++i) {
      if (T::is_zero(a(k, i)) && T::is_zero(a(k + 1, i))) continue;
      const Scalar u = a(k, i) / pivot, v = a(k + 1, i) / pivot;
      for (int j = k + 2; j < n; ++j) {
        if (j == i) continue;
        a(i, j) = a(i, j) - (u * a(k + 1, j) - v * a(k, j));
      }
    }
  }
  return pf;
}

// Defining expansion along the first row; exponential, for testing.
template <class Scalar>
Scalar pfaffian_expansion(const Matrix<Scalar>& a, int limit = 12) {
  const int n = static_cast<int>(a.rows());
  if (n > limit) throw Error(ErrorKind::TooLarge, "expansion limited to " + std::to_string(limit) + " rows");
  if (n % 2 != 0) return Scalar(0);
  if (n == 0) return Scalar(1);
  Scalar total(0);
  for (int j = 1; j < n; ++j) {
    if (ScalarTraits<Scalar>::is_zero(a(0, j))) continue;
    std::vector<int> keep;
    for (int i = 1; i < n; ++i)
      if (i != j) keep.push_back(i);
    Matrix<Scalar> minor(n - 2, n - 2);
    for (int r = 0; r < n - 2; ++r)
      for (int c = 0; c < n - 2; ++c) minor(r, c) = a(keep[r], keep[c]);
    Scalar term = a(0, j) * pfaffian_expansion<Scalar>(minor, limit);
    total = (j % 2 == 1) ? total + term : total - term;
  }
  return total;
}

// Determinant by Gaussian elimination (exact) or partial-pivot LU (float).
template <class Scalar>
Scalar determinant(Matrix<Scalar> a) {
  using T = ScalarTraits<Scalar>;
  const int n = static_cast<int>(a.rows());
  if constexpr (!T::exact) {
    return n == 0 ? Scalar(1) : Scalar(a.partialPivLu().determinant());
  } else {
    Scalar det(1);
    for (int k = 0; k < n; ++k) {
      int p = -1;
      for (int r = k; r < n; ++r)
        if (!T::is_zero(a(r, k))) {
          p = r;
          break;
        }
      if (p < 0) return Scalar(0);
      if (p != k) {
        a.row(k).swap(a.row(p));
        det = -det;
      }
      det = det * a(k, k);
      for (int r = k + 1; r < n; ++r) {
        if (T::is_zero(a(r, k))) continue;
        const Scalar f = a(r, k) / a(k, k);
        for (int c = k + 1; c < n; ++c) a(r, c) = a(r, c) - f * a(k, c);
      }
    }
    return det;
  }
}

// For A = [[0, M], [-M^T, 0]] with k x k blocks, Pf(A) = (-1)^{k(k-1)/2} det M.
template <class Scalar>
Scalar bipartite_pfaffian(const Matrix<Scalar>& a, int k) {
  using T = ScalarTraits<Scalar>;
  if (a.rows() != 2 * k || a.cols() != 2 * k) throw Error(ErrorKind::NotBlockForm, "dimension mismatch");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!T::is_zero(a(i, j)) || !T::is_zero(a(k + i, k + j)))
        throw Error(ErrorKind::NotBlockForm, "diagonal blocks are not zero");
  Scalar det = determinant<Scalar>(a.topRightCorner(k, k));
  return (k * (k - 1) / 2) % 2 == 0 ? det : Scalar(-det);
}

// Conjugate a vertex ordering into the adjacency matrix.
template <class Scalar>
Matrix<Scalar> permuted(const Matrix<Scalar>& a, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  Matrix<Scalar> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a(order[i], order[j]);
  return out;
}

}  // namespace pfdimers
