#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "mmatrix/errors.hpp"
#include "mmatrix/matrixgen.hpp"
#include "mmatrix/types.hpp"

namespace mmatrix {

using BigInt = boost::multiprecision::mpz_int;

/// Inner product of two +1/-1 rows. Works on any pair of Eigen vector expressions.
template <typename DerivedA, typename DerivedB>
int inner_product(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) {
  if (a.size() != b.size()) throw DimensionError("inner_product: rows differ in length");
  int sum = 0;
  for (Eigen::Index t = 0; t < a.size(); ++t) sum += static_cast<int>(a(t) * b(t));
  return sum;
}

int inner_product(const std::vector<int>& a, const std::vector<int>& b);

/// All pairwise row inner products of a sign matrix.
///
/// Pairs are unordered; value(i, j) accepts either order, 1-based, i != j.
class OrthogonalProfile {
 public:
  explicit OrthogonalProfile(IntMatrix gram);

  int order() const { return static_cast<int>(gram_.rows()); }
  int value(int i, int j) const;
  int trivial_value() const { return order(); }

  /// Ascending distinct values over the n(n-1)/2 unordered pairs.
  const std::vector<int>& distinct_values() const { return distinct_; }
  /// Parallel to distinct_values().
  const std::vector<int>& multiplicities() const { return counts_; }
  int multiplicity(int g) const;
  std::size_t pair_count() const;

  /// Full Gram matrix M M^T; the diagonal holds the self products.
  const IntMatrix& gram() const { return gram_; }

 private:
  IntMatrix gram_;
  std::vector<int> distinct_;
  std::vector<int> counts_;
};

OrthogonalProfile profile(const SignMatrix& m);

/// 4k - 2 - n for odd n, 1 <= k <= (n+1)/2.
int predicted_g_odd(int n, int k);

/// 4k - n for even n, 0 <= k <= n/2.
int predicted_g_even(int n, int k);

/// Inverse of predicted_g_odd. Throws FormulaMismatch when g has no
/// integral k in 1..(n+1)/2.
int unity_count_from_g(int n, int g);

/// Sum of 4k - 2 - n over k = 1..(n+1)/2. Throws FormulaMismatch if the
/// evaluated sum differs from (n+1)/2.
int orthogonal_number_sum(int n);

/// Number of positions where both rows hold +1.
template <typename DerivedA, typename DerivedB>
int coincident_unities(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) {
  if (a.size() != b.size()) throw DimensionError("coincident_unities: rows differ in length");
  int k = 0;
  for (Eigen::Index t = 0; t < a.size(); ++t) k += (a(t) > 0 && b(t) > 0) ? 1 : 0;
  return k;
}

/// Fraction-free (Bareiss) determinant over an exact integer scalar.
/// Every division is exact; row swaps flip the sign.
template <typename Scalar, typename Derived>
Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);

  std::vector<Scalar> a(static_cast<std::size_t>(n * n));
  auto at = [&a, n](Eigen::Index i, Eigen::Index j) -> Scalar& {
    return a[static_cast<std::size_t>(i * n + j)];
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) at(i, j) = Scalar(input(i, j));

  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
    }
    previous = at(k, k);
  }
  Scalar det = at(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

struct DeterminantResult {
  BigInt value;
  /// Closed form (-1)^((n-1)/2) 2^(n-1); present for type 3, odd n, odd-plus.
  std::optional<BigInt> predicted;
  /// value == *predicted; false when no prediction applies.
  bool matches = false;
};

/// (-1)^((n-1)/2) * 2^(n-1).
BigInt predicted_determinant_odd(int n);

DeterminantResult exact_determinant(const SignMatrix& m);

}  // namespace mmatrix
