#include "mmatrix/orthogonality.hpp"

#include <string>

namespace mmatrix {

int inner_product(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw DimensionError("inner_product: rows differ in length");
  int sum = 0;
  for (std::size_t t = 0; t < a.size(); ++t) sum += a[t] * b[t];
  return sum;
}

OrthogonalProfile::OrthogonalProfile(IntMatrix gram) : gram_(std::move(gram)) {
  std::map<int, int> tally;
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram_.cols(); ++j) ++tally[gram_(i, j)];
  for (const auto& [g, count] : tally) {
    distinct_.push_back(g);
    counts_.push_back(count);
  }
}

int OrthogonalProfile::value(int i, int j) const {
  const int n = order();
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw DomainError("profile lookup needs two distinct rows in 1.." + std::to_string(n));
  return gram_(i - 1, j - 1);
}

int OrthogonalProfile::multiplicity(int g) const {
  for (std::size_t t = 0; t < distinct_.size(); ++t)
    if (distinct_[t] == g) return counts_[t];
  return 0;
}

std::size_t OrthogonalProfile::pair_count() const {
  const auto n = static_cast<std::size_t>(order());
  return n * (n - 1) / 2;
}

OrthogonalProfile profile(const SignMatrix& m) {
  IntMatrix gram = m.entries() * m.entries().transpose();
  return OrthogonalProfile(std::move(gram));
}

int predicted_g_odd(int n, int k) {
  if (n < 1 || n % 2 == 0) throw DomainError("predicted_g_odd requires odd n");
  if (k < 1 || k > (n + 1) / 2)
    throw DomainError("unity count k=" + std::to_string(k) + " outside 1.." +
                      std::to_string((n + 1) / 2));
  return 4 * k - 2 - n;
}

int predicted_g_even(int n, int k) {
  if (n < 2 || n % 2 != 0) throw DomainError("predicted_g_even requires even n");
  if (k < 0 || k > n / 2)
    throw DomainError("unity count k=" + std::to_string(k) + " outside 0.." +
                      std::to_string(n / 2));
  return 4 * k - n;
}

int unity_count_from_g(int n, int g) {
  if (n < 1 || n % 2 == 0) throw DomainError("unity_count_from_g requires odd n");
  const int shifted = g + 2 + n;
  if (shifted % 4 != 0)
    throw FormulaMismatch("g=" + std::to_string(g) + " is not of the form 4k-2-" +
                          std::to_string(n));
  const int k = shifted / 4;
  if (k < 1 || k > (n + 1) / 2)
    throw FormulaMismatch("g=" + std::to_string(g) + " gives k=" + std::to_string(k) +
                          " outside 1.." + std::to_string((n + 1) / 2));
  return k;
}

int orthogonal_number_sum(int n) {
  int sum = 0;
  for (int k = 1; k <= (n + 1) / 2; ++k) sum += predicted_g_odd(n, k);
  if (sum != (n + 1) / 2)
    throw FormulaMismatch("sum of orthogonal numbers is " + std::to_string(sum) +
                          ", expected " + std::to_string((n + 1) / 2));
  return sum;
}

BigInt predicted_determinant_odd(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("closed-form determinant requires odd n");
  BigInt power(1);
  power <<= (n - 1);
  return ((n - 1) / 2) % 2 == 0 ? power : BigInt(-power);
}

DeterminantResult exact_determinant(const SignMatrix& m) {
  DeterminantResult result;
  result.value = bareiss_determinant<BigInt>(m.entries());
  const int n = m.order();
  if (m.source_rule() == GeneratorRule::Type3CyclicSum && m.convention() == SignConvention::OddPlus &&
      n % 2 == 1) {
    result.predicted = predicted_determinant_odd(n);
    result.matches = result.value == *result.predicted;
  }
  return result;
}

}  // namespace mmatrix
