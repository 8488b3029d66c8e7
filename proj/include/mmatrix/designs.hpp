#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "mmatrix/matrixgen.hpp"
#include "mmatrix/types.hpp"

namespace mmatrix {

/// v x b binary matrix: rows are treatments, columns are blocks.
class IncidenceMatrix {
 public:
  /// Throws DimensionError for an empty matrix and DomainError for non-binary entries.
  explicit IncidenceMatrix(IntMatrix entries);

  int treatments() const { return static_cast<int>(entries_.rows()); }
  int blocks() const { return static_cast<int>(entries_.cols()); }
  const IntMatrix& entries() const { return entries_; }
  int at(int treatment, int block) const { return entries_(treatment - 1, block - 1); }

 private:
  IntMatrix entries_;
};

/// +1 -> 1, -1 -> 0.
IncidenceMatrix to_incidence(const SignMatrix& m);

struct ReplicationBlocksize {
  std::optional<int> r;  ///< common row sum
  std::optional<int> k;  ///< common column sum
};

ReplicationBlocksize replication_blocksize(const IncidenceMatrix& n);

/// N N^T: entry (x, y) counts blocks holding both x and y.
IntMatrix concurrence(const IncidenceMatrix& n);

/// Treatment pairs partitioned by concurrence value.
///
/// Classes are numbered 1..m in ascending concurrence. p(i, j, k) counts, for
/// any pair in class i, the third treatments that are j-th associates of the
/// first and k-th associates of the second. When some count is not constant
/// valid() is false and witness() says where it broke.
class AssociationScheme {
 public:
  int treatments() const { return static_cast<int>(class_of_.rows()); }
  int class_count() const { return static_cast<int>(lambdas_.size()); }

  /// Class of the unordered pair {x, y}, x != y, 1-based.
  int class_of(int x, int y) const { return class_of_(x - 1, y - 1); }
  const IntMatrix& class_matrix() const { return class_of_; }

  const std::vector<int>& lambdas() const { return lambdas_; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }

  /// p^i_{jk}, all indices 1-based.
  int p(int i, int j, int k) const { return p_tensors_[i - 1](j - 1, k - 1); }
  /// The m x m table for fixed class i.
  const IntMatrix& p_matrix(int i) const { return p_tensors_[i - 1]; }

  bool valid() const { return valid_; }
  const std::string& witness() const { return witness_; }

 private:
  friend AssociationScheme infer_scheme(const IntMatrix& concurrence);

  IntMatrix class_of_;
  std::vector<int> lambdas_;
  std::vector<int> class_sizes_;
  std::vector<IntMatrix> p_tensors_;
  bool valid_ = true;
  std::string witness_;
};

AssociationScheme infer_scheme(const IntMatrix& concurrence);

/// Checks the symmetry, row-sum and balance identities of the p-tensors.
/// Returns an empty string when they all hold, else the first violation.
std::string check_scheme_identities(const AssociationScheme& scheme);

enum class DesignKind { SBIB, SPBIB_M_CLASS, IRREGULAR };

std::string_view to_string(DesignKind kind);

struct DesignSummary {
  int v = 0;
  int b = 0;
  std::optional<int> r;
  std::optional<int> k;
  std::vector<int> lambdas;
  std::vector<int> class_sizes;
  DesignKind kind = DesignKind::IRREGULAR;
  std::optional<AssociationScheme> scheme;
};

DesignSummary classify_design(const IncidenceMatrix& n);

/// sum n_i = v - 1 and sum n_i lambda_i = r(k - 1). Empty string when both hold.
std::string check_pbib_identities(const DesignSummary& summary);

using Rational = boost::rational<long>;

/// r - (n - g)/4, the concurrence predicted from an orthogonal number.
Rational lambda_from_g(int n, int r, int g);

/// lambda_from_g as an integer; throws FormulaMismatch when it is not integral.
int lambda_from_g_exact(int n, int r, int g);

}  // namespace mmatrix
