#include "mmatrix/designs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mmatrix/errors.hpp"

namespace mmatrix {

IncidenceMatrix::IncidenceMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0)
    throw DimensionError("incidence matrix must have at least one treatment and one block");
  if (((entries_.array() != 0) && (entries_.array() != 1)).any())
    throw DomainError("incidence matrix entries must be 0 or 1");
}

IncidenceMatrix to_incidence(const SignMatrix& m) {
  return IncidenceMatrix(m.entries().unaryExpr([](int s) { return s > 0 ? 1 : 0; }));
}

namespace {

template <typename Derived>
std::optional<int> common_value(const Eigen::MatrixBase<Derived>& sums) {
  if (sums.size() == 0) return std::nullopt;
  const int first = sums(0);
  if ((sums.array() != first).any()) return std::nullopt;
  return first;
}

}  // namespace

ReplicationBlocksize replication_blocksize(const IncidenceMatrix& n) {
  const IntVector rows = n.entries().rowwise().sum();
  const IntVector cols = n.entries().colwise().sum().transpose();
  return {common_value(rows), common_value(cols)};
}

IntMatrix concurrence(const IncidenceMatrix& n) {
  return n.entries() * n.entries().transpose();
}

AssociationScheme infer_scheme(const IntMatrix& c) {
  if (c.rows() != c.cols()) throw DimensionError("concurrence matrix must be square");
  AssociationScheme scheme;
  const int v = static_cast<int>(c.rows());
  scheme.class_of_ = IntMatrix::Zero(v, v);

  auto fail = [&scheme](std::string why) {
    if (scheme.valid_) {
      scheme.valid_ = false;
      scheme.witness_ = std::move(why);
    }
  };

  if (v > 0 && (c.diagonal().array() != c(0, 0)).any())
    fail("concurrence diagonal is not constant");

  std::set<int> values;
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      if (c(x, y) != c(y, x)) {
        std::ostringstream os;
        os << "concurrence not symmetric at (" << x + 1 << "," << y + 1 << ")";
        fail(os.str());
      }
      values.insert(c(x, y));
    }
  }
  scheme.lambdas_.assign(values.begin(), values.end());
  const int m = static_cast<int>(scheme.lambdas_.size());

  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      if (x == y) continue;
      const int key = c(std::min(x, y), std::max(x, y));
      const auto pos = std::lower_bound(scheme.lambdas_.begin(), scheme.lambdas_.end(), key);
      scheme.class_of_(x, y) = static_cast<int>(pos - scheme.lambdas_.begin()) + 1;
    }
  }

  // Class sizes: associates per treatment in each class, constant over treatments.
  IntMatrix sizes = IntMatrix::Zero(v, m);
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y)
      if (x != y) ++sizes(x, scheme.class_of_(x, y) - 1);
  if (v > 0) {
    scheme.class_sizes_.assign(sizes.row(0).begin(), sizes.row(0).end());
    for (int x = 1; x < v; ++x) {
      for (int i = 0; i < m; ++i) {
        if (sizes(x, i) != sizes(0, i)) {
          std::ostringstream os;
          os << "treatment " << x + 1 << " has " << sizes(x, i) << " associates in class " << i + 1
             << ", treatment 1 has " << sizes(0, i);
          fail(os.str());
        }
      }
    }
  }

  // p^i_{jk}: first pair seen in class i fixes the table, every later pair must agree.
  scheme.p_tensors_.assign(static_cast<std::size_t>(m), IntMatrix::Zero(m, m));
  std::vector<std::pair<int, int>> first_pair(static_cast<std::size_t>(m), {-1, -1});
  IntMatrix counts(m, m);
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      const int i = scheme.class_of_(x, y) - 1;
      counts.setZero();
      for (int z = 0; z < v; ++z) {
        if (z == x || z == y) continue;
        ++counts(scheme.class_of_(x, z) - 1, scheme.class_of_(y, z) - 1);
      }
      auto& seen = first_pair[static_cast<std::size_t>(i)];
      if (seen.first < 0) {
        seen = {x, y};
        scheme.p_tensors_[static_cast<std::size_t>(i)] = counts;
        continue;
      }
      const IntMatrix& ref = scheme.p_tensors_[static_cast<std::size_t>(i)];
      if (counts != ref) {
        Eigen::Index j = 0, k = 0;
        (counts - ref).cwiseAbs().maxCoeff(&j, &k);
        std::ostringstream os;
        os << "p^" << i + 1 << "_{" << j + 1 << k + 1 << "} is " << ref(j, k) << " for pair ("
           << seen.first + 1 << "," << seen.second + 1 << ") but " << counts(j, k) << " for pair ("
           << x + 1 << "," << y + 1 << ")";
        fail(os.str());
      }
    }
  }
  return scheme;
}

std::string check_scheme_identities(const AssociationScheme& s) {
  const int m = s.class_count();
  const auto& sizes = s.class_sizes();
  std::ostringstream os;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      int row_sum = 0;
      for (int k = 1; k <= m; ++k) {
        row_sum += s.p(i, j, k);
        if (s.p(i, j, k) != s.p(i, k, j)) {
          os << "p^" << i << "_{" << j << k << "} != p^" << i << "_{" << k << j << "}";
          return os.str();
        }
        if (sizes[i - 1] * s.p(i, j, k) != sizes[j - 1] * s.p(j, i, k)) {
          os << "n_" << i << " p^" << i << "_{" << j << k << "} != n_" << j << " p^" << j << "_{"
             << i << k << "}";
          return os.str();
        }
      }
      const int expected = sizes[j - 1] - (i == j ? 1 : 0);
      if (row_sum != expected) {
        os << "sum_k p^" << i << "_{" << j << "k} = " << row_sum << ", expected " << expected;
        return os.str();
      }
    }
  }
  return {};
}

std::string_view to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::SBIB: return "SBIB";
    case DesignKind::SPBIB_M_CLASS: return "SPBIB";
    case DesignKind::IRREGULAR: return "IRREGULAR";
  }
  return "unknown";
}

DesignSummary classify_design(const IncidenceMatrix& n) {
  DesignSummary summary;
  summary.v = n.treatments();
  summary.b = n.blocks();
  const auto rk = replication_blocksize(n);
  summary.r = rk.r;
  summary.k = rk.k;

  AssociationScheme scheme = infer_scheme(concurrence(n));
  summary.lambdas = scheme.lambdas();
  if (scheme.valid()) summary.class_sizes = scheme.class_sizes();

  const bool proper = rk.r.has_value() && rk.k.has_value();
  const int m = scheme.class_count();
  if (proper && m == 1) {
    summary.kind = DesignKind::SBIB;
  } else if (proper && m >= 2 && scheme.valid()) {
    summary.kind = DesignKind::SPBIB_M_CLASS;
  } else {
    summary.kind = DesignKind::IRREGULAR;
  }
  summary.scheme = std::move(scheme);
  return summary;
}

std::string check_pbib_identities(const DesignSummary& s) {
  if (s.class_sizes.size() != s.lambdas.size()) return "class sizes undefined";
  int total = 0;
  int weighted = 0;
  for (std::size_t i = 0; i < s.lambdas.size(); ++i) {
    total += s.class_sizes[i];
    weighted += s.class_sizes[i] * s.lambdas[i];
  }
  std::ostringstream os;
  if (total != s.v - 1) {
    os << "sum n_i = " << total << ", expected v-1 = " << s.v - 1;
    return os.str();
  }
  if (!s.r || !s.k) return "r or k not constant";
  if (weighted != *s.r * (*s.k - 1)) {
    os << "sum n_i lambda_i = " << weighted << ", expected r(k-1) = " << *s.r * (*s.k - 1);
    return os.str();
  }
  return {};
}

Rational lambda_from_g(int n, int r, int g) {
  return Rational(r) - Rational(n - g, 4);
}

int lambda_from_g_exact(int n, int r, int g) {
  const Rational lambda = lambda_from_g(n, r, g);
  if (lambda.denominator() != 1) {
    std::ostringstream os;
    os << "r - (n - g)/4 = " << lambda << " is not an integer (n=" << n << ", r=" << r
       << ", g=" << g << ")";
    throw FormulaMismatch(os.str());
  }
  return static_cast<int>(lambda.numerator());
}

}  // namespace mmatrix
