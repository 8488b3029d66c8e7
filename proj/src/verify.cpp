#include "mmatrix/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "mmatrix/designs.hpp"
#include "mmatrix/errors.hpp"
#include "mmatrix/graphs.hpp"
#include "mmatrix/orthogonality.hpp"

namespace mmatrix {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Skip: return "SKIP";
  }
  return "unknown";
}

std::vector<int> admissible_orders(GeneratorRule rule, int lo, int hi) {
  std::vector<int> orders;
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    try {
      check_order(rule, n);
      orders.push_back(n);
    } catch (const Error&) {
    }
  }
  return orders;
}

namespace {

// Everything a claim may look at for one order. The determinant is only
// computed on demand.
class Context {
 public:
  Context(GeneratorRule rule, SignConvention convention, int n)
      : table(build_base(rule, n)), signs(apply_signs(table, convention)), prof(profile(signs)) {}

  int n() const { return signs.order(); }
  bool odd() const { return n() % 2 == 1; }

  const BigInt& determinant() {
    if (!det_) det_ = exact_determinant(signs).value;
    return *det_;
  }

  ModularTable table;
  SignMatrix signs;
  OrthogonalProfile prof;

 private:
  std::optional<BigInt> det_;
};

using Check = std::function<std::string(Context&)>;
using Applies = std::function<bool(const Context&)>;

struct Claim {
  std::string label;
  std::string description;
  Applies applies;
  Check check;
};

std::string sign_counts(Context& c) {
  const int n = c.n();
  const int plus = c.odd() ? (n + 1) / 2 : n / 2;
  const IntMatrix positive = (c.signs.entries().array() > 0).cast<int>();
  const IntVector rows = positive.rowwise().sum();
  const IntVector cols = positive.colwise().sum().transpose();
  for (int i = 0; i < n; ++i) {
    if (rows(i) != plus || cols(i) != plus) {
      std::ostringstream os;
      os << "row/column " << i + 1 << " has " << rows(i) << "/" << cols(i) << " entries +1, expected "
         << plus;
      return os.str();
    }
  }
  return {};
}

std::string odd_formula(Context& c) {
  const int n = c.n();
  std::set<int> realized{n};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int g = c.prof.value(i, j);
      const int k = coincident_unities(c.signs.row(i), c.signs.row(j));
      std::ostringstream os;
      if (k < 1 || k > (n + 1) / 2 || g != predicted_g_odd(n, k)) {
        os << "rows " << i << "," << j << ": g=" << g << " but k=" << k;
        return os.str();
      }
      try {
        const int recovered = unity_count_from_g(n, g);
        if (recovered != k || recovered > (n - 1) / 2) {
          os << "rows " << i << "," << j << ": recovered k=" << recovered << ", counted " << k;
          return os.str();
        }
      } catch (const FormulaMismatch& e) {
        return e.what();
      }
      realized.insert(g);
    }
  }
  std::set<int> expected;
  for (int k = 1; k <= (n + 1) / 2; ++k) expected.insert(predicted_g_odd(n, k));
  if (realized != expected) {
    std::ostringstream os;
    os << "realized values plus trivial:";
    for (int g : realized) os << ' ' << g;
    os << "; formula:";
    for (int g : expected) os << ' ' << g;
    return os.str();
  }
  return {};
}

std::string self_products(Context& c) {
  const IntVector diag = c.prof.gram().diagonal();
  for (int i = 0; i < c.n(); ++i) {
    if (diag(i) != c.n()) {
      std::ostringstream os;
      os << "row " << i + 1 << " self product " << diag(i);
      return os.str();
    }
  }
  return {};
}

std::string pair_sums(Context& c) {
  const int n = c.n();
  const int half = (n + 1) / 2;
  for (int t1 = 1; t1 < half; ++t1) {
    const int t2 = half - t1;
    const int sum = predicted_g_odd(n, t1) + predicted_g_odd(n, t2);
    if (sum != -2) {
      std::ostringstream os;
      os << "theta=(" << t1 << "," << t2 << ") sum " << sum;
      return os.str();
    }
  }
  return {};
}

std::string number_sum(Context& c) {
  try {
    orthogonal_number_sum(c.n());
  } catch (const FormulaMismatch& e) {
    return e.what();
  }
  return {};
}

std::string odd_determinant(Context& c) {
  const BigInt& det = c.determinant();
  const BigInt predicted = predicted_determinant_odd(c.n());
  if (det != predicted) return "det " + det.str() + ", closed form " + predicted.str();
  return {};
}

std::string even_structure(Context& c) {
  const int n = c.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int g = c.prof.value(i, j);
      const int k = coincident_unities(c.signs.row(i), c.signs.row(j));
      std::ostringstream os;
      if (k > n / 2 || g != predicted_g_even(n, k)) {
        os << "rows " << i << "," << j << ": g=" << g << " but k=" << k;
        return os.str();
      }
      if (g != n && g != -n) {
        os << "rows " << i << "," << j << ": g=" << g << " not +-n";
        return os.str();
      }
    }
  }
  if (auto counts = sign_counts(c); !counts.empty()) return counts;
  if (c.determinant() != 0) return "det " + c.determinant().str() + ", expected 0";
  return {};
}

std::string diagonal_multiset(Context& c) {
  const int n = c.n();
  auto diag = principal_diagonal(c.table);
  std::sort(diag.begin(), diag.end());
  std::vector<int> expected;
  if (c.odd()) {
    for (int x = 1; x <= n; ++x) expected.push_back(x);
  } else {
    for (int x = 2; x <= n; x += 2) expected.insert(expected.end(), {x, x});
  }
  if (diag != expected) return "principal diagonal multiset differs";
  return {};
}

std::string design_structure(Context& c) {
  const int n = c.n();
  const IncidenceMatrix incidence = to_incidence(c.signs);
  const DesignSummary summary = classify_design(incidence);
  const int r = (n + 1) / 2;
  std::ostringstream os;
  if (summary.r != r || summary.k != r) {
    os << "r/k not constant " << r;
    return os.str();
  }
  if (!summary.scheme || !summary.scheme->valid())
    return "scheme invalid: " + (summary.scheme ? summary.scheme->witness() : std::string("absent"));
  if (auto why = check_scheme_identities(*summary.scheme); !why.empty()) return why;
  if (auto why = check_pbib_identities(summary); !why.empty()) return why;
  const IntMatrix conc = concurrence(incidence);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const Rational lambda = lambda_from_g(n, r, c.prof.value(x, y));
      if (lambda != Rational(conc(x - 1, y - 1))) {
        os << "pair " << x << "," << y << ": r-(n-g)/4 = " << lambda << ", concurrence "
           << conc(x - 1, y - 1);
        return os.str();
      }
    }
  }
  return {};
}

std::string levi_structure(Context& c) {
  const LeviGraph g = levi_graph(to_incidence(c.signs));
  const GraphStats stats = graph_stats(g);
  const int r = (c.n() + 1) / 2;
  if (!stats.bipartite) return "Levi graph not bipartite";
  if (!stats.regular || stats.degree != r) {
    std::ostringstream os;
    os << "Levi graph not " << r << "-regular";
    return os.str();
  }
  return {};
}

std::vector<Claim> claim_table(GeneratorRule rule, SignConvention convention) {
  const bool cyclic = rule == GeneratorRule::Type3CyclicSum && convention == SignConvention::OddPlus;
  auto odd_only = [cyclic](const Context& c) { return cyclic && c.odd(); };
  auto even_only = [cyclic](const Context& c) { return cyclic && !c.odd(); };
  auto any_cyclic = [cyclic](const Context&) { return cyclic; };
  auto always = [](const Context&) { return true; };

  return {
      {"Prop 2.1", "each row and column has (n+1)/2 entries +1 (odd n) or n/2 (even n)", any_cyclic,
       sign_counts},
      {"Prop 2.2", "pairwise g = 4k-2-n with k coincident unities; values with n fill k=1..(n+1)/2",
       odd_only, odd_formula},
      {"Prop 2.3", "sum of 4k-2-n over k=1..(n+1)/2 equals (n+1)/2", odd_only, number_sum},
      {"Result 2.1", "every row has self product n", always, self_products},
      {"Result 2.2", "det = (-1)^((n-1)/2) 2^(n-1), exact", odd_only, odd_determinant},
      {"Note 2.1", "g(theta1) + g(theta2) = -2 when theta1 + theta2 = (n+1)/2", odd_only, pair_sums},
      {"Note 2.3", "even n: g = 4k-n, every g is +-n, n/2 of each sign, det = 0", even_only,
       even_structure},
      {"Diagonal", "principal diagonal is 1..n (odd n) or two copies of 2,4,..,n (even n)",
       any_cyclic, diagonal_multiset},
      {"Design", "r = k = (n+1)/2, valid scheme, p-tensor and PBIB identities, lambda = r-(n-g)/4",
       odd_only, design_structure},
      {"Levi", "Levi graph bipartite and (n+1)/2-regular", odd_only, levi_structure},
  };
}

}  // namespace

std::vector<ClaimResult> verify_claims(GeneratorRule rule, SignConvention convention, int lo,
                                       int hi) {
  const auto claims = claim_table(rule, convention);
  std::vector<ClaimResult> results;
  for (const auto& claim : claims) results.push_back({claim.label, claim.description, ClaimStatus::Skip, 0, {}});

  for (int n : admissible_orders(rule, lo, hi)) {
    Context context(rule, convention, n);
    for (std::size_t t = 0; t < claims.size(); ++t) {
      if (!claims[t].applies(context)) continue;
      ClaimResult& result = results[t];
      ++result.checked;
      const std::string failure = claims[t].check(context);
      if (!failure.empty() && result.status != ClaimStatus::Fail) {
        result.status = ClaimStatus::Fail;
        result.detail = "n=" + std::to_string(n) + ": " + failure;
      } else if (failure.empty() && result.status == ClaimStatus::Skip) {
        result.status = ClaimStatus::Pass;
      }
    }
  }
  for (auto& result : results) {
    if (result.checked == 0) result.detail = "no order in range to which it applies";
  }
  return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const ClaimResult& r) { return r.status == ClaimStatus::Fail; });
}

ScanRow scan_order(GeneratorRule rule, SignConvention convention, int n) {
  const SignMatrix signs = build_sign_matrix(rule, n, convention);
  const DeterminantResult det = exact_determinant(signs);
  const DesignSummary design = classify_design(to_incidence(signs));

  ScanRow row;
  row.n = n;
  row.type = rule_number(rule);
  row.convention = std::string(to_string(convention));
  row.det = det.value.str();
  if (det.predicted) {
    row.det_predicted = det.predicted->str();
    row.det_match = det.matches ? "true" : "false";
  }
  row.distinct_g = profile(signs).distinct_values();
  row.design_kind = std::string(to_string(design.kind));
  row.m_classes = static_cast<int>(design.lambdas.size());
  row.scheme_valid = design.scheme && design.scheme->valid();
  return row;
}

std::vector<ScanRow> scan_range(GeneratorRule rule, SignConvention convention, int lo, int hi) {
  const std::vector<int> orders = admissible_orders(rule, lo, hi);
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<ScanRow> rows;
  rows.reserve(orders.size());
  for (std::size_t start = 0; start < orders.size(); start += width) {
    std::vector<std::future<ScanRow>> batch;
    for (std::size_t t = start; t < std::min(orders.size(), start + width); ++t)
      batch.push_back(std::async(std::launch::async, scan_order, rule, convention, orders[t]));
    for (auto& f : batch) rows.push_back(f.get());
  }
  return rows;
}

}  // namespace mmatrix
