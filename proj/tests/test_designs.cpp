#include <doctest.h>

#include <set>
#include <vector>

#include "mmatrix/designs.hpp"
#include "mmatrix/errors.hpp"
#include "mmatrix/orthogonality.hpp"

using namespace mmatrix;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IncidenceMatrix type3_incidence(int n) {
  return to_incidence(build_sign_matrix(GeneratorRule::Type3CyclicSum, n));
}

// Bose-Mesner route: with A_i the 0/1 matrix of class i, (A_j A_k)(x, y)
// equals p^i_{jk} for every pair (x, y) in class i. Returns false if that
// entry is not constant over the class, otherwise fills `out`.
bool algebra_p_tensors(const AssociationScheme& s, std::vector<IntMatrix>& out) {
  const int v = s.treatments();
  const int m = s.class_count();
  std::vector<IntMatrix> a(m, IntMatrix::Zero(v, v));
  for (int x = 1; x <= v; ++x)
    for (int y = 1; y <= v; ++y)
      if (x != y) a[s.class_of(x, y) - 1](x - 1, y - 1) = 1;
  out.assign(m, IntMatrix::Constant(m, m, -1));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      const IntMatrix product = a[j] * a[k];
      for (int x = 1; x <= v; ++x)
        for (int y = 1; y <= v; ++y) {
          if (x == y) continue;
          int& cell = out[s.class_of(x, y) - 1](j, k);
          const int value = product(x - 1, y - 1);
          if (cell < 0) cell = value;
          else if (cell != value) return false;
        }
    }
  return true;
}

}  // namespace

TEST_CASE("to_incidence") {
  CHECK(type3_incidence(3).entries() == from_rows({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  const auto n5 = type3_incidence(5);
  CHECK(n5.entries().row(0) == from_rows({{0, 1, 0, 1, 1}}));
  const SignMatrix ones(GeneratorRule::Type3CyclicSum, SignConvention::OddPlus, IntMatrix::Ones(4, 4));
  CHECK(to_incidence(ones).entries() == IntMatrix::Ones(4, 4));

  CHECK_THROWS_AS(IncidenceMatrix(IntMatrix(0, 3)), DimensionError);
  CHECK_THROWS_AS(IncidenceMatrix(from_rows({{0, 2}})), DomainError);
}

TEST_CASE("replication_blocksize") {
  auto rk5 = replication_blocksize(type3_incidence(5));
  CHECK(rk5.r == 3);
  CHECK(rk5.k == 3);
  auto rk9 = replication_blocksize(type3_incidence(9));
  CHECK(rk9.r == 5);
  CHECK(rk9.k == 5);
  auto id = replication_blocksize(IncidenceMatrix(IntMatrix::Identity(4, 4)));
  CHECK(id.r == 1);
  CHECK(id.k == 1);

  const IncidenceMatrix ragged(from_rows({{1, 1, 0}, {1, 0, 0}}));
  const auto rk = replication_blocksize(ragged);
  CHECK_FALSE(rk.r.has_value());
  CHECK_FALSE(rk.k.has_value());
  const IncidenceMatrix rows_only(from_rows({{1, 1}, {1, 0}, {0, 1}}));
  CHECK_FALSE(replication_blocksize(rows_only).r.has_value());
  CHECK(replication_blocksize(rows_only).k == 2);
}

TEST_CASE("concurrence") {
  auto off_diagonal = [](const IntMatrix& c) {
    std::set<int> values;
    for (int x = 0; x < c.rows(); ++x)
      for (int y = 0; y < c.cols(); ++y)
        if (x != y) values.insert(c(x, y));
    return values;
  };
  const auto c3 = concurrence(type3_incidence(3));
  CHECK(off_diagonal(c3) == std::set<int>{1});
  CHECK((c3.diagonal().array() == 2).all());
  CHECK(off_diagonal(concurrence(type3_incidence(5))) == std::set<int>{1, 2});
  CHECK(off_diagonal(concurrence(type3_incidence(9))) == std::set<int>{1, 2, 3, 4});

  // brute count of shared blocks
  const auto n7 = type3_incidence(7);
  const auto c7 = concurrence(n7);
  for (int x = 1; x <= 7; ++x)
    for (int y = 1; y <= 7; ++y) {
      int shared = 0;
      for (int b = 1; b <= 7; ++b) shared += n7.at(x, b) * n7.at(y, b);
      REQUIRE(c7(x - 1, y - 1) == shared);
    }
}

TEST_CASE("infer_scheme reproduces the worked P-matrices") {
  SUBCASE("n = 5") {
    const auto s = infer_scheme(concurrence(type3_incidence(5)));
    REQUIRE(s.valid());
    CHECK(s.class_count() == 2);
    CHECK(s.lambdas() == std::vector<int>{1, 2});
    CHECK(s.class_sizes() == std::vector<int>{2, 2});
    CHECK(s.p_matrix(1) == from_rows({{0, 1}, {1, 1}}));
    CHECK(s.p_matrix(2) == from_rows({{1, 1}, {1, 0}}));
  }
  SUBCASE("n = 9") {
    const auto s = infer_scheme(concurrence(type3_incidence(9)));
    REQUIRE(s.valid());
    CHECK(s.class_count() == 4);
    CHECK(s.lambdas() == std::vector<int>{1, 2, 3, 4});
    CHECK(s.class_sizes() == std::vector<int>{2, 2, 2, 2});
    CHECK(s.p_matrix(1) == from_rows({{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}, {1, 1, 0, 0}}));
    CHECK(s.p_matrix(2) == from_rows({{0, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}}));
    CHECK(s.p_matrix(3) == from_rows({{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 1}}));
    CHECK(s.p_matrix(4) == from_rows({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}));
    CHECK(s.p(1, 1, 4) == 1);
  }
  SUBCASE("one class") {
    const auto s = infer_scheme(concurrence(type3_incidence(3)));
    REQUIRE(s.valid());
    CHECK(s.class_count() == 1);
    CHECK(s.class_sizes() == std::vector<int>{2});
    CHECK(s.p(1, 1, 1) == 1);

    IntMatrix complete = IntMatrix::Constant(6, 6, 2);
    complete.diagonal().setConstant(4);
    const auto c = infer_scheme(complete);
    REQUIRE(c.valid());
    CHECK(c.class_sizes() == std::vector<int>{5});
    CHECK(c.p(1, 1, 1) == 4);
  }
}

TEST_CASE("infer_scheme reports broken axioms as data") {
  SUBCASE("class sizes differ") {
    // path 1-2-3: treatment 2 has two lambda=1 associates, the ends have one
    const IntMatrix c = from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    const auto s = infer_scheme(c);
    CHECK_FALSE(s.valid());
    CHECK(s.witness().find("associates in class") != std::string::npos);
  }
  SUBCASE("p-count not constant") {
    // 6-cycle on treatments with lambda 1 for neighbours and 0 otherwise:
    // class 1 = cycle, class 2 = distance 2 and 3 merged, which is not a scheme
    IntMatrix c = IntMatrix::Zero(6, 6);
    for (int x = 0; x < 6; ++x) {
      c(x, x) = 3;
      c(x, (x + 1) % 6) = c((x + 1) % 6, x) = 1;
    }
    const auto s = infer_scheme(c);
    CHECK_FALSE(s.valid());
    CHECK(s.witness().find("p^") != std::string::npos);
  }
  SUBCASE("diagonal not constant") {
    const auto s = infer_scheme(from_rows({{2, 1}, {1, 3}}));
    CHECK_FALSE(s.valid());
    CHECK(s.witness() == "concurrence diagonal is not constant");
  }
  CHECK_THROWS_AS(infer_scheme(IntMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("classify_design") {
  SUBCASE("n = 3: SBIB(3,2,1)") {
    const auto d = classify_design(type3_incidence(3));
    CHECK(d.kind == DesignKind::SBIB);
    CHECK(d.v == 3);
    CHECK(d.b == 3);
    CHECK(d.k == 2);
    CHECK(d.r == 2);
    CHECK(d.lambdas == std::vector<int>{1});
  }
  SUBCASE("n = 5") {
    const auto d = classify_design(type3_incidence(5));
    CHECK(d.kind == DesignKind::SPBIB_M_CLASS);
    CHECK(d.v == 5);
    CHECK(d.b == 5);
    CHECK(d.r == 3);
    CHECK(d.k == 3);
    CHECK(d.lambdas == std::vector<int>{1, 2});
    CHECK(d.class_sizes == std::vector<int>{2, 2});
    CHECK(check_pbib_identities(d).empty());
  }
  SUBCASE("n = 9") {
    const auto d = classify_design(type3_incidence(9));
    CHECK(d.kind == DesignKind::SPBIB_M_CLASS);
    CHECK(d.lambdas == std::vector<int>{1, 2, 3, 4});
    CHECK(d.scheme->class_count() == 4);
  }
  SUBCASE("irregular") {
    const auto d = classify_design(IncidenceMatrix(from_rows({{1, 1, 0}, {1, 0, 0}, {0, 1, 1}})));
    CHECK(d.kind == DesignKind::IRREGULAR);
    CHECK_FALSE(d.r.has_value());
    CHECK_FALSE(check_pbib_identities(d).empty());
  }
  SUBCASE("even n collapses to two classes with distinct row patterns") {
    const auto d = classify_design(type3_incidence(6));
    CHECK(d.r == 3);
    CHECK(d.lambdas == std::vector<int>{0, 3});
    CHECK(d.kind == DesignKind::SPBIB_M_CLASS);
  }
}

TEST_CASE("odd type 3 designs: scheme axioms and the algebraic p-tensors") {
  for (int n = 3; n <= 41; n += 2) {
    const auto d = classify_design(type3_incidence(n));
    REQUIRE(d.r == (n + 1) / 2);
    REQUIRE(d.k == (n + 1) / 2);
    REQUIRE(d.scheme.has_value());
    REQUIRE(d.scheme->valid());
    REQUIRE(check_scheme_identities(*d.scheme).empty());
    REQUIRE(check_pbib_identities(d).empty());

    std::vector<IntMatrix> oracle;
    REQUIRE(algebra_p_tensors(*d.scheme, oracle));
    for (int i = 1; i <= d.scheme->class_count(); ++i) REQUIRE(d.scheme->p_matrix(i) == oracle[i - 1]);
  }
}

TEST_CASE("lambda_from_g") {
  // brute force over every n = 5 and n = 9 pair first
  for (int n : {5, 9}) {
    const auto signs = build_sign_matrix(GeneratorRule::Type3CyclicSum, n);
    const auto conc = concurrence(to_incidence(signs));
    for (int x = 1; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y)
        REQUIRE(lambda_from_g(n, (n + 1) / 2, inner_product(signs.row(x), signs.row(y))) ==
                Rational(conc(x - 1, y - 1)));
  }
  CHECK(lambda_from_g(5, 3, -3) == Rational(1));
  CHECK(lambda_from_g(9, 5, 5) == Rational(4));
  for (int n = 3; n <= 41; n += 2) CHECK(lambda_from_g(n, (n + 1) / 2, n) == Rational((n + 1) / 2));
  CHECK(lambda_from_g_exact(5, 3, -3) == 1);
  CHECK(lambda_from_g(5, 3, -2) == Rational(5, 4));
  CHECK_THROWS_AS(lambda_from_g_exact(5, 3, -2), FormulaMismatch);
}

TEST_CASE("lambda_from_g agrees with concurrence for odd n up to 41") {
  for (int n = 3; n <= 41; n += 2) {
    const auto signs = build_sign_matrix(GeneratorRule::Type3CyclicSum, n);
    const auto n_mat = to_incidence(signs);
    const int r = *replication_blocksize(n_mat).r;
    for (int x = 1; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y) {
        int shared = 0;
        for (int b = 1; b <= n; ++b) shared += n_mat.at(x, b) * n_mat.at(y, b);
        REQUIRE(lambda_from_g_exact(n, r, inner_product(signs.row(x), signs.row(y))) == shared);
      }
  }
}

TEST_CASE("design kind names") {
  CHECK(to_string(DesignKind::SBIB) == "SBIB");
  CHECK(to_string(DesignKind::SPBIB_M_CLASS) == "SPBIB");
  CHECK(to_string(DesignKind::IRREGULAR) == "IRREGULAR");
}
