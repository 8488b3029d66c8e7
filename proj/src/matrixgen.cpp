#include "mmatrix/matrixgen.hpp"

#include <string>
#include <utility>

#include "mmatrix/errors.hpp"

namespace mmatrix {

std::string_view to_string(GeneratorRule rule) {
  switch (rule) {
    case GeneratorRule::Type1Affine: return "type1-affine";
    case GeneratorRule::Type2Product: return "type2-product";
    case GeneratorRule::Type3CyclicSum: return "type3-cyclic-sum";
  }
  return "unknown";
}

std::string_view to_string(SignConvention convention) {
  switch (convention) {
    case SignConvention::OddPlus: return "odd-plus";
    case SignConvention::EvenPlus: return "even-plus";
    case SignConvention::Type1Retain: return "type1-retain";
  }
  return "unknown";
}

int rule_number(GeneratorRule rule) {
  switch (rule) {
    case GeneratorRule::Type1Affine: return 1;
    case GeneratorRule::Type2Product: return 2;
    case GeneratorRule::Type3CyclicSum: return 3;
  }
  return 0;
}

std::optional<GeneratorRule> rule_from_number(int number) {
  switch (number) {
    case 1: return GeneratorRule::Type1Affine;
    case 2: return GeneratorRule::Type2Product;
    case 3: return GeneratorRule::Type3CyclicSum;
    default: return std::nullopt;
  }
}

std::optional<SignConvention> convention_from_string(std::string_view name) {
  if (name == "odd-plus") return SignConvention::OddPlus;
  if (name == "even-plus") return SignConvention::EvenPlus;
  if (name == "type1-retain") return SignConvention::Type1Retain;
  return std::nullopt;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

long residue_representative(long x, long n) {
  if (n < 2) throw InvalidOrder("order must be at least 2, got " + std::to_string(n));
  long r = (x - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

ModularTable::ModularTable(GeneratorRule rule, IntMatrix entries)
    : rule_(rule), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("modular table must be square");
}

SignMatrix::SignMatrix(GeneratorRule rule, SignConvention convention, IntMatrix entries)
    : rule_(rule), convention_(convention), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("sign matrix must be square");
}

void check_order(GeneratorRule rule, long n) {
  if (n < 2) throw InvalidOrder("order must be at least 2, got " + std::to_string(n));
  switch (rule) {
    case GeneratorRule::Type1Affine:
      if (!is_prime(n)) throw PreconditionError("n must be prime for type 1");
      break;
    case GeneratorRule::Type2Product:
      if (!is_prime(n + 1)) throw PreconditionError("n+1 must be prime for type 2");
      break;
    case GeneratorRule::Type3CyclicSum:
      break;
  }
}

ModularTable build_base(GeneratorRule rule, int n) {
  check_order(rule, n);
  IntMatrix entries(n, n);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      long value = 0;
      switch (rule) {
        case GeneratorRule::Type1Affine:
          value = 1 + ((i - 1) * (j - 1)) % n;
          break;
        case GeneratorRule::Type2Product:
          // n+1 prime: i*j is never 0 mod n+1, so the residue is already in 1..n.
          value = residue_representative(i * j, n + 1);
          break;
        case GeneratorRule::Type3CyclicSum:
          value = residue_representative(i + j, n);
          break;
      }
      entries(i - 1, j - 1) = static_cast<int>(value);
    }
  }
  return ModularTable(rule, std::move(entries));
}

int sign_of(int value, SignConvention convention) {
  const bool odd = value % 2 != 0;
  switch (convention) {
    case SignConvention::OddPlus: return odd ? 1 : -1;
    case SignConvention::EvenPlus: return odd ? -1 : 1;
    case SignConvention::Type1Retain:
      if (value == 1) return 1;
      return odd ? -1 : 1;
  }
  return 0;
}

SignMatrix apply_signs(const ModularTable& table, SignConvention convention) {
  IntMatrix signs = table.entries().unaryExpr([convention](int v) { return sign_of(v, convention); });
  return SignMatrix(table.rule(), convention, std::move(signs));
}

SignMatrix build_sign_matrix(GeneratorRule rule, int n, SignConvention convention) {
  return apply_signs(build_base(rule, n), convention);
}

std::vector<int> principal_diagonal(const ModularTable& table) {
  const auto diag = table.entries().diagonal();
  return {diag.begin(), diag.end()};
}

}  // namespace mmatrix
