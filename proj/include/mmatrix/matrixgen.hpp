#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmatrix/types.hpp"

namespace mmatrix {

/// Modular rule used to fill the base table.
enum class GeneratorRule {
  Type1Affine,    ///< 1 + (i-1)(j-1) mod n, n prime
  Type2Product,   ///< i*j mod (n+1), n+1 prime
  Type3CyclicSum  ///< (i+j) mod n, any n >= 2
};

/// How table values are mapped onto +1/-1.
enum class SignConvention {
  OddPlus,     ///< odd -> +1, even -> -1
  EvenPlus,    ///< even -> +1, odd -> -1
  Type1Retain  ///< 1 -> +1, other odd -> -1, even -> +1
};

std::string_view to_string(GeneratorRule rule);
std::string_view to_string(SignConvention convention);

/// Integer tag used on the command line (1, 2, 3).
int rule_number(GeneratorRule rule);
std::optional<GeneratorRule> rule_from_number(int number);
std::optional<SignConvention> convention_from_string(std::string_view name);

/// Largest order the trial-division primality check is documented for.
inline constexpr long kMaxTrialDivisionOrder = 10'000;

/// Deterministic trial division. Exact for every n; intended for n <= 10^4.
bool is_prime(long n);

/// Maps x to its residue modulo n, represented in 1..n (a zero residue prints as n).
/// Throws InvalidOrder when n < 2.
long residue_representative(long x, long n);

/// n x n table of residues. Rows and columns are numbered 1..n in every
/// formula; storage is 0-based.
class ModularTable {
 public:
  ModularTable(GeneratorRule rule, IntMatrix entries);

  int order() const { return static_cast<int>(entries_.rows()); }
  GeneratorRule rule() const { return rule_; }
  const IntMatrix& entries() const { return entries_; }

  /// 1-based access.
  int at(int i, int j) const { return entries_(i - 1, j - 1); }

 private:
  GeneratorRule rule_;
  IntMatrix entries_;
};

/// n x n matrix of +1/-1 with the rule and convention it came from.
class SignMatrix {
 public:
  SignMatrix(GeneratorRule rule, SignConvention convention, IntMatrix entries);

  int order() const { return static_cast<int>(entries_.rows()); }
  GeneratorRule source_rule() const { return rule_; }
  SignConvention convention() const { return convention_; }
  const IntMatrix& entries() const { return entries_; }

  int at(int i, int j) const { return entries_(i - 1, j - 1); }
  auto row(int i) const { return entries_.row(i - 1); }

 private:
  GeneratorRule rule_;
  SignConvention convention_;
  IntMatrix entries_;
};

/// Throws InvalidOrder for n < 2 and PreconditionError when the rule's
/// primality requirement fails.
void check_order(GeneratorRule rule, long n);

ModularTable build_base(GeneratorRule rule, int n);

int sign_of(int value, SignConvention convention);

SignMatrix apply_signs(const ModularTable& table, SignConvention convention);

/// Convenience: build_base followed by apply_signs.
SignMatrix build_sign_matrix(GeneratorRule rule, int n,
                             SignConvention convention = SignConvention::OddPlus);

std::vector<int> principal_diagonal(const ModularTable& table);

}  // namespace mmatrix
