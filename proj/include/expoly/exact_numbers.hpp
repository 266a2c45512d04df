#ifndef EXPOLY_EXACT_NUMBERS_HPP
#define EXPOLY_EXACT_NUMBERS_HPP

#include "expoly/rational.hpp"

#include <shared_mutex>
#include <vector>

namespace expoly {

enum class StirlingKind { second, first_unsigned };

/// Lazily extended triangular table of Stirling numbers.  Thread safe:
/// readers take a shared lock, extension takes an exclusive one, and a row
/// becomes visible only once fully built.
class StirlingCache {
 public:
  explicit StirlingCache(StirlingKind kind) : kind_(kind) {}

  BigInt value(int n, int k) const;
  std::vector<BigInt> row(int n) const;
  int rows_computed() const;

 private:
  void ensure_rows(int n) const;

  StirlingKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

/// Cache of Bernoulli numbers; each entry is computed independently from a
/// Stirling row, so extension never depends on partially filled state.
class BernoulliCache {
 public:
  BigRational value(int n) const;
  int computed() const;

 private:
  void ensure(int n) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<BigRational> values_;
};

BigInt binomial(int n, int k);

/// Stirling number of the second kind {n, k}, by the triangular recurrence.
BigInt stirling2(int n, int k);

/// {n, k} by the explicit alternating-sum formula; the division by k! is
/// checked to be exact and a logic_error is thrown if it is not.
BigInt stirling2_explicit(int n, int k);

/// Unsigned Stirling number of the first kind [n, k].
BigInt stirling1_unsigned(int n, int k);

/// Bernoulli numbers with B_1 = -1/2.
BigRational bernoulli(int n);

/// Bell number, the row sum of {n, k} over k.
BigInt bell(int n);

StirlingCache& stirling2_cache();
StirlingCache& stirling1_cache();
BernoulliCache& bernoulli_cache();

}  // namespace expoly

#endif
