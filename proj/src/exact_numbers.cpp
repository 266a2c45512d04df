#include "expoly/exact_numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace expoly {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative index");
}

}  // namespace

BigInt StirlingCache::value(int n, int k) const {
  require_nonnegative(n, "StirlingCache::value");
  if (k < 0 || k > n) return 0;
  ensure_rows(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<BigInt> StirlingCache::row(int n) const {
  require_nonnegative(n, "StirlingCache::row");
  ensure_rows(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)];
}

int StirlingCache::rows_computed() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(rows_.size());
}

void StirlingCache::ensure_rows(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (rows_.size() > static_cast<std::size_t>(n)) return;
  }
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = rows_.back();
    std::size_t m = rows_.size();  // index of the row being built
    std::vector<BigInt> next(m + 1);
    next[0] = 0;
    for (std::size_t k = 1; k < m; ++k) {
      BigInt keep = (kind_ == StirlingKind::second) ? BigInt(k) * prev[k]
                                                    : BigInt(m - 1) * prev[k];
      next[k] = keep + prev[k - 1];
    }
    next[m] = prev[m - 1];
    rows_.push_back(std::move(next));
  }
}

BigRational BernoulliCache::value(int n) const {
  require_nonnegative(n, "BernoulliCache::value");
  ensure(n);
  std::shared_lock lock(mutex_);
  return values_[static_cast<std::size_t>(n)];
}

int BernoulliCache::computed() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(values_.size());
}

void BernoulliCache::ensure(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (values_.size() > static_cast<std::size_t>(n)) return;
  }
  // Each value comes straight from a Stirling row: B_{m+1} equals
  // (m+1)/(2^{m+1}-1) times sum_j (-1)^{j+1} {m,j} j! / 2^{j+1}, and the
  // m = 0 instance already lands on B_1 = -1/2.
  std::unique_lock lock(mutex_);
  if (values_.empty()) values_.push_back(BigRational(1));
  while (values_.size() <= static_cast<std::size_t>(n)) {
    int m = static_cast<int>(values_.size()) - 1;
    auto row = stirling2_cache().row(m);
    BigRational sum = 0;
    BigInt jfact = 1;
    BigInt pow2 = 2;  // 2^{j+1}
    for (int j = 0; j <= m; ++j) {
      if (j > 0) jfact *= j;
      BigRational term(row[static_cast<std::size_t>(j)] * jfact, pow2);
      if (j % 2 == 0) {
        sum -= term;
      } else {
        sum += term;
      }
      pow2 *= 2;
    }
    BigRational scale(BigInt(m + 1), ipow(BigInt(2), static_cast<unsigned>(m + 1)) - 1);
    values_.push_back(scale * sum);
  }
}

BigInt binomial(int n, int k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is a binomial coefficient at every step
  }
  return result;
}

BigInt stirling2(int n, int k) { return stirling2_cache().value(n, k); }

BigInt stirling2_explicit(int n, int k) {
  require_nonnegative(n, "stirling2_explicit");
  if (k < 0) return 0;
  // The alternating sum is evaluated for any k; it vanishes on its own for
  // k > n, which the tests exercise rather than shortcutting here.
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * ipow(BigInt(k - j), static_cast<unsigned>(n));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt kfact = factorial(static_cast<unsigned>(k));
  BigInt q, r;
  divide_qr(sum, kfact, q, r);
  if (r != 0) throw std::logic_error("stirling2_explicit: alternating sum not divisible by k!");
  return q;
}

BigInt stirling1_unsigned(int n, int k) { return stirling1_cache().value(n, k); }

BigRational bernoulli(int n) { return bernoulli_cache().value(n); }

BigInt bell(int n) {
  require_nonnegative(n, "bell");
  auto row = stirling2_cache().row(n);
  BigInt sum = 0;
  for (const auto& v : row) sum += v;
  return sum;
}

StirlingCache& stirling2_cache() {
  static StirlingCache cache(StirlingKind::second);
  return cache;
}

StirlingCache& stirling1_cache() {
  static StirlingCache cache(StirlingKind::first_unsigned);
  return cache;
}

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace expoly
