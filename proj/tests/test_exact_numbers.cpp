#include "expoly/exact_numbers.hpp"

#include <doctest.h>

#include <algorithm>
#include <future>
#include <numeric>
#include <vector>

using namespace expoly;

namespace {

std::vector<BigRational> bernoulli_oracle(int max_n) {
  std::vector<BigRational> b(static_cast<std::size_t>(max_n) + 1);
  b[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigRational acc = 0;
    for (int k = 0; k < n; ++k) acc += BigRational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(n)] = -acc / BigRational(n + 1);
  }
  return b;
}

}  // namespace

TEST_SUITE("exact_numbers") {

TEST_CASE("second kind small values") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(1, 0) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(6, 3) == 90);
  CHECK(stirling2(7, 7) == 1);
  CHECK(stirling2(9, 1) == 1);
  // row sums are Bell numbers
  for (int n = 0; n <= 12; ++n) {
    BigInt row = 0;
    for (int k = 0; k <= n; ++k) row += stirling2(n, k);
    CHECK(row == bell(n));
  }
}

TEST_CASE("second kind recurrence vs alternating sum") {
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(stirling2(n, k) == stirling2_explicit(n, k));
    }
  }
}

TEST_CASE("first kind counts permutation cycles") {
  // brute force over S_5: tally permutations by cycle count
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BigInt> tally(6);
  do {
    std::vector<bool> seen(5, false);
    int cycles = 0;
    for (int s = 0; s < 5; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (int j = s; !seen[j]; j = perm[j]) seen[j] = true;
    }
    tally[static_cast<std::size_t>(cycles)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int k = 0; k <= 5; ++k) CHECK(tally[static_cast<std::size_t>(k)] == stirling1_unsigned(5, k));
  CHECK(stirling1_unsigned(5, 2) == 50);
}

TEST_CASE("stirling triangles are inverse") {
  // sum_j (-1)^{n-j} [n j] {j k} = delta_{nk}
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt acc = 0;
      for (int j = k; j <= n; ++j) {
        BigInt term = stirling1_unsigned(n, j) * stirling2(j, k);
        acc += (n - j) % 2 ? -term : term;
      }
      CHECK(acc == (n == k ? 1 : 0));
    }
  }
}

TEST_CASE("bernoulli values") {
  CHECK(bernoulli(0) == BigRational(1));
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(4) == BigRational(-1, 30));
  CHECK(bernoulli(6) == BigRational(1, 42));
  CHECK(bernoulli(8) == BigRational(-1, 30));
  CHECK(bernoulli(10) == BigRational(5, 66));
  CHECK(bernoulli(12) == BigRational(-691, 2730));
  for (int n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli matches the standard recurrence") {
  auto oracle = bernoulli_oracle(40);
  for (int n = 0; n <= 40; ++n) CHECK(bernoulli(n) == oracle[static_cast<std::size_t>(n)]);
}

TEST_CASE("bell numbers") {
  const long long first[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell(n) == first[n]);
  // binomial recurrence b_{n+1} = sum_k C(n,k) b_k
  for (int n = 0; n <= 30; ++n) {
    BigInt acc = 0;
    for (int k = 0; k <= n; ++k) acc += binomial(n, k) * bell(k);
    CHECK(acc == bell(n + 1));
  }
}

TEST_CASE("binomial pascal rule and symmetry") {
  for (int n = 1; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      CHECK(binomial(n, k) == binomial(n, n - k));
    }
  }
  CHECK(binomial(40, 20) == BigInt("137846528820"));
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("caches are safe under concurrent readers") {
  auto worker = [] {
    BigInt acc = 0;
    for (int n = 50; n <= 60; ++n)
      for (int k = 0; k <= n; ++k) acc += stirling2(n, k) + stirling1_unsigned(n, k);
    return acc;
  };
  auto f1 = std::async(std::launch::async, worker);
  auto f2 = std::async(std::launch::async, worker);
  auto f3 = std::async(std::launch::async, worker);
  BigInt a = f1.get(), b = f2.get(), c = f3.get();
  CHECK(a == b);
  CHECK(b == c);
}

}  // TEST_SUITE
