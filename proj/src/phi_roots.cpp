#include "expoly/exact_numbers.hpp"
#include "expoly/exp_poly.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace expoly {

namespace {

// Dense integer polynomial, index = power, no trailing zeros.
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int sign_of(const BigInt& v) {
  if (v == 0) return 0;
  return v < 0 ? -1 : 1;
}

// Sign of p(u/v) with v > 0: evaluate sum a_j u^j v^{deg-j} exactly.
int sign_at(const IntPoly& p, const BigRational& r) {
  if (p.empty()) return 0;
  BigInt u = numerator(r);
  BigInt v = denominator(r);
  std::size_t deg = p.size() - 1;
  BigInt acc = 0;
  BigInt upow = 1;
  std::vector<BigInt> vpow(p.size());
  vpow[deg] = 1;
  for (std::size_t j = deg; j-- > 0;) vpow[j] = vpow[j + 1] * v;
  for (std::size_t j = 0; j < p.size(); ++j) {
    acc += p[j] * upow * vpow[j];
    upow *= u;
  }
  return sign_of(acc);
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * BigInt(k);
  return out;
}

// Scale a rational polynomial by a positive constant to a primitive
// integer polynomial.  The positive scale keeps every sign intact, which
// is all the Sturm chain cares about.
IntPoly to_primitive(const std::vector<BigRational>& p) {
  BigInt l = 1;
  for (const auto& c : p) l = lcm(l, denominator(c));
  IntPoly out;
  out.reserve(p.size());
  BigInt g = 0;
  for (const auto& c : p) {
    BigInt v = numerator(c) * (l / denominator(c));
    g = gcd(g, v);
    out.push_back(std::move(v));
  }
  trim(out);
  if (out.empty()) return out;
  if (g != 0 && g != 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

std::vector<BigRational> to_rational_poly(const IntPoly& p) {
  std::vector<BigRational> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = BigRational(p[k]);
  return out;
}

// Remainder of a/b over the rationals.
std::vector<BigRational> poly_rem(std::vector<BigRational> a, const std::vector<BigRational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[k + shift] -= q * b[k];
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(p);
  IntPoly d = derivative(p);
  trim(d);
  if (d.empty()) return chain;
  chain.push_back(to_primitive(to_rational_poly(d)));
  while (chain.back().size() > 1) {
    auto rem = poly_rem(to_rational_poly(chain[chain.size() - 2]),
                        to_rational_poly(chain.back()));
    if (rem.empty()) break;
    for (auto& c : rem) c = -c;
    chain.push_back(to_primitive(rem));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const BigRational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct Isolator {
  const std::vector<IntPoly>& chain;
  const IntPoly& q;
  std::vector<std::pair<BigRational, BigRational>> brackets;

  // Number of roots in (a, b].
  int count(const BigRational& a, const BigRational& b) const {
    return sign_variations(chain, a) - sign_variations(chain, b);
  }

  void isolate(const BigRational& a, const BigRational& b, int roots_here, int depth) {
    if (roots_here == 0) return;
    if (depth > 200) throw RootFindingError("phi_roots: isolation depth exceeded");
    if (roots_here == 1) {
      brackets.emplace_back(a, b);
      return;
    }
    BigRational mid = (a + b) / 2;
    if (sign_at(q, mid) == 0) {
      // Cannot happen for these polynomials (their only possible rational
      // root is -1, peeled off before isolation), so treat it as a bug.
      throw RootFindingError("phi_roots: probe landed on an exact root");
    }
    int left = count(a, mid);
    isolate(a, mid, left, depth + 1);
    isolate(mid, b, roots_here - left, depth + 1);
  }
};

double refine(const IntPoly& q, BigRational lo, BigRational hi) {
  int slo = sign_at(q, lo);
  int shi = sign_at(q, hi);
  if (shi == 0) return to_double(hi);
  if (slo == 0 || slo == shi) {
    throw RootFindingError("phi_roots: lost the sign change while refining");
  }
  // Interval widths start below ~10^3 and halve each step, so 60 steps put
  // the width near 1e-15, well inside the double rounding of the result.
  for (int step = 0; step < 60; ++step) {
    BigRational mid = (lo + hi) / 2;
    int smid = sign_at(q, mid);
    if (smid == 0) return to_double(mid);
    if (smid == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return to_double((lo + hi) / 2);
}

}  // namespace

std::vector<double> phi_roots(int n) {
  if (n < 1 || n > 25) throw std::domain_error("phi_roots: n must be in [1, 25]");

  // phi_n = x * q(x); work on the deflated monic integer polynomial q.
  auto coeffs = phi(n).coeffs();
  IntPoly q(coeffs.begin() + 1, coeffs.end());

  std::vector<double> roots;
  roots.push_back(0.0);

  // The only rational root q can have is -1 (monic, constant term 1);
  // peel it off exactly so no later probe can land on a root.
  BigInt at_minus_one = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (k % 2 == 0) {
      at_minus_one += q[k];
    } else {
      at_minus_one -= q[k];
    }
  }
  if (at_minus_one == 0) {
    IntPoly deflated(q.size() - 1);
    BigInt carry = 0;  // synthetic division by (x + 1)
    for (std::size_t k = q.size(); k-- > 1;) {
      carry = q[k] - carry;
      deflated[k - 1] = carry;
    }
    q = std::move(deflated);
    roots.push_back(-1.0);
  }

  if (q.size() > 1) {
    auto chain = sturm_chain(q);
    if (chain.back().size() > 1) {
      throw RootFindingError("phi_roots: polynomial is not squarefree");
    }
    // All roots lie in (-b, 0): their magnitudes sum to the second-highest
    // coefficient, which b exceeds by one.
    BigRational b(-(q[q.size() - 2] + 1));
    BigRational zero(0);

    Isolator iso{chain, q, {}};
    iso.isolate(b, zero, iso.count(b, zero), 0);
    if (iso.brackets.size() + roots.size() != static_cast<std::size_t>(n)) {
      throw RootFindingError("phi_roots: isolation found the wrong root count");
    }
    for (const auto& [lo, hi] : iso.brackets) {
      roots.push_back(refine(q, lo, hi));
    }
  } else if (roots.size() != static_cast<std::size_t>(n)) {
    throw RootFindingError("phi_roots: unexpected degree after deflation");
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace expoly
