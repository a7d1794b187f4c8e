#include "graphk/numeric.hpp"

#include "graphk/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace graphk {

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

int valuation(Int n, const Int& p) {
  n = abs_int(n);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return (a * b) % m; }

Int powmod(Int base, Int exp, const Int& m) {
  Int result = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) != 0) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(const Int& a, const Int& n, const Int& d, int r) {
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  Int x = 2, y = 2, c = 1;
  while (true) {
    x = 2;
    y = 2;
    Int d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = gcd_int(x - y, n);
    }
    if (d != n) return d;
    c += 1;
  }
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic for n < 3.3e24 with this base set.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(a, n, d, r)) return false;
  }
  return true;
}

std::map<Int, int> factorize(Int n) {
  if (n < 1) throw input_error("factorize: argument must be >= 1");
  std::map<Int, int> out;
  for (int p : {2, 3, 5}) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
  }
  // wheel over 6k+-1
  Int p = 7;
  int step = 4;
  while (p * p <= n && p < 100000) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
    p += step;
    step = 6 - step;
  }
  // recursive splitting of the remaining cofactor
  std::vector<Int> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      out[m] += 1;
      continue;
    }
    Int d = pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return out;
}

bool is_prime_power(const Int& q, Int* prime_out) {
  if (q < 2) return false;
  auto f = factorize(q);
  if (f.size() != 1) return false;
  if (prime_out != nullptr) *prime_out = f.begin()->first;
  return true;
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace graphk
