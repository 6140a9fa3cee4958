#include "dzv/rational.hpp"

#include <mutex>
#include <stdexcept>

namespace dzv {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer rising_factorial(long x, long m) {
  Integer r = 1;
  for (long i = 0; i < m; ++i) r *= Integer(x + i);
  return r;
}

namespace {
std::mutex bern_mutex;
std::vector<Rational> bern_cache;  // bern_cache[n] = B_n

void extend_bernoulli(long n) {
  if (bern_cache.empty()) {
    bern_cache.emplace_back(1);
    bern_cache.emplace_back(Rational(-1, 2));
  }
  // Defining recurrence: sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1.
  while (static_cast<long>(bern_cache.size()) <= n) {
    long i = static_cast<long>(bern_cache.size());
    Rational acc = 0;
    for (long j = 0; j < i; ++j) acc += Rational(binomial(i + 1, j)) * bern_cache[j];
    acc /= Integer(i + 1);
    bern_cache.push_back(-acc);
  }
}
}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  if (n > 1 && n % 2 == 1) return Rational(0);
  std::lock_guard<std::mutex> lock(bern_mutex);
  extend_bernoulli(n);
  return bern_cache[n];
}

Rational pow_rational(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? Rational(1) / x : x;
  long n = e < 0 ? -e : e;
  Rational r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::string to_fraction_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
  r.canonicalize();
  return r;
}

Rational normalize_coprime(std::vector<Rational>& v) {
  for (auto& x : v) x.canonicalize();
  Integer den_lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Integer num_gcd = 0;
  int lead_sign = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Integer n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    if (lead_sign == 0) lead_sign = sgn(n);
  }
  if (lead_sign == 0) return Rational(1);
  Rational factor(den_lcm * lead_sign, num_gcd);
  factor.canonicalize();
  for (auto& x : v) x *= factor;
  return factor;
}

}  // namespace dzv
