#include "qorb/arith.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qorb {

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // deterministic witness set for 64-bit inputs
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t next_prime_u64(uint64_t n) {
  uint64_t c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound >= 2) out.push_back(2);
  for (uint64_t n = 3; n <= bound; n += 2)
    if (is_prime_u64(n)) out.push_back(n);
  return out;
}

int legendre(const mpz_class& a, const mpz_class& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int kronecker(const mpz_class& a, const mpz_class& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpq_class rational_content(const std::vector<mpq_class>& vals) {
  mpz_class num = 0, den = 1;
  for (const auto& v : vals) {
    if (v == 0) continue;
    num = gcd(num * v.get_den(), v.get_num() * den);
    den *= v.get_den();
    mpz_class g = gcd(num, den);
    num /= g;
    den /= g;
  }
  mpq_class c(num, den);
  c.canonicalize();
  if (c < 0) c = -c;
  return c;
}

std::string shortest_double_string(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpz_class lim = mpz_class(1) << 53;
  if (abs(num) >= lim || abs(den) >= lim)
    throw std::invalid_argument("operands too large for exact double rendering");
  double x = static_cast<double>(num.get_d()) / static_cast<double>(den.get_d());
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  std::string s(buf.data(), res.ptr);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

std::string fixed_decimal_string(const mpq_class& v, int digits) {
  mpq_class a = v;
  bool neg = a < 0;
  if (neg) a = -a;
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = a.get_num() * scale, den = a.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class twice = 2 * r;
  if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t())))
    q += 1;
  std::string digs = q.get_str();
  while (static_cast<int>(digs.size()) <= digits) digs.insert(digs.begin(), '0');
  digs.insert(digs.end() - digits, '.');
  if (neg) digs.insert(digs.begin(), '-');
  return digs;
}

}  // namespace qorb
