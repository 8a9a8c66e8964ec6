#pragma once
// Small number-theory helpers shared across the library.

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace qorb {

bool is_prime_u64(uint64_t n);
uint64_t next_prime_u64(uint64_t n);  // least prime > n

// primes <= bound, ascending
std::vector<uint64_t> primes_up_to(uint64_t bound);

// Legendre symbol (a|p) for odd prime p; 0 if p | a.
int legendre(const mpz_class& a, const mpz_class& p);

// Kronecker symbol (a|n), any n.
int kronecker(const mpz_class& a, const mpz_class& n);

// floor(sqrt(n)) for n >= 0
mpz_class isqrt(const mpz_class& n);

// v_2 style helpers
inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// gcd of a set of rationals (content): largest q with each v_i / q integral.
mpq_class rational_content(const std::vector<mpq_class>& vals);

// Shortest decimal string that round-trips at double precision, python-style
// ("0.0", "2.0392156862745097"). Requires |num|, den < 2^53 so the division
// below is a single correctly-rounded operation.
std::string shortest_double_string(const mpz_class& num, const mpz_class& den);

// Exact rational -> decimal string with `digits` places, round half to even.
std::string fixed_decimal_string(const mpq_class& v, int digits);

}  // namespace qorb
