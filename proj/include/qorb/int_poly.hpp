#pragma once
// Exact univariate polynomials over Z, coefficients lowest degree first.

#include <gmpxx.h>
#include <string>
#include <vector>

namespace qorb {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(const mpz_class& v) { return IntPoly({v}); }
  static IntPoly x_minus(const mpz_class& r) { return IntPoly({-r, 1}); }
  static IntPoly monomial(int deg, const mpz_class& v);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  mpz_class coeff(int i) const {
    return (i >= 0 && i <= degree()) ? c_[static_cast<size_t>(i)] : mpz_class(0);
  }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly derivative() const;
  mpz_class content() const;
  IntPoly primitive_part() const;  // content removed, leading coefficient > 0
  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  // f = q*g + r with deg r < deg g, over Q; returns false if not exact over Z
  // when exact_only is set.
  static bool divmod_exact(const IntPoly& f, const IntPoly& g, IntPoly& q, IntPoly& r);

  // exact division: throws std::domain_error if remainder nonzero
  IntPoly divexact(const IntPoly& g) const;

  // deflate one root r exactly: f / (x - r); throws if f(r) != 0
  IntPoly deflate_root(const mpz_class& r) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// gcd over Z, primitive with positive leading coefficient (modular algorithm)
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// resultant of f and g (Sylvester determinant, fraction-free; intended for small degrees)
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// discriminant of f: (-1)^(n(n-1)/2) res(f, f') / lc(f)
mpz_class poly_discriminant(const IntPoly& f);

}  // namespace qorb
