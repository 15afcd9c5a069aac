#pragma once
// Sparse integer Laurent polynomials in the bracket variable A.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotile {

class Laurent {
 public:
  Laurent() = default;
  static Laurent zero() { return {}; }
  static Laurent one() { return monomial(0, 1); }
  static Laurent monomial(int exp, long long coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // terms sorted by ascending exponent, no zero coefficients
  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }

  long long coeff(int exp) const;
  int min_exp() const;  // requires !is_zero()
  int max_exp() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  bool operator==(const Laurent& o) const = default;

  Laurent shifted(int dexp) const;     // multiply by A^dexp
  Laurent negated() const;
  Laurent mirrored() const;            // substitute A -> A^-1

  // Sum of coeff*(-1)^(exp/4) over terms; exponents must all be =0 mod 4
  // (true for the writhe-normalized invariant of a knot). This is the
  // evaluation at t=-1 of the polynomial in t=A^-4; |result| is the knot
  // determinant.
  long long eval_t_minus_one() const;
  bool exponents_divisible_by(int d) const;

  std::string to_string() const;               // e.g. "-A^-4+A^-3+3A^-1"
  static Laurent parse(const std::string& s);  // inverse of to_string

 private:
  std::vector<std::pair<int, long long>> terms_;
  void normalize();
};

}  // namespace knotile
