#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cbt {

// Sparse Laurent polynomial in v with 64-bit integer coefficients.
//
// Terms are kept sorted by exponent with no zero coefficients, so equality
// is structural. Every arithmetic operation is overflow-checked and throws
// std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    std::int64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  // Constant polynomial c.
  LaurentPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms);

  static LaurentPoly monomial(int exp, std::int64_t coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly v_inv() { return monomial(-1); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Only meaningful when !is_zero().
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }
  std::int64_t coeff(int exp) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  // this += c * v^shift * rhs, the workhorse of the Fock-space action.
  LaurentPoly& add_scaled(const LaurentPoly& rhs, std::int64_t c, int shift);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  // Multiply by v^n.
  LaurentPoly shifted(int n) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ <=> b.terms_;
  }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

enum class ArithOp { add, sub, mul };
LaurentPoly arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op);

// v -> v^{-1}.
LaurentPoly bar(const LaurentPoly& p);

// The bar-invariant part removed in one triangular-reduction step:
// sum_{n<0} p_n (v^n + v^{-n}) + p_0.
LaurentPoly gamma_correction(const LaurentPoly& p);

struct PolyClass {
  bool in_vZv;  // every exponent >= 1
  bool nonneg_coeffs;
  bool bar_invariant;
  std::int64_t eval_at_one;
};
PolyClass classify(const LaurentPoly& p);

bool in_vZv(const LaurentPoly& p);
std::int64_t eval_at_one(const LaurentPoly& p);

}  // namespace cbt
