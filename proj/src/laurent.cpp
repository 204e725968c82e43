#include "cbt/laurent.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cbt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("LaurentPoly: coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("LaurentPoly: coefficient overflow in multiplication");
  return r;
}

int checked_exp(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
    throw std::overflow_error("LaurentPoly: exponent overflow");
  return static_cast<int>(e);
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  std::vector<Term> t;
  t.reserve(terms.size());
  for (auto [e, c] : terms) t.push_back({e, c});
  *this = from_terms(std::move(t));
}

LaurentPoly LaurentPoly::monomial(int exp, std::int64_t coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
      p.terms_.back().coeff = checked_add(p.terms_.back().coeff, t.coeff);
    else
      p.terms_.push_back(t);
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  return (it != terms_.end() && it->exp == exp) ? it->coeff : 0;
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& rhs, std::int64_t c, int shift) {
  if (rhs.is_zero() || c == 0) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    const int be = checked_exp(static_cast<long long>(b->exp) + shift);
    if (a == terms_.end() || be < a->exp) {
      out.push_back({be, checked_mul(b->coeff, c)});
      ++b;
    } else if (a->exp < be) {
      out.push_back(*a++);
    } else {
      std::int64_t s = checked_add(a->coeff, checked_mul(b->coeff, c));
      if (s != 0) out.push_back({be, s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { return add_scaled(rhs, 1, 0); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return add_scaled(rhs, -1, 0); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size());
    const auto& t = b.terms_.front();
    for (const auto& s : a.terms_)
      r.terms_.push_back({checked_exp(static_cast<long long>(s.exp) + t.exp),
                          checked_mul(s.coeff, t.coeff)});
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  // Dense accumulation over the exponent window.
  const long long lo = static_cast<long long>(a.min_exp()) + b.min_exp();
  const long long hi = static_cast<long long>(a.max_exp()) + b.max_exp();
  checked_exp(lo);
  checked_exp(hi);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(s.exp + t.exp - lo)];
      slot = checked_add(slot, checked_mul(s.coeff, t.coeff));
    }
  LaurentPoly r;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) r.terms_.push_back({static_cast<int>(lo + static_cast<long long>(i)), acc[i]});
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = checked_mul(t.coeff, -1);
  return r;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp = checked_exp(static_cast<long long>(t.exp) + n);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power last reads naturally for elements of vZ[v]: "v + v^3".
  for (const Term& t : terms_) {
    std::int64_t c = t.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (t.exp == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'v';
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("arith: unknown op");
}

LaurentPoly bar(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(p.term_count());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    t.push_back({checked_exp(-static_cast<long long>(it->exp)), it->coeff});
  return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly gamma_correction(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> t;
  for (const auto& term : p.terms()) {
    if (term.exp > 0) break;
    t.push_back(term);
    if (term.exp < 0) t.push_back({checked_exp(-static_cast<long long>(term.exp)), term.coeff});
  }
  return LaurentPoly::from_terms(std::move(t));
}

bool in_vZv(const LaurentPoly& p) { return p.is_zero() || p.min_exp() >= 1; }

std::int64_t eval_at_one(const LaurentPoly& p) {
  std::int64_t s = 0;
  for (const auto& t : p.terms()) s = checked_add(s, t.coeff);
  return s;
}

PolyClass classify(const LaurentPoly& p) {
  PolyClass c{};
  c.in_vZv = in_vZv(p);
  c.nonneg_coeffs = std::all_of(p.terms().begin(), p.terms().end(),
                                [](const auto& t) { return t.coeff > 0; });
  c.bar_invariant = bar(p) == p;
  c.eval_at_one = eval_at_one(p);
  return c;
}

}  // namespace cbt
