#include "tanglekit/laurent.hpp"

#include <stdexcept>

namespace tanglekit {

int LaurentPoly::min_exp() const {
  if (coef_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return coef_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (coef_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return coef_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coef_) {
    long long v = r.coef_[e] + c;
    if (v == 0) r.coef_.erase(e); else r.coef_[e] = v;
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coef_) r.coef_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coef_)
    for (const auto& [e2, c2] : o.coef_) {
      long long v = r.coef_[e1 + e2] + c1 * c2;
      if (v == 0) r.coef_.erase(e1 + e2); else r.coef_[e1 + e2] = v;
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coef_) r.coef_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, c] : coef_) r.coef_[-e] = c;
  return r;
}

bool LaurentPoly::exponents_divisible_by(int d) const {
  for (const auto& [e, c] : coef_)
    if (((e % d) + d) % d != 0) return false;
  return true;
}

long long LaurentPoly::eval_at_fourth_root() const {
  long long v = 0;
  for (const auto& [e, c] : coef_) {
    if (((e % 4) + 4) % 4 != 0)
      throw std::domain_error("eval_at_fourth_root: exponent not ≡ 0 mod 4");
    const int m = e / 4;  // A^{4m} = (-1)^m
    v += (m % 2 != 0) ? -c : c;
  }
  return v;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw std::domain_error("pow: negative exponent");
  LaurentPoly r(1);
  for (int i = 0; i < n; ++i) r *= *this;
  return r;
}

std::string LaurentPoly::str() const {
  if (coef_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    long long a = c;
    if (first) {
      if (a < 0) { s += "-"; a = -a; }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || e == 0) s += std::to_string(a);
    if (e != 0) {
      if (a != 1) s += "*";
      s += "A";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

bool poly_equal_up_to_unit(const LaurentPoly& p1, const LaurentPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) return p1.is_zero() && p2.is_zero();
  const int shift = p1.min_exp() - p2.min_exp();
  LaurentPoly q = p2.shifted(shift);
  return p1 == q || p1 == -q;
}

}  // namespace tanglekit
