#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace tanglekit {

/// One-variable Laurent polynomial with integer coefficients (variable A).
/// No zero coefficients are stored; equality is coefficient-wise.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long long c) { if (c != 0) coef_[0] = c; }

  static LaurentPoly monomial(int exp, long long c = 1) {
    LaurentPoly p;
    if (c != 0) p.coef_[exp] = c;
    return p;
  }

  bool is_zero() const { return coef_.empty(); }
  const std::map<int, long long>& terms() const { return coef_; }
  long long coeff(int exp) const {
    auto it = coef_.find(exp);
    return it == coef_.end() ? 0 : it->second;
  }
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return coef_ == o.coef_; }
  bool operator!=(const LaurentPoly& o) const { return coef_ != o.coef_; }

  /// A -> A^k * this.
  LaurentPoly shifted(int k) const;
  /// A -> A^{-1}.
  LaurentPoly mirrored() const;
  /// Substitute A^4 = -1; exact, requires all exponents ≡ 0 (mod 4).
  long long eval_at_fourth_root() const;
  /// All exponents divisible by d?
  bool exponents_divisible_by(int d) const;

  /// Integer power, n >= 0.
  LaurentPoly pow(int n) const;

  std::string str() const;  // e.g. "-A^-4 + 1 + A^4"

private:
  std::map<int, long long> coef_;
};

/// p1 == ±A^k · p2 for some integer k.
bool poly_equal_up_to_unit(const LaurentPoly& p1, const LaurentPoly& p2);

}  // namespace tanglekit
