#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanglekit {

using Int = boost::multiprecision::cpp_int;

/// Element of Q ∪ {∞} in normal form: gcd(|p|,|q|) = 1, q >= 0,
/// ∞ = 1/0, zero = 0/1.  The Conway number of a rational tangle.
class Fraction {
public:
  Fraction() : p_(0), q_(1) {}
  Fraction(Int p, Int q) { assign(std::move(p), std::move(q)); }
  Fraction(long long n) : p_(n), q_(1) {}

  static Fraction infinity() { return Fraction(1, 0); }

  const Int& num() const { return p_; }
  const Int& den() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }
  bool is_zero() const { return p_ == 0 && q_ == 1; }

  Fraction operator-() const { return Fraction(-p_, q_); }

  /// 1/0 -> 0/1 and 0/1 -> 1/0.
  Fraction reciprocal() const { return Fraction(q_, p_); }

  /// Tangle rotation by a quarter turn: t -> -1/t.
  Fraction rotated() const { return Fraction(-q_, p_); }

  Fraction operator+(const Fraction& o) const {
    if (is_infinite() || o.is_infinite()) {
      if (is_infinite() && o.is_infinite())
        throw std::domain_error("Fraction: ∞ + ∞ is undefined");
      return infinity();
    }
    return Fraction(p_ * o.q_ + o.p_ * q_, q_ * o.q_);
  }
  Fraction operator-(const Fraction& o) const { return *this + (-o); }

  bool operator==(const Fraction& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const Fraction& o) const { return !(*this == o); }
  bool operator<(const Fraction& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    return q_ < o.q_;
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (q_ == 1) return p_.str();
    return p_.str() + "/" + q_.str();
  }

private:
  void assign(Int p, Int q) {
    if (p == 0 && q == 0)
      throw std::domain_error("Fraction: 0/0 is not a fraction");
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) { p = 1; }
    else if (p == 0) { q = 1; }
    else {
      Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
      p /= g; q /= g;
    }
    p_ = std::move(p);
    q_ = std::move(q);
  }

  Int p_, q_;
};

/// Continued-fraction coefficients [a0, a1, ..., an] under the subtraction
/// convention a0 - 1/(a1 - 1/(... - 1/an)).  Empty denotes 0.
using ContinuedFraction = std::vector<Int>;

/// Which boundary-point pairs the two strands of a rational tangle join.
enum class ConnectivityClass : std::uint8_t {
  Horizontal,  // NW-NE & SW-SE   (p even, q odd)
  Vertical,    // NW-SW & NE-SE   (p odd, q even)
  Diagonal,    // NW-SE & NE-SW   (p odd, q odd)
};

const char* to_string(ConnectivityClass c);

/// Exact value of [a0, ..., an]; total (∞ handled throughout).
Fraction cf_eval(const ContinuedFraction& cf);

/// Canonical encoding: empty for 0, [n] for integers, [0,0] for ∞,
/// otherwise Euclidean expansion with every coefficient after a0 >= 2.
ContinuedFraction cf_encode(const Fraction& f);

ConnectivityClass connectivity_class(const Fraction& f);

/// Distance Δ between two rational tangles: |p1 q2 - p2 q1|.
Int rtr_distance(const Fraction& f1, const Fraction& f2);

/// A replacement is proper iff it preserves the strands' endpoint pairing;
/// equivalently Δ is even.
bool is_proper_rtr(const Fraction& f1, const Fraction& f2);

/// Rational tangle produced by the unknotting crossing change along the
/// standard arc of the A2(l,m) tangle: (2m-1)/(l(2m-1)-2), equal to
/// cf_eval([0,-l,-m,-2]).  Requires |l| > 1 and m not in {0,1}.
Fraction em_a2_result(const Int& l, const Int& m);

enum class ClosureKind : std::uint8_t { Numerator, Denominator };

/// Schubert normal form b(p,q) of a two-bridge knot or link.
/// p = 1 is the unknot sentinel (q = 0); p = 0 is the 2-component unlink
/// sentinel (q = 1).  For p > 1, 0 < q < p and gcd(p,q) = 1.
struct TwoBridge {
  Int p;
  Int q;

  static TwoBridge unknot() { return {1, 0}; }
  static TwoBridge unlink() { return {0, 1}; }
  bool is_unknot() const { return p == 1; }
  bool is_unlink() const { return p == 0; }
  bool operator==(const TwoBridge& o) const { return p == o.p && q == o.q; }
  std::string str() const;
};

/// Two-bridge classification of the numerator/denominator closure.
TwoBridge closure(ClosureKind kind, const Fraction& f);

/// Unoriented two-bridge equivalence; mirror-insensitive by default
/// (q compared up to sign), chirality-sensitive when chiral = true.
bool schubert_equivalent(const TwoBridge& k1, const TwoBridge& k2,
                         bool chiral = false);

}  // namespace tanglekit
