#include "tanglekit/fraction.hpp"

namespace tanglekit {

const char* to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::Horizontal: return "Horizontal";
    case ConnectivityClass::Vertical: return "Vertical";
    case ConnectivityClass::Diagonal: return "Diagonal";
  }
  return "?";
}

Fraction cf_eval(const ContinuedFraction& cf) {
  if (cf.empty()) return Fraction(0, 1);
  Fraction v(cf.back(), 1);
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    // a - 1/v, with 1/∞ = 0 and 1/0 = ∞.
    v = Fraction(*it, 1) - v.reciprocal();
  }
  return v;
}

ContinuedFraction cf_encode(const Fraction& f) {
  if (f.is_infinite()) return {0, 0};
  if (f.is_zero()) return {};
  if (f.is_integral()) return {f.num()};
  ContinuedFraction out;
  Int p = f.num(), q = f.den();
  for (;;) {
    // a = ceil(p/q), remainder r = q/(a q - p) with a q - p in [0, q).
    Int a = p / q;
    if (a * q < p) a += 1;
    out.push_back(a);
    Int r = a * q - p;
    if (r == 0) break;
    p = q;
    q = r;
  }
  return out;
}

ConnectivityClass connectivity_class(const Fraction& f) {
  const bool p_odd = boost::multiprecision::abs(f.num()) % 2 == 1;
  const bool q_odd = f.den() % 2 == 1;
  if (!p_odd && q_odd) return ConnectivityClass::Horizontal;
  if (p_odd && !q_odd) return ConnectivityClass::Vertical;
  return ConnectivityClass::Diagonal;
}

Int rtr_distance(const Fraction& f1, const Fraction& f2) {
  return boost::multiprecision::abs(f1.num() * f2.den() - f2.num() * f1.den());
}

bool is_proper_rtr(const Fraction& f1, const Fraction& f2) {
  return connectivity_class(f1) == connectivity_class(f2);
}

Fraction em_a2_result(const Int& l, const Int& m) {
  using boost::multiprecision::abs;
  if (abs(l) <= 1 || m == 0 || m == 1)
    throw std::domain_error(
        "em_a2_result: requires |l| > 1 and m not in {0, 1}");
  const Int t = 2 * m - 1;
  return Fraction(t, l * t - 2);
}

std::string TwoBridge::str() const {
  if (is_unknot()) return "unknot";
  if (is_unlink()) return "unlink";
  return "b(" + p.str() + "," + q.str() + ")";
}

namespace {

TwoBridge two_bridge_of(Int p, Int q) {
  using boost::multiprecision::abs;
  p = abs(p);
  if (p == 0) return TwoBridge::unlink();
  if (p == 1) return TwoBridge::unknot();
  q %= p;
  if (q < 0) q += p;
  return {p, q};
}

}  // namespace

TwoBridge closure(ClosureKind kind, const Fraction& f) {
  if (kind == ClosureKind::Numerator) return two_bridge_of(f.num(), f.den());
  // Denominator closure = numerator closure of the rotated tangle.
  return two_bridge_of(f.den(), f.num());
}

bool schubert_equivalent(const TwoBridge& k1, const TwoBridge& k2,
                         bool chiral) {
  if (k1.p != k2.p) return false;
  const Int& p = k1.p;
  if (p <= 1) return true;
  auto norm = [&](Int x) {
    x %= p;
    if (x < 0) x += p;
    return x;
  };
  auto congruent = [&](const Int& a, const Int& b) {
    return norm(a) == norm(b);
  };
  if (congruent(k1.q, k2.q) || congruent(k1.q * k2.q, 1)) return true;
  if (!chiral) {
    if (congruent(k1.q, -k2.q) || congruent(k1.q * k2.q, -1)) return true;
  }
  return false;
}

}  // namespace tanglekit
