#include "tanglekit/algebraic_tangle.hpp"

namespace tanglekit {

AlgebraicTangle AlgebraicTangle::leaf(Fraction f) {
  Node n;
  n.kind = Kind::Leaf;
  n.frac = std::move(f);
  return wrap(std::move(n));
}

const Fraction& AlgebraicTangle::fraction() const {
  if (node_->kind != Kind::Leaf)
    throw std::logic_error("AlgebraicTangle: not a leaf");
  return node_->frac;
}

AlgebraicTangle AlgebraicTangle::left() const { return AlgebraicTangle(node_->a); }
AlgebraicTangle AlgebraicTangle::right() const { return AlgebraicTangle(node_->b); }
AlgebraicTangle AlgebraicTangle::child() const { return AlgebraicTangle(node_->a); }

AlgebraicTangle AlgebraicTangle::sum(const AlgebraicTangle& l,
                                     const AlgebraicTangle& r) {
  // Right-leaning normalization of repeated sums.
  if (l.kind() == Kind::Sum) return sum(l.left(), sum(l.right(), r));
  if (l.is_leaf() && r.is_leaf()) {
    const Fraction& a = l.fraction();
    const Fraction& b = r.fraction();
    // Cor. "integral iff each summand is integral" licenses collapsing
    // exactly when one side is integral.
    if (b.is_integral())
      return leaf(Fraction(a.num() + b.num() * a.den(), a.den()));
    if (a.is_integral())
      return leaf(Fraction(b.num() + a.num() * b.den(), b.den()));
  }
  if (r.kind() == Kind::Sum && r.left().is_leaf() && l.is_leaf()) {
    // Let an integral left leaf merge into the head of a right-leaning chain.
    if (l.fraction().is_integral() || r.left().fraction().is_integral())
      return sum(sum(l, r.left()), r.right());
  }
  Node n;
  n.kind = Kind::Sum;
  n.a = l.node_;
  n.b = r.node_;
  return wrap(std::move(n));
}

AlgebraicTangle AlgebraicTangle::mirror(const AlgebraicTangle& t) {
  switch (t.kind()) {
    case Kind::Leaf: return leaf(-t.fraction());
    case Kind::Sum: return sum(mirror(t.left()), mirror(t.right()));
    case Kind::Mirror: return t.child();
    case Kind::Rotate: return rotate(mirror(t.child()));
  }
  throw std::logic_error("unreachable");
}

AlgebraicTangle AlgebraicTangle::rotate(const AlgebraicTangle& t) {
  if (t.is_leaf()) return leaf(t.fraction().rotated());
  if (t.kind() == Kind::Rotate) return t.child();  // half turn is isotopic to id
  Node n;
  n.kind = Kind::Rotate;
  n.a = t.node_;
  return wrap(std::move(n));
}

bool AlgebraicTangle::is_integral() const {
  switch (kind()) {
    case Kind::Leaf: return fraction().is_integral();
    case Kind::Sum: return left().is_integral() && right().is_integral();
    // A surviving mirror/rotate node wraps a non-rational tangle, which
    // cannot be integral.
    case Kind::Mirror:
    case Kind::Rotate: return false;
  }
  return false;
}

bool AlgebraicTangle::operator==(const AlgebraicTangle& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Leaf: return fraction() == o.fraction();
    case Kind::Sum: return left() == o.left() && right() == o.right();
    case Kind::Mirror:
    case Kind::Rotate: return child() == o.child();
  }
  return false;
}

std::string AlgebraicTangle::str() const {
  switch (kind()) {
    case Kind::Leaf: return fraction().str();
    case Kind::Sum: return left().str() + " + " + right().str();
    case Kind::Mirror: return "m(" + child().str() + ")";
    case Kind::Rotate: return "r(" + child().str() + ")";
  }
  return "?";
}

}  // namespace tanglekit
