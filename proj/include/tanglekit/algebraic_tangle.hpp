#pragma once

#include <memory>
#include <string>

#include "tanglekit/fraction.hpp"

namespace tanglekit {

/// Expression tree over rational tangles with sum, mirror and rotation
/// nodes.  Values are immutable and shared; simplification produces new
/// trees.  A sum collapses to a rational leaf only when one summand is
/// integral (leaf(p/q) + leaf(n) = leaf((p+nq)/q) and the mirrored rule);
/// sums of two non-integral tangles stay symbolic.
class AlgebraicTangle {
public:
  enum class Kind : unsigned char { Leaf, Sum, Mirror, Rotate };

  static AlgebraicTangle leaf(Fraction f);
  static AlgebraicTangle sum(const AlgebraicTangle& l, const AlgebraicTangle& r);
  static AlgebraicTangle mirror(const AlgebraicTangle& t);
  static AlgebraicTangle rotate(const AlgebraicTangle& t);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind == Kind::Leaf; }
  const Fraction& fraction() const;  // leaf only
  AlgebraicTangle left() const;      // sum only
  AlgebraicTangle right() const;     // sum only
  AlgebraicTangle child() const;     // mirror/rotate only

  /// True iff the tangle simplifies to an integral leaf n/1.  For sums this
  /// is equivalent to both summands being integral.
  bool is_integral() const;

  /// Rational value when the tree simplifies to a single leaf.
  bool is_rational() const { return is_leaf(); }

  bool operator==(const AlgebraicTangle& o) const;
  std::string str() const;

private:
  struct Node {
    Kind kind;
    Fraction frac;                    // Leaf
    std::shared_ptr<const Node> a, b; // Sum: a,b; Mirror/Rotate: a
  };
  explicit AlgebraicTangle(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static AlgebraicTangle wrap(Node n) {
    return AlgebraicTangle(std::make_shared<const Node>(std::move(n)));
  }
  std::shared_ptr<const Node> node_;
};

}  // namespace tanglekit
