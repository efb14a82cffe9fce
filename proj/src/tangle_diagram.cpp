#include "tanglekit/tangle_diagram.hpp"

#include <stdexcept>

namespace tanglekit {

namespace {

int leg(const Diagram& d, Mark m) {
  const int node = d.marked_node(m);
  if (node == -1) throw std::invalid_argument("tangle: missing mark");
  return d.slot_at(node, 0);
}

}  // namespace

std::optional<std::string> marked_tangle_error(const Diagram& d) {
  if (auto e = d.validate_error()) return e;
  if (d.count_kind(NodeKind::Endpoint) != 4)
    return "marked tangle: needs exactly four endpoints";
  for (int mk = 0; mk < 4; ++mk)
    if (d.marked_node(static_cast<Mark>(mk)) == -1)
      return std::string("marked tangle: missing mark ") +
             to_string(static_cast<Mark>(mk));
  if (d.count_kind(NodeKind::Vertex) != 0)
    return "marked tangle: must not contain graph vertices";
  return std::nullopt;
}

bool is_marked_tangle(const Diagram& d) {
  return !marked_tangle_error(d).has_value();
}

Diagram zero_tangle() {
  Diagram d;
  const int nw = d.add_endpoint(), ne = d.add_endpoint();
  const int sw = d.add_endpoint(), se = d.add_endpoint();
  d.pair_halves(d.slot_at(nw, 0), d.slot_at(ne, 0));
  d.pair_halves(d.slot_at(sw, 0), d.slot_at(se, 0));
  d.set_mark(Mark::NW, nw);
  d.set_mark(Mark::NE, ne);
  d.set_mark(Mark::SW, sw);
  d.set_mark(Mark::SE, se);
  return d;
}

Diagram infinity_tangle() {
  Diagram d;
  const int nw = d.add_endpoint(), ne = d.add_endpoint();
  const int sw = d.add_endpoint(), se = d.add_endpoint();
  d.pair_halves(d.slot_at(nw, 0), d.slot_at(sw, 0));
  d.pair_halves(d.slot_at(ne, 0), d.slot_at(se, 0));
  d.set_mark(Mark::NW, nw);
  d.set_mark(Mark::NE, ne);
  d.set_mark(Mark::SW, sw);
  d.set_mark(Mark::SE, se);
  return d;
}

namespace {

/// Single positive (SW-NE strand over) or negative horizontal crossing.
Diagram one_crossing_tangle(bool positive) {
  Diagram d;
  const int c = d.add_crossing();
  const int nw = d.add_endpoint(), ne = d.add_endpoint();
  const int sw = d.add_endpoint(), se = d.add_endpoint();
  // Rays in ccw geometric order SW, SE, NE, NW; slots 0,2 carry the
  // understrand.
  int ray_sw, ray_se, ray_ne, ray_nw;
  if (positive) {
    // understrand NW-SE: slots [SE, NE, NW, SW]
    ray_se = d.slot_at(c, 0); ray_ne = d.slot_at(c, 1);
    ray_nw = d.slot_at(c, 2); ray_sw = d.slot_at(c, 3);
  } else {
    // understrand SW-NE: slots [SW, SE, NE, NW]
    ray_sw = d.slot_at(c, 0); ray_se = d.slot_at(c, 1);
    ray_ne = d.slot_at(c, 2); ray_nw = d.slot_at(c, 3);
  }
  d.pair_halves(ray_nw, d.slot_at(nw, 0));
  d.pair_halves(ray_ne, d.slot_at(ne, 0));
  d.pair_halves(ray_sw, d.slot_at(sw, 0));
  d.pair_halves(ray_se, d.slot_at(se, 0));
  d.set_mark(Mark::NW, nw);
  d.set_mark(Mark::NE, ne);
  d.set_mark(Mark::SW, sw);
  d.set_mark(Mark::SE, se);
  return d;
}

}  // namespace

Diagram glue_tangle_sum(const Diagram& d1, const Diagram& d2) {
  if (auto e = marked_tangle_error(d1))
    throw std::invalid_argument("glue_tangle_sum: left: " + *e);
  if (auto e = marked_tangle_error(d2))
    throw std::invalid_argument("glue_tangle_sum: right: " + *e);
  Diagram u = d1;
  const auto [node_off, half_off] = u.append_disjoint(d2);
  const int ne1 = d1.marked_node(Mark::NE), se1 = d1.marked_node(Mark::SE);
  const int nw2 = d2.marked_node(Mark::NW) + node_off;
  const int sw2 = d2.marked_node(Mark::SW) + node_off;
  u.clear_mark(Mark::NE);
  u.clear_mark(Mark::SE);
  u.set_mark(Mark::NE, d2.marked_node(Mark::NE) + node_off);
  u.set_mark(Mark::SE, d2.marked_node(Mark::SE) + node_off);
  return u.excised({ne1, se1, nw2, sw2},
                   {{u.slot_at(ne1, 0), u.slot_at(nw2, 0)},
                    {u.slot_at(se1, 0), u.slot_at(sw2, 0)}});
}

Diagram append_horizontal_twists(const Diagram& d, const Int& n) {
  Diagram out = d;
  const bool pos = n > 0;
  for (Int i = 0; i < boost::multiprecision::abs(n); ++i)
    out = glue_tangle_sum(out, one_crossing_tangle(pos));
  return out;
}

Diagram rotate_tangle(const Diagram& d) {
  // Quarter turn counterclockwise: new NW <- NE, NE <- SE, SE <- SW, SW <- NW.
  Diagram out = d;
  const int nw = d.marked_node(Mark::NW), ne = d.marked_node(Mark::NE);
  const int sw = d.marked_node(Mark::SW), se = d.marked_node(Mark::SE);
  out.clear_mark(Mark::NW);
  out.clear_mark(Mark::NE);
  out.clear_mark(Mark::SW);
  out.clear_mark(Mark::SE);
  out.set_mark(Mark::NW, ne);
  out.set_mark(Mark::NE, se);
  out.set_mark(Mark::SE, sw);
  out.set_mark(Mark::SW, nw);
  return out;
}

Diagram append_vertical_twists(const Diagram& d, const Int& n) {
  // South twists: rotate, append east twists of opposite sign, rotate back.
  // rot(rot(rot(T))) = rot^{-1}(T); Conway check: -1/(-1/t + (-n))
  //  = t/(1+nt).
  Diagram r = rotate_tangle(d);
  r = append_horizontal_twists(r, -n);
  return rotate_tangle(rotate_tangle(rotate_tangle(r)));
}

Diagram mirror_diagram(const Diagram& d) {
  Diagram out = d;
  for (int i = 0; i < out.node_count(); ++i)
    if (out.node(i).kind == NodeKind::Crossing) out.flip_crossing(i);
  return out;
}

Diagram build_rational_diagram(const ContinuedFraction& cf) {
  if (cf.empty()) return zero_tangle();
  Diagram t = append_horizontal_twists(zero_tangle(), cf.back());
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it)
    t = append_horizontal_twists(rotate_tangle(t), *it);
  return t;
}

Diagram build_tangle_diagram(const AlgebraicTangle& t) {
  using Kind = AlgebraicTangle::Kind;
  switch (t.kind()) {
    case Kind::Leaf:
      return build_rational_diagram(cf_encode(t.fraction()));
    case Kind::Sum:
      return glue_tangle_sum(build_tangle_diagram(t.left()),
                             build_tangle_diagram(t.right()));
    case Kind::Mirror:
      return mirror_diagram(build_tangle_diagram(t.child()));
    case Kind::Rotate:
      return rotate_tangle(build_tangle_diagram(t.child()));
  }
  throw std::logic_error("unreachable");
}

Diagram close_tangle(ClosureKind kind, const Diagram& d) {
  if (auto e = marked_tangle_error(d))
    throw std::invalid_argument("close_tangle: " + *e);
  const int nw = d.marked_node(Mark::NW), ne = d.marked_node(Mark::NE);
  const int sw = d.marked_node(Mark::SW), se = d.marked_node(Mark::SE);
  Diagram out = d;
  std::vector<std::pair<int, int>> through;
  if (kind == ClosureKind::Numerator)
    through = {{d.slot_at(nw, 0), d.slot_at(ne, 0)},
               {d.slot_at(sw, 0), d.slot_at(se, 0)}};
  else
    through = {{d.slot_at(nw, 0), d.slot_at(sw, 0)},
               {d.slot_at(ne, 0), d.slot_at(se, 0)}};
  return out.excised({nw, ne, sw, se}, through);
}

ConnectivityClass trace_connectivity(const Diagram& d) {
  if (auto e = marked_tangle_error(d))
    throw std::invalid_argument("trace_connectivity: " + *e);
  int h = leg(d, Mark::NW);
  for (;;) {
    const int m = d.mate(h);
    const auto [node, slot] = d.owner(m);
    if (d.node(node).kind == NodeKind::Endpoint) {
      if (node == d.marked_node(Mark::NE)) return ConnectivityClass::Horizontal;
      if (node == d.marked_node(Mark::SW)) return ConnectivityClass::Vertical;
      if (node == d.marked_node(Mark::SE)) return ConnectivityClass::Diagonal;
      throw std::logic_error("trace: reached unmarked endpoint");
    }
    h = d.opposite(m);
  }
}

}  // namespace tanglekit
