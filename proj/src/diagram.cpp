#include "tanglekit/diagram.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace tanglekit {

const char* to_string(Mark m) {
  switch (m) {
    case Mark::NW: return "NW";
    case Mark::NE: return "NE";
    case Mark::SW: return "SW";
    case Mark::SE: return "SE";
  }
  return "?";
}

std::optional<Mark> mark_from_string(const std::string& s) {
  if (s == "NW") return Mark::NW;
  if (s == "NE") return Mark::NE;
  if (s == "SW") return Mark::SW;
  if (s == "SE") return Mark::SE;
  return std::nullopt;
}

int Diagram::add_node(NodeKind kind, int degree) {
  Node n;
  n.kind = kind;
  n.degree = static_cast<std::uint8_t>(degree);
  const int id = static_cast<int>(nodes_.size());
  for (int i = 0; i < degree; ++i) {
    n.slot[i] = static_cast<int>(mate_.size());
    mate_.push_back(-1);
    owner_.push_back({id, i});
  }
  nodes_.push_back(n);
  return id;
}

int Diagram::add_crossing() { return add_node(NodeKind::Crossing, 4); }
int Diagram::add_vertex(int degree) {
  if (degree != 3 && degree != 4)
    throw std::invalid_argument("add_vertex: degree must be 3 or 4");
  return add_node(NodeKind::Vertex, degree);
}
int Diagram::add_endpoint() { return add_node(NodeKind::Endpoint, 1); }

void Diagram::pair_halves(int h1, int h2) {
  if (h1 == h2) throw std::invalid_argument("pair_halves: h1 == h2");
  if (mate_[h1] != -1 || mate_[h2] != -1)
    throw std::invalid_argument("pair_halves: half-edge already paired");
  mate_[h1] = h2;
  mate_[h2] = h1;
}

void Diagram::cut_edge(int h) {
  const int m = mate_[h];
  if (m == -1) return;
  mate_[h] = -1;
  mate_[m] = -1;
}

void Diagram::set_mark(Mark m, int endpoint_node) {
  if (nodes_[endpoint_node].kind != NodeKind::Endpoint)
    throw std::invalid_argument("set_mark: node is not an endpoint");
  marks_[static_cast<int>(m)] = endpoint_node;
}

void Diagram::clear_mark(Mark m) { marks_[static_cast<int>(m)] = -1; }

bool Diagram::has_marks() const {
  for (int v : marks_)
    if (v != -1) return true;
  return false;
}

int Diagram::sigma(int h) const {
  auto [n, s] = owner_[h];
  return nodes_[n].slot[(s + 1) % nodes_[n].degree];
}

int Diagram::sigma_inv(int h) const {
  auto [n, s] = owner_[h];
  const int d = nodes_[n].degree;
  return nodes_[n].slot[(s + d - 1) % d];
}

int Diagram::opposite(int h) const {
  auto [n, s] = owner_[h];
  if (nodes_[n].kind != NodeKind::Crossing)
    throw std::invalid_argument("opposite: not a crossing slot");
  return nodes_[n].slot[(s + 2) % 4];
}

int Diagram::crossing_count() const { return count_kind(NodeKind::Crossing); }

int Diagram::count_kind(NodeKind k) const {
  int c = 0;
  for (const Node& n : nodes_)
    if (n.kind == k) ++c;
  return c;
}

std::vector<std::vector<int>> Diagram::components() const {
  const int n = node_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::vector<int>* pp = &parent;
  auto find = [pp](int x) {
    while ((*pp)[x] != x) x = (*pp)[x] = (*pp)[(*pp)[x]];
    return x;
  };
  for (int h = 0; h < half_count(); ++h) {
    const int m = mate_[h];
    if (m >= 0) {
      int a = find(owner_[h].first), b = find(owner_[m].first);
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  return out;
}

std::vector<std::vector<int>> Diagram::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(half_count(), 0);
  for (int h0 = 0; h0 < half_count(); ++h0) {
    if (seen[h0] || mate_[h0] == -1) continue;
    std::vector<int> orbit;
    int h = h0;
    do {
      seen[h] = 1;
      orbit.push_back(h);
      h = sigma(mate_[h]);
    } while (h != h0);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> Diagram::face_of_half() const {
  std::vector<int> fid(half_count(), -1);
  const auto fs = faces();
  for (int i = 0; i < static_cast<int>(fs.size()); ++i)
    for (int h : fs[i]) fid[h] = i;
  return fid;
}

std::optional<std::string> Diagram::validate_error(bool allow_degree4) const {
  for (int i = 0; i < node_count(); ++i) {
    const Node& n = nodes_[i];
    int want = 0;
    switch (n.kind) {
      case NodeKind::Crossing: want = 4; break;
      case NodeKind::Vertex: want = 3; break;
      case NodeKind::Endpoint: want = 1; break;
    }
    if (n.kind == NodeKind::Vertex && allow_degree4 && n.degree == 4) want = 4;
    if (n.degree != want)
      return "node " + std::to_string(i) + ": bad degree";
    for (int s = 0; s < n.degree; ++s) {
      const int h = n.slot[s];
      if (h < 0 || h >= half_count())
        return "node " + std::to_string(i) + ": slot out of range";
      if (owner_[h] != std::make_pair(i, s))
        return "half-edge " + std::to_string(h) + ": owner mismatch";
    }
  }
  for (int h = 0; h < half_count(); ++h) {
    const int m = mate_[h];
    if (m == -1) return "half-edge " + std::to_string(h) + ": unpaired";
    if (m == h || mate_[m] != h)
      return "half-edge " + std::to_string(h) + ": pairing not an involution";
  }
  for (int i = 0; i < 4; ++i) {
    const int v = marks_[i];
    if (v == -1) continue;
    if (v < 0 || v >= node_count() || nodes_[v].kind != NodeKind::Endpoint)
      return std::string("mark ") + to_string(static_cast<Mark>(i)) +
             ": not an endpoint";
  }
  if (free_loops_ < 0) return "negative free loop count";

  // Sphere embedding: V - E + F = 2 on every connected component.
  const auto comps = components();
  if (!comps.empty()) {
    std::vector<int> comp_of(node_count(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      for (int id : comps[c]) comp_of[id] = c;
    std::vector<int> v_cnt(comps.size(), 0), e_cnt(comps.size(), 0),
        f_cnt(comps.size(), 0);
    for (int i = 0; i < node_count(); ++i) v_cnt[comp_of[i]]++;
    for (int h = 0; h < half_count(); ++h)
      if (h < mate_[h]) e_cnt[comp_of[owner_[h].first]]++;
    for (const auto& face : faces()) f_cnt[comp_of[owner_[face[0]].first]]++;
    for (size_t c = 0; c < comps.size(); ++c) {
      if (v_cnt[c] - e_cnt[c] + f_cnt[c] != 2)
        return "component " + std::to_string(c) +
               ": not a sphere embedding (V-E+F = " +
               std::to_string(v_cnt[c] - e_cnt[c] + f_cnt[c]) + ")";
    }
  }
  return std::nullopt;
}

namespace {
// Code tags; all strictly below any node number offset.
constexpr std::int32_t kNewNode = -1000;
}  // namespace

void Diagram::component_code(const std::vector<int>& comp_nodes,
                             std::vector<std::int32_t>& best) const {
  best.clear();
  std::vector<int> num(node_count(), -1);
  std::vector<int> ref(node_count(), -1);
  std::vector<int> order;
  std::vector<std::int32_t> code;

  auto kind_tag = [&](int node_id, int entry_slot) -> std::int32_t {
    const Node& n = nodes_[node_id];
    switch (n.kind) {
      case NodeKind::Crossing: return 10 + (entry_slot % 2);
      case NodeKind::Vertex: return 20 + n.degree;
      case NodeKind::Endpoint: return 30;
    }
    return 0;
  };

  for (int start : comp_nodes) {
    const int d0 = nodes_[start].degree;
    for (int s0 = 0; s0 < d0; ++s0) {
      for (int id : comp_nodes) num[id] = -1;
      order.clear();
      code.clear();
      num[start] = 0;
      ref[start] = s0;
      order.push_back(start);
      code.push_back(kind_tag(start, s0));
      for (size_t k = 0; k < order.size(); ++k) {
        const int n = order[k];
        const int d = nodes_[n].degree;
        for (int i = 0; i < d; ++i) {
          const int h = nodes_[n].slot[(ref[n] + i) % d];
          const int m = mate_[h];
          auto [nm, sm] = owner_[m];
          if (num[nm] == -1) {
            num[nm] = static_cast<int>(order.size());
            ref[nm] = sm;
            order.push_back(nm);
            code.push_back(kNewNode);
            code.push_back(kind_tag(nm, sm));
          } else {
            const int dm = nodes_[nm].degree;
            code.push_back(num[nm]);
            code.push_back((sm - ref[nm] + dm) % dm);
          }
        }
      }
      // Marks on this component.
      for (int mk = 0; mk < 4; ++mk) {
        const int node_id = marks_[mk];
        if (node_id != -1 && num[node_id] != -1) {
          code.push_back(100 + mk);
          code.push_back(num[node_id]);
        }
      }
      if (best.empty() || code < best) best = code;
    }
  }
}

std::vector<std::int32_t> Diagram::canonical_code() const {
  std::vector<std::vector<std::int32_t>> comp_codes;
  for (const auto& comp : components()) {
    std::vector<std::int32_t> c;
    component_code(comp, c);
    comp_codes.push_back(std::move(c));
  }
  std::sort(comp_codes.begin(), comp_codes.end());
  std::vector<std::int32_t> out;
  out.push_back(free_loops_);
  for (const auto& c : comp_codes) {
    out.push_back(-2);  // component separator
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::string Diagram::canonical_key() const {
  const auto code = canonical_code();
  std::string s;
  s.resize(code.size() * sizeof(std::int32_t));
  std::memcpy(s.data(), code.data(), s.size());
  return s;
}

Diagram Diagram::excised(const std::set<int>& victims,
                         const std::vector<std::pair<int, int>>& through) const {
  // Involution on victim slots.
  std::map<int, int> thru;
  for (auto [a, b] : through) {
    if (a == b) throw std::invalid_argument("excised: slot paired with itself");
    thru[a] = b;
    thru[b] = a;
  }
  auto is_victim_half = [&](int h) {
    return victims.count(owner_[h].first) > 0;
  };
  for (auto& [a, b] : thru)
    if (!is_victim_half(a))
      throw std::invalid_argument("excised: through slot not on a victim");

  int new_loops = 0;
  std::vector<std::pair<int, int>> new_pairs;  // external half-edge pairs
  std::set<int> visited;

  // Chains entering from outside.
  for (int h = 0; h < half_count(); ++h) {
    if (!is_victim_half(h) || visited.count(h)) continue;
    const int ext = mate_[h];
    if (ext == -1 || is_victim_half(ext)) continue;
    // h is a boundary slot.
    auto it = thru.find(h);
    if (it == thru.end())
      throw std::invalid_argument("excised: deleted strand reaches boundary");
    int cur = h;
    for (;;) {
      visited.insert(cur);
      const int t = thru.at(cur);
      visited.insert(t);
      const int m = mate_[t];
      if (!is_victim_half(m)) {
        new_pairs.push_back({ext, m});
        break;
      }
      if (!thru.count(m))
        throw std::invalid_argument("excised: strand enters deleted edge");
      cur = m;
    }
  }
  // Closed chains fully inside the region become free loops.
  for (const auto& [a, b] : thru) {
    if (visited.count(a)) continue;
    int cur = a;
    for (;;) {
      visited.insert(cur);
      const int t = thru.at(cur);
      visited.insert(t);
      const int m = mate_[t];
      if (m == a) break;
      if (!is_victim_half(m))
        throw std::invalid_argument("excised: inconsistent chain");
      if (!thru.count(m))
        throw std::invalid_argument("excised: strand enters deleted edge");
      cur = m;
    }
    ++new_loops;
  }
  // Dying strands must stay internal.
  for (int h = 0; h < half_count(); ++h) {
    if (!is_victim_half(h) || thru.count(h)) continue;
    const int m = mate_[h];
    if (m != -1 && !is_victim_half(m))
      throw std::invalid_argument("excised: deleted strand reaches boundary");
  }

  // Rebuild with dense ids, preserving order.
  Diagram out;
  out.free_loops_ = free_loops_ + new_loops;
  out.label_ = label_;
  std::vector<int> node_map(node_count(), -1);
  std::vector<int> half_map(half_count(), -1);
  for (int i = 0; i < node_count(); ++i) {
    if (victims.count(i)) continue;
    const Node& n = nodes_[i];
    const int ni = out.add_node(n.kind, n.degree);
    node_map[i] = ni;
    for (int s = 0; s < n.degree; ++s) half_map[n.slot[s]] = out.nodes_[ni].slot[s];
  }
  auto map_pair = [&](int a, int b) {
    const int ma = half_map[a], mb = half_map[b];
    if (ma == -1 || mb == -1)
      throw std::logic_error("excised: mapping lost a half-edge");
    out.mate_[ma] = mb;
    out.mate_[mb] = ma;
  };
  for (int h = 0; h < half_count(); ++h) {
    const int m = mate_[h];
    if (m > h && !is_victim_half(h) && !is_victim_half(m)) map_pair(h, m);
  }
  for (auto [a, b] : new_pairs) map_pair(a, b);
  for (int mk = 0; mk < 4; ++mk) {
    const int v = marks_[mk];
    if (v != -1 && node_map[v] != -1) out.marks_[mk] = node_map[v];
  }
  return out;
}

Diagram::Pierce Diagram::pierce(int h, bool new_over) {
  const int m = mate_[h];
  if (m == -1) throw std::invalid_argument("pierce: unpaired half-edge");
  cut_edge(h);
  const int c = add_crossing();
  // Physical ccw order around the new crossing is e1, in, e2, out, with e1
  // on the side of h's owner; slot indices place the understrand at 0,2.
  int e1, e2, in, out;
  if (new_over) {
    e1 = nodes_[c].slot[0]; in = nodes_[c].slot[1];
    e2 = nodes_[c].slot[2]; out = nodes_[c].slot[3];
  } else {
    in = nodes_[c].slot[0]; e2 = nodes_[c].slot[1];
    out = nodes_[c].slot[2]; e1 = nodes_[c].slot[3];
  }
  pair_halves(h, e1);
  pair_halves(e2, m);
  return {c, in, out};
}

std::pair<int, int> Diagram::append_disjoint(const Diagram& o) {
  const int node_off = node_count();
  const int half_off = half_count();
  for (const Node& n : o.nodes_) {
    Node c = n;
    for (int s = 0; s < c.degree; ++s) c.slot[s] += half_off;
    nodes_.push_back(c);
  }
  for (int h = 0; h < o.half_count(); ++h) {
    mate_.push_back(o.mate_[h] == -1 ? -1 : o.mate_[h] + half_off);
    owner_.push_back({o.owner_[h].first + node_off, o.owner_[h].second});
  }
  free_loops_ += o.free_loops_;
  return {node_off, half_off};
}

void Diagram::flip_crossing(int node_id) {
  Node& n = nodes_[node_id];
  if (n.kind != NodeKind::Crossing)
    throw std::invalid_argument("flip_crossing: not a crossing");
  std::rotate(n.slot.begin(), n.slot.begin() + 1, n.slot.begin() + 4);
  for (int s = 0; s < 4; ++s) owner_[n.slot[s]] = {node_id, s};
}

void Diagram::rebuild_owners() {
  owner_.assign(mate_.size(), {-1, -1});
  for (int i = 0; i < node_count(); ++i)
    for (int s = 0; s < nodes_[i].degree; ++s)
      owner_[nodes_[i].slot[s]] = {i, s};
}

}  // namespace tanglekit
