#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tanglekit {

enum class NodeKind : std::uint8_t { Crossing, Vertex, Endpoint };

/// Tangle boundary marks, one per endpoint of a marked two-string tangle.
enum class Mark : std::uint8_t { NW = 0, NE = 1, SW = 2, SE = 3 };

const char* to_string(Mark m);
std::optional<Mark> mark_from_string(const std::string& s);

/// A node of a diagram: crossing (degree 4, slots in counterclockwise
/// order starting at the incoming understrand, so slots 0,2 carry the
/// understrand and 1,3 the overstrand), graph vertex (degree 3; degree 4
/// arises only in internal polynomial states), or endpoint (degree 1).
struct Node {
  NodeKind kind = NodeKind::Crossing;
  std::uint8_t degree = 4;
  std::array<int, 4> slot{{-1, -1, -1, -1}};
};

/// Combinatorial planar diagram: nodes with half-edge slots whose order
/// gives the rotation system, a perfect matching on half-edges, and a
/// count of crossing-free circle components.  Value semantics; surgeries
/// return new diagrams.
class Diagram {
public:
  Diagram() = default;

  // -- construction ---------------------------------------------------
  int add_crossing();
  int add_vertex(int degree = 3);
  int add_endpoint();
  /// Pair two currently unpaired half-edges.
  void pair_halves(int h1, int h2);
  /// Break the pairing of h (and of its mate).
  void cut_edge(int h);
  void set_mark(Mark m, int endpoint_node);
  void clear_mark(Mark m);
  void add_free_loops(int n) { free_loops_ += n; }

  // -- access ---------------------------------------------------------
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int half_count() const { return static_cast<int>(mate_.size()); }
  const Node& node(int id) const { return nodes_[id]; }
  int mate(int h) const { return mate_[h]; }
  /// (node id, slot index) owning half-edge h.
  std::pair<int, int> owner(int h) const { return owner_[h]; }
  /// Counterclockwise-next half-edge at the same node.
  int sigma(int h) const;
  /// Clockwise-next half-edge at the same node.
  int sigma_inv(int h) const;
  /// Half-edge at the opposite slot of a crossing (same strand).
  int opposite(int h) const;
  int slot_at(int node_id, int i) const { return nodes_[node_id].slot[i]; }
  int free_loops() const { return free_loops_; }
  int marked_node(Mark m) const { return marks_[static_cast<int>(m)]; }
  bool has_marks() const;
  int crossing_count() const;
  int count_kind(NodeKind k) const;
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  /// Node ids of each connected component (via edges), each sorted.
  std::vector<std::vector<int>> components() const;

  /// Face orbits of h -> sigma(mate(h)); every paired half-edge appears in
  /// exactly one orbit.
  std::vector<std::vector<int>> faces() const;
  /// face id containing each half-edge (indexed by half-edge).
  std::vector<int> face_of_half() const;

  /// First violated invariant, or nullopt if the diagram is valid.
  /// Checks the matching, degrees, and the sphere embedding
  /// (V - E + F = 2 on every connected component).
  std::optional<std::string> validate_error(bool allow_degree4 = false) const;
  bool is_valid(bool allow_degree4 = false) const {
    return !validate_error(allow_degree4).has_value();
  }

  /// Relabeling-invariant canonical form; equal codes iff the diagrams are
  /// identical up to renumbering of nodes and half-edges.
  std::vector<std::int32_t> canonical_code() const;
  std::string canonical_key() const;
  bool same_diagram(const Diagram& o) const {
    return canonical_code() == o.canonical_code();
  }

  // -- surgery --------------------------------------------------------
  /// Remove `victims` (node ids).  `through` is an involution on some of
  /// their slots giving how strands pass through the removed region; each
  /// surviving strand is rerouted, closed-up strands become free loops,
  /// and slots not in `through` must belong to strands that stay entirely
  /// inside the removed region (those strands are deleted).
  /// Node and half-edge ids of survivors are compacted preserving order.
  Diagram excised(const std::set<int>& victims,
                  const std::vector<std::pair<int, int>>& through) const;

  /// Insert a crossing on the edge of h; the new strand crosses it coming
  /// from the face orbit of h.  Returns the entry and exit half-edges of
  /// the new strand, both unpaired.  new_over: new strand passes over.
  struct Pierce { int crossing; int in; int out; };
  Pierce pierce(int h, bool new_over);

  /// Disjoint union: append o's nodes and half-edges (free loops added,
  /// o's marks and label ignored).  Returns (node offset, half offset).
  std::pair<int, int> append_disjoint(const Diagram& o);

  /// Flip a crossing (over/under swap) in place.
  void flip_crossing(int node_id);

  /// Renumber nodes/half-edges densely (drops nothing; used after manual
  /// edits that leave ids dense already — kept cheap and deterministic).
  void rebuild_owners();

private:
  int add_node(NodeKind kind, int degree);
  void component_code(const std::vector<int>& comp_nodes,
                      std::vector<std::int32_t>& best) const;

  std::vector<Node> nodes_;
  std::vector<int> mate_;                    // -1 while unpaired
  std::vector<std::pair<int, int>> owner_;   // half-edge -> (node, slot)
  int free_loops_ = 0;
  std::array<int, 4> marks_{{-1, -1, -1, -1}};
  std::string label_;
};

}  // namespace tanglekit
