#include "tanglekit/diagram_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace tanglekit {

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  if (!d.label().empty()) out << "# label: " << d.label() << "\n";
  for (int i = 0; i < d.node_count(); ++i) {
    const Node& n = d.node(i);
    switch (n.kind) {
      case NodeKind::Vertex:
        if (n.degree != 3)
          throw std::invalid_argument("serialize: degree-4 vertex");
        out << "V " << i << " " << n.slot[0] << " " << n.slot[1] << " "
            << n.slot[2] << "\n";
        break;
      case NodeKind::Crossing:
        out << "X " << i << " " << n.slot[0] << " " << n.slot[1] << " "
            << n.slot[2] << " " << n.slot[3] << "\n";
        break;
      case NodeKind::Endpoint:
        out << "E " << i << " " << n.slot[0] << "\n";
        break;
    }
  }
  if (d.free_loops() > 0) out << "L " << d.free_loops() << "\n";
  for (int h = 0; h < d.half_count(); ++h)
    if (d.mate(h) > h) out << "P " << h << " " << d.mate(h) << "\n";
  for (int mk = 0; mk < 4; ++mk) {
    const int v = d.marked_node(static_cast<Mark>(mk));
    if (v != -1)
      out << "M " << to_string(static_cast<Mark>(mk)) << " " << v << "\n";
  }
  return out.str();
}

void write_diagram(const std::string& path, const Diagram& d) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << serialize_diagram(d);
}

Diagram parse_diagram(const std::string& text) {
  struct RawNode {
    char kind;
    std::vector<long> halves;
  };
  std::map<long, RawNode> raw_nodes;          // file node id -> node
  std::vector<std::pair<long, long>> pairs;   // file half-edge ids
  std::vector<std::pair<Mark, long>> marks;
  int free_loops = 0;
  std::string label;
  bool seen_pair = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip trailing CR and leading blanks.
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      const std::string key = "# label: ";
      if (line.rfind(key, 0) == 0 && label.empty())
        label = line.substr(key.size());
      continue;
    }
    std::istringstream ls(line.substr(start));
    std::string tag;
    ls >> tag;
    auto want_long = [&](const char* what) {
      long v;
      if (!(ls >> v) || v < 0)
        throw DiagramParseError(lineno,
                                std::string("expected nonnegative ") + what);
      return v;
    };
    if (tag == "V" || tag == "X" || tag == "E") {
      if (seen_pair)
        throw DiagramParseError(lineno, "node line after P line");
      const long id = want_long("node id");
      if (raw_nodes.count(id))
        throw DiagramParseError(lineno, "duplicate node id");
      RawNode n;
      n.kind = tag[0];
      const int deg = tag == "X" ? 4 : tag == "V" ? 3 : 1;
      for (int i = 0; i < deg; ++i) n.halves.push_back(want_long("half-edge"));
      std::string extra;
      if (ls >> extra) throw DiagramParseError(lineno, "trailing tokens");
      raw_nodes[id] = std::move(n);
    } else if (tag == "P") {
      seen_pair = true;
      const long a = want_long("half-edge");
      const long b = want_long("half-edge");
      pairs.push_back({a, b});
    } else if (tag == "M") {
      std::string ms;
      if (!(ls >> ms)) throw DiagramParseError(lineno, "expected mark");
      auto m = mark_from_string(ms);
      if (!m) throw DiagramParseError(lineno, "unknown mark '" + ms + "'");
      marks.push_back({*m, want_long("endpoint id")});
    } else if (tag == "L") {
      free_loops += static_cast<int>(want_long("loop count"));
    } else {
      throw DiagramParseError(lineno, "unknown record '" + tag + "'");
    }
  }

  Diagram d;
  d.set_label(label);
  d.add_free_loops(free_loops);
  std::map<long, int> node_map;
  std::map<long, int> half_map;
  for (const auto& [id, rn] : raw_nodes) {
    int ni = 0;
    switch (rn.kind) {
      case 'V': ni = d.add_vertex(3); break;
      case 'X': ni = d.add_crossing(); break;
      case 'E': ni = d.add_endpoint(); break;
    }
    node_map[id] = ni;
    for (size_t s = 0; s < rn.halves.size(); ++s) {
      const long fh = rn.halves[s];
      if (half_map.count(fh))
        throw DiagramParseError(0, "half-edge " + std::to_string(fh) +
                                       " listed in two slots");
      half_map[fh] = d.slot_at(ni, static_cast<int>(s));
    }
  }
  for (auto [a, b] : pairs) {
    if (!half_map.count(a) || !half_map.count(b))
      throw DiagramParseError(0, "pairing references unknown half-edge");
    d.pair_halves(half_map[a], half_map[b]);
  }
  for (auto [m, id] : marks) {
    if (!node_map.count(id))
      throw DiagramParseError(0, "mark references unknown node");
    d.set_mark(m, node_map[id]);
  }
  return d;
}

Diagram read_diagram(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

}  // namespace tanglekit
