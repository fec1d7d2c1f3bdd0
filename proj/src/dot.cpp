#include "qgadget/dot.hpp"

#include <map>
#include <sstream>

namespace qgadget {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const GadgetGraph& g) {
  std::ostringstream os;
  os << "graph " << quoted(g.name) << " {\n  node [shape=circle];\n";
  for (const auto& v : g.vertices()) {
    os << "  " << quoted(v);
    if (g.is_aux(v)) os << " [style=filled, fillcolor=red]";
    os << ";\n";
  }
  for (const auto& [a, b] : g.edges) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_dot(const HostGraph& host, const Embedding* e, const GadgetGraph* guest) {
  std::map<int, Var> owner;
  if (e) {
    for (const auto& [v, chain] : e->chains)
      for (int h : chain) owner[h] = v;
  }
  std::ostringstream os;
  os << "graph " << quoted(host.name()) << " {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < host.size(); ++i) {
    const int h = static_cast<int>(i);
    os << "  " << h << " [label=" << quoted(host.label(h));
    if (e) {
      auto it = owner.find(h);
      if (it == owner.end()) {
        os << ", color=grey, fontcolor=grey";
      } else {
        os << ", xlabel=" << quoted(it->second);
        if (guest && guest->is_aux(it->second)) os << ", style=filled, fillcolor=red";
      }
    }
    os << "];\n";
  }
  for (auto [a, b] : host.edges()) {
    os << "  " << a << " -- " << b;
    if (e) {
      auto ia = owner.find(a), ib = owner.find(b);
      if (ia == owner.end() || ib == owner.end()) {
        os << " [color=grey]";
      } else if (ia->second == ib->second) {
        os << " [penwidth=4]";
      } else if (guest && !guest->has_edge(ia->second, ib->second)) {
        os << " [color=grey]";
      }
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qgadget
