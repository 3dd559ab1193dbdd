#include <cctype>
#include <sstream>

#include "triad/textio.hpp"

namespace triad {

namespace {

bool needs_quoting(const std::string& text) {
  for (char c : text) {
    const bool bare = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
                      c == '+' || c == '-';
    if (!bare) return true;
  }
  return text.empty();
}

std::string quote(const std::string& text) {
  if (!needs_quoting(text)) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string atoms(const AtomSet& set) {
  std::string out;
  for (const Atom& a : set) {
    out += " " + quote(a.text());
  }
  return out;
}

std::string pairs(const PairSet& set) {
  std::string out;
  for (const auto& [from, to] : set) {
    out += " " + quote(from.text()) + "->" + quote(to.text());
  }
  return out;
}

std::string word(const Word& w) {
  std::string out;
  for (const Atom& symbol : w) {
    out += " " + quote(symbol.text());
  }
  return out;
}

class Writer {
 public:
  void key(const std::string& name, const std::string& items) {
    out_ << "  " << name << ":" << items << ";\n";
  }

  void open(const std::string& kind, const Atom& id) {
    if (!first_) out_ << "\n";
    first_ = false;
    out_ << kind << " " << quote(id.text()) << " {\n";
  }

  void close() { out_ << "}\n"; }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool first_ = true;
};

std::string scale_spec(const Scale& scale) {
  switch (scale.kind()) {
    case Scale::Kind::Unit: return " unit";
    case Scale::Kind::Symmetric: return " sym";
    case Scale::Kind::RealLine: return " real";
    case Scale::Kind::Lattice: return " lattice:" + quote(scale.lattice_ref().id.text());
  }
  return "";
}

std::string degree_items(const FuzzySet& f) {
  std::string out;
  for (const auto& [element, degree] : f.membership) {
    // Rational degrees use the bare p/q item syntax; lattice elements are atoms.
    const std::string rendered =
        degree.is_rational() ? degree.rational().str() : quote(degree.lattice_element().text());
    out += " " + quote(element.text()) + ":" + rendered;
  }
  return out;
}

std::string tm_rule_items(const TuringMachine& t) {
  std::string out;
  bool first = true;
  for (const TmRule& rule : t.rules) {
    if (!first) out += ",";
    first = false;
    out += " " + quote(rule.state.text()) + " " + quote(rule.symbol.text()) + " ->";
    switch (rule.action) {
      case TmAction::MoveRight: out += " R"; break;
      case TmAction::MoveLeft: out += " L"; break;
      case TmAction::Write: {
        // A written R or L must be quoted so it re-parses as a write.
        const std::string text = rule.write->text();
        out += " " + ((text == "R" || text == "L") ? "\"" + text + "\"" : quote(text));
        break;
      }
    }
    out += " " + quote(rule.next.text());
  }
  return out;
}

}  // namespace

std::string quote_atom(const Atom& atom) { return quote(atom.text()); }

std::string serialize_workspace(const Workspace& w) {
  Writer out;

  for (const auto& [id, a] : w.automata) {
    out.open("automaton", id);
    out.key("inputs", atoms(a.inputs));
    out.key("states", atoms(a.states));
    out.key("outputs", atoms(a.outputs));
    out.key("start", " " + quote(a.start.text()));
    out.key("finals", atoms(a.finals));
    std::string items;
    for (const auto& [key, value] : a.delta) {
      items += " (" + quote(key.first.text()) + "," + quote(key.second.text()) + ")->(" +
               quote(value.first.text()) + "," + quote(value.second.text()) + ")";
    }
    out.key("delta", items);
    out.close();
  }

  for (const auto& [id, c] : w.calculi) {
    out.open("calculus", id);
    out.key("axioms", atoms(c.axioms));
    std::string items;
    bool first = true;
    for (const GroundRule& rule : c.rules) {
      if (!first) items += ",";
      first = false;
      items += atoms(rule.premises) + " =>" + " " + quote(rule.conclusion.text());
    }
    out.key("rules", items);
    out.close();
  }

  for (const auto& [id, f] : w.fuzzy_sets) {
    out.open("fuzzyset", id);
    out.key("universe", atoms(f.universe));
    out.key("scale", scale_spec(f.scale));
    out.key("degrees", degree_items(f));
    out.close();
  }

  for (const auto& [id, g] : w.grammars) {
    out.open("grammar", id);
    out.key("variables", atoms(g.variables));
    out.key("terminals", atoms(g.terminals));
    out.key("start", " " + quote(g.start.text()));
    std::string items;
    bool first = true;
    for (const auto& [left, right] : g.productions) {
      if (!first) items += ",";
      first = false;
      items += word(left) + " ->" + word(right);
    }
    out.key("productions", items);
    out.close();
  }

  for (const auto& [id, l] : w.lattices) {
    out.open("lattice", id);
    out.key("carrier", atoms(l.carrier));
    PairSet proper;  // the closure minus reflexive pairs re-closes to itself
    for (const auto& pair : l.order) {
      if (pair.first != pair.second) proper.insert(pair);
    }
    out.key("order", [&] {
      std::string items;
      for (const auto& [lo, hi] : proper) {
        items += " " + quote(lo.text()) + "<=" + quote(hi.text());
      }
      return items;
    }());
    out.close();
  }

  for (const auto& [id, m] : w.morphisms) {
    out.open("morphism", id);
    out.key("source", " " + quote(m.source.id.text()));
    out.key("target", " " + quote(m.target.id.text()));
    std::string f_items;
    for (const auto& [from, to] : m.element_map) {
      f_items += " " + quote(from.text()) + "->" + quote(to.text());
    }
    out.key("f", f_items);
    std::string g_items;
    for (const auto& [from, to] : m.name_map) {
      g_items += " " + quote(from.text()) + "->" + quote(to.text());
    }
    out.key("g", g_items);
    out.close();
  }

  for (const auto& [id, m] : w.multisets) {
    out.open("multiset", id);
    std::string items;
    for (const auto& [element, count] : m.multiplicity) {
      items += " " + quote(element.text()) + ":" + std::to_string(count);
    }
    out.key("items", items);
    out.close();
  }

  for (const auto& [id, x] : w.named_sets) {
    out.open("namedset", id);
    out.key("support", atoms(x.support));
    out.key("names", atoms(x.reflector));
    out.key("rel", pairs(x.relation));
    out.close();
  }

  for (const auto& [id, p] : w.properties) {
    out.open("property", id);
    out.key("universe", " " + quote(p.universe_label.text()));
    out.key("scale", " " + quote(p.scale_label.text()));
    std::string items;
    for (const auto& [u, v] : p.valuation) {
      items += " " + quote(u.text()) + ":" + quote(v.text());
    }
    out.key("values", items);
    out.close();
  }

  for (const auto& [id, s] : w.sets) {
    out.open("set", id);
    out.key("elements", atoms(s.elements));
    out.close();
  }

  for (const auto& [id, t] : w.turing_machines) {
    out.open("tm", id);
    out.key("alphabet", atoms(t.alphabet));
    out.key("blank", " " + quote(t.blank.text()));
    out.key("states", atoms(t.states));
    out.key("start", " " + quote(t.start.text()));
    out.key("finals", atoms(t.finals));
    out.key("rules", tm_rule_items(t));
    out.close();
  }

  return out.str();
}

namespace {

std::string leaf_text(const TriadTree& node) {
  switch (node.kind) {
    case TriadTree::Kind::AtomSetLeaf: {
      std::string out = "{";
      bool first = true;
      for (const Atom& a : node.atoms) {
        if (!first) out += " ";
        first = false;
        out += quote(a.text());
      }
      return out + "}";
    }
    case TriadTree::Kind::NamedSetLeaf: {
      const NamedSet& x = *node.named;
      std::string out = "namedset support={";
      out += atoms(x.support).empty() ? "" : atoms(x.support).substr(1);
      out += "} names={";
      out += atoms(x.reflector).empty() ? "" : atoms(x.reflector).substr(1);
      out += "} rel={";
      out += pairs(x.relation).empty() ? "" : pairs(x.relation).substr(1);
      return out + "}";
    }
    case TriadTree::Kind::PlaceholderLeaf:
      return "<" + node.label + ">";
    case TriadTree::Kind::Triad:
      break;
  }
  return "";
}

void render_node(const TriadTree& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (!node.role.empty()) {
    out += node.role + ": ";
  }
  if (node.kind == TriadTree::Kind::Triad) {
    out += node.label + "\n";
    for (const TriadTree& child : node.children) {
      render_node(child, depth + 1, out);
    }
  } else {
    out += leaf_text(node) + "\n";
  }
}

}  // namespace

std::string render_triad_tree(const TriadTree& tree) {
  std::string out;
  render_node(tree, 0, out);
  return out;
}

}  // namespace triad
