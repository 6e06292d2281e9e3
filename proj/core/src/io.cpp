#include "qwb/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace qwb {
namespace {

[[noreturn]] void parse_fail(const std::string& source, int line,
                             const std::string& msg) {
  throw Error("ParseError",
              source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

struct Directive {
  int line;
  std::vector<std::string> toks;
};

void check_fresh(const Workspace& ws, const std::string& name,
                 const std::string& source, int line) {
  if (ws.lattices.count(name) || ws.quantales.count(name) ||
      ws.modules.count(name) || ws.kernels.count(name) ||
      ws.relations.count(name))
    parse_fail(source, line, "duplicate structure name '" + name + "'");
}

const FiniteSupLattice& lattice_ref(const Workspace& ws,
                                    const std::string& name,
                                    const std::string& source, int line) {
  auto it = ws.lattices.find(name);
  if (it == ws.lattices.end())
    parse_fail(source, line, "unknown lattice '" + name + "'");
  return it->second;
}

std::shared_ptr<const Quantale> quantale_ref(const Workspace& ws,
                                             const std::string& name,
                                             const std::string& source,
                                             int line) {
  auto it = ws.quantales.find(name);
  if (it == ws.quantales.end())
    parse_fail(source, line, "unknown quantale '" + name + "'");
  return it->second;
}

Handed parse_side(const std::string& s, const std::string& source, int line) {
  if (s == "left") return Handed::left;
  if (s == "right") return Handed::right;
  parse_fail(source, line, "side must be 'left' or 'right', got '" + s + "'");
}

void build_lattice(Workspace& ws, const std::string& name,
                   const std::vector<Directive>& body,
                   const std::string& source) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  for (const auto& d : body) {
    if (d.toks[0] == "elements") {
      elements.insert(elements.end(), d.toks.begin() + 1, d.toks.end());
    } else if (d.toks[0] == "leq" && d.toks.size() == 3) {
      leq.emplace_back(d.toks[1], d.toks[2]);
    } else {
      parse_fail(source, d.line, "bad lattice directive '" + d.toks[0] + "'");
    }
  }
  ws.lattices.emplace(name, validate_sup_lattice(elements, leq));
  ws.order.emplace_back("lattice", name);
}

void build_quantale(Workspace& ws, const std::string& name,
                    const std::vector<Directive>& body,
                    const std::string& source) {
  const FiniteSupLattice* lat = nullptr;
  std::string lat_name;
  std::optional<std::string> unit_name;
  std::vector<std::array<std::string, 3>> prods;
  for (const auto& d : body) {
    if (d.toks[0] == "lattice" && d.toks.size() == 2) {
      lat_name = d.toks[1];
      lat = &lattice_ref(ws, lat_name, source, d.line);
    } else if (d.toks[0] == "unit" && d.toks.size() == 2) {
      unit_name = d.toks[1];
    } else if (d.toks[0] == "mul" && d.toks.size() == 4) {
      prods.push_back({d.toks[1], d.toks[2], d.toks[3]});
    } else {
      parse_fail(source, d.line, "bad quantale directive '" + d.toks[0] + "'");
    }
  }
  if (!lat) parse_fail(source, body.empty() ? 0 : body.front().line,
                       "quantale '" + name + "' has no lattice");
  const int n = lat->size();
  std::vector<Elem> mul(n * n, lat->bottom);
  for (const auto& [a, b, c] : prods)
    mul[lat->index_of(a) * n + lat->index_of(b)] = lat->index_of(c);
  std::optional<Elem> unit;
  if (unit_name) unit = lat->index_of(*unit_name);
  ws.quantales.emplace(name, std::make_shared<const Quantale>(
                                 validate_quantale(*lat, mul, unit)));
  ws.quantale_lattice.emplace(name, lat_name);
  ws.order.emplace_back("quantale", name);
}

void build_module(Workspace& ws, const std::string& name,
                  const std::vector<Directive>& body,
                  const std::string& source) {
  std::shared_ptr<const Quantale> q;
  const FiniteSupLattice* lat = nullptr;
  std::string q_name, lat_name;
  Handed side = Handed::left;
  std::vector<std::array<std::string, 3>> acts;
  for (const auto& d : body) {
    if (d.toks[0] == "quantale" && d.toks.size() == 2) {
      q_name = d.toks[1];
      q = quantale_ref(ws, q_name, source, d.line);
    } else if (d.toks[0] == "lattice" && d.toks.size() == 2) {
      lat_name = d.toks[1];
      lat = &lattice_ref(ws, lat_name, source, d.line);
    } else if (d.toks[0] == "side" && d.toks.size() == 2) {
      side = parse_side(d.toks[1], source, d.line);
    } else if (d.toks[0] == "act" && d.toks.size() == 4) {
      acts.push_back({d.toks[1], d.toks[2], d.toks[3]});
    } else {
      parse_fail(source, d.line, "bad module directive '" + d.toks[0] + "'");
    }
  }
  if (!q || !lat)
    parse_fail(source, body.empty() ? 0 : body.front().line,
               "module '" + name + "' needs both a quantale and a lattice");
  const int m = lat->size();
  std::vector<Elem> act(q->size() * m, lat->bottom);
  for (const auto& [a, v, w] : acts)
    act[q->lat.index_of(a) * m + lat->index_of(v)] = lat->index_of(w);
  ws.modules.emplace(name, validate_module(q, *lat, act, side));
  ws.module_refs.emplace(name, std::make_pair(q_name, lat_name));
  ws.order.emplace_back("module", name);
}

void build_kernel(Workspace& ws, const std::string& name,
                  const std::vector<Directive>& body,
                  const std::string& source) {
  std::shared_ptr<const Quantale> q;
  std::string q_name;
  Handed side = Handed::left;
  int rows = -1, cols = -1;
  std::vector<std::vector<std::string>> row_lines;
  for (const auto& d : body) {
    if (d.toks[0] == "quantale" && d.toks.size() == 2) {
      q_name = d.toks[1];
      q = quantale_ref(ws, q_name, source, d.line);
    } else if (d.toks[0] == "side" && d.toks.size() == 2) {
      side = parse_side(d.toks[1], source, d.line);
    } else if (d.toks[0] == "dim" && d.toks.size() == 3) {
      rows = std::stoi(d.toks[1]);
      cols = std::stoi(d.toks[2]);
    } else if (d.toks[0] == "row") {
      row_lines.emplace_back(d.toks.begin() + 1, d.toks.end());
    } else {
      parse_fail(source, d.line, "bad kernel directive '" + d.toks[0] + "'");
    }
  }
  const int first = body.empty() ? 0 : body.front().line;
  if (!q) parse_fail(source, first, "kernel '" + name + "' has no quantale");
  if (rows <= 0 || cols <= 0)
    parse_fail(source, first, "kernel '" + name + "' has no dim line");
  if (static_cast<int>(row_lines.size()) != rows)
    parse_fail(source, first,
               "kernel '" + name + "': expected " + std::to_string(rows) +
                   " row lines, got " + std::to_string(row_lines.size()));
  Kernel k;
  k.q = q;
  k.rows = rows;
  k.cols = cols;
  k.side = side;
  for (const auto& row : row_lines) {
    if (static_cast<int>(row.size()) != cols)
      parse_fail(source, first, "kernel '" + name + "': row of wrong width");
    for (const auto& e : row) k.entries.push_back(q->lat.index_of(e));
  }
  ws.kernels.emplace(name, std::move(k));
  ws.kernel_quantale.emplace(name, q_name);
  ws.order.emplace_back("kernel", name);
}

void build_relation(Workspace& ws, const std::string& name,
                    const std::vector<Directive>& body,
                    const std::string& source) {
  NamedRelation r;
  std::shared_ptr<const Quantale> q;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& d : body) {
    if (d.toks[0] == "quantale" && d.toks.size() == 2) {
      r.quantale_name = d.toks[1];
      q = quantale_ref(ws, r.quantale_name, source, d.line);
    } else if (d.toks[0] == "pair" && d.toks.size() == 3) {
      pairs.emplace_back(d.toks[1], d.toks[2]);
    } else {
      parse_fail(source, d.line, "bad relation directive '" + d.toks[0] + "'");
    }
  }
  if (!q)
    parse_fail(source, body.empty() ? 0 : body.front().line,
               "relation '" + name + "' has no quantale");
  for (const auto& [a, b] : pairs)
    r.pairs.emplace_back(q->lat.index_of(a), q->lat.index_of(b));
  ws.relations.emplace(name, std::move(r));
  ws.order.emplace_back("relation", name);
}

}  // namespace

void parse_into(Workspace& ws, std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  std::string kind, name;
  int header_line = 0;
  std::vector<Directive> body;
  bool in_block = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!in_block) {
      if (toks.size() != 2 ||
          (toks[0] != "lattice" && toks[0] != "quantale" &&
           toks[0] != "module" && toks[0] != "kernel" &&
           toks[0] != "relation"))
        parse_fail(source, lineno,
                   "expected a block header (lattice/quantale/module/"
                   "kernel/relation NAME), got '" +
                       toks[0] + "'");
      kind = toks[0];
      name = toks[1];
      header_line = lineno;
      check_fresh(ws, name, source, lineno);
      body.clear();
      in_block = true;
    } else if (toks.size() == 1 && toks[0] == "end") {
      if (kind == "lattice") build_lattice(ws, name, body, source);
      else if (kind == "quantale") build_quantale(ws, name, body, source);
      else if (kind == "module") build_module(ws, name, body, source);
      else if (kind == "kernel") build_kernel(ws, name, body, source);
      else build_relation(ws, name, body, source);
      in_block = false;
    } else {
      body.push_back({lineno, std::move(toks)});
    }
  }
  if (in_block)
    parse_fail(source, header_line,
               "block '" + name + "' is missing its 'end' line");
}

Workspace parse_workspace(const std::string& text) {
  Workspace ws;
  std::istringstream is(text);
  parse_into(ws, is, "<string>");
  return ws;
}

Workspace load_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", path + ": cannot open file");
  Workspace ws;
  parse_into(ws, in, path);
  return ws;
}

namespace {

void write_lattice(std::ostream& os, const std::string& name,
                   const FiniteSupLattice& l) {
  os << "lattice " << name << "\n  elements";
  for (const auto& e : l.names) os << ' ' << e;
  os << '\n';
  for (auto [a, b] : l.covers())
    os << "  leq " << l.names[a] << ' ' << l.names[b] << '\n';
  os << "end\n";
}

void write_quantale(std::ostream& os, const std::string& name,
                    const std::string& lat_name, const Quantale& q) {
  os << "quantale " << name << "\n  lattice " << lat_name << '\n';
  if (q.unit) os << "  unit " << q.lat.names[*q.unit] << '\n';
  const auto& nm = q.lat.names;
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (q.mul(a, b) != q.bottom())
        os << "  mul " << nm[a] << ' ' << nm[b] << ' ' << nm[q.mul(a, b)]
           << '\n';
  os << "end\n";
}

void write_module(std::ostream& os, const std::string& name,
                  const std::pair<std::string, std::string>& refs,
                  const QModule& m) {
  os << "module " << name << "\n  quantale " << refs.first << "\n  lattice "
     << refs.second << '\n';
  if (m.handed == Handed::right) os << "  side right\n";
  for (Elem a = 0; a < m.q->size(); ++a)
    for (Elem v = 0; v < m.size(); ++v)
      if (m.act(a, v) != m.lat.bottom)
        os << "  act " << m.q->lat.names[a] << ' ' << m.lat.names[v] << ' '
           << m.lat.names[m.act(a, v)] << '\n';
  os << "end\n";
}

void write_kernel(std::ostream& os, const std::string& name,
                  const std::string& q_name, const Kernel& k) {
  os << "kernel " << name << "\n  quantale " << q_name << "\n  side "
     << (k.side == Handed::left ? "left" : "right") << "\n  dim " << k.rows
     << ' ' << k.cols << '\n';
  for (int x = 0; x < k.rows; ++x) {
    os << "  row";
    for (int y = 0; y < k.cols; ++y) os << ' ' << k.q->lat.names[k.at(x, y)];
    os << '\n';
  }
  os << "end\n";
}

void write_relation(std::ostream& os, const std::string& name,
                    const Workspace& ws, const NamedRelation& r) {
  os << "relation " << name << "\n  quantale " << r.quantale_name << '\n';
  const auto& nm = ws.quantales.at(r.quantale_name)->lat.names;
  for (auto [a, b] : r.pairs)
    os << "  pair " << nm[a] << ' ' << nm[b] << '\n';
  os << "end\n";
}

}  // namespace

Fixtures corpus_of(const Workspace& ws) {
  Fixtures fx;
  for (const auto& [kind, name] : ws.order) {
    if (kind == "quantale")
      fx.quantales.emplace_back(name, ws.quantales.at(name));
    else if (kind == "module")
      fx.modules.emplace_back(name, ws.modules.at(name));
  }
  return fx;
}

std::string serialize_workspace(const Workspace& ws) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, name] : ws.order) {
    if (!first) os << '\n';
    first = false;
    if (kind == "lattice")
      write_lattice(os, name, ws.lattices.at(name));
    else if (kind == "quantale")
      write_quantale(os, name, ws.quantale_lattice.at(name),
                     *ws.quantales.at(name));
    else if (kind == "module")
      write_module(os, name, ws.module_refs.at(name), ws.modules.at(name));
    else if (kind == "kernel")
      write_kernel(os, name, ws.kernel_quantale.at(name), ws.kernels.at(name));
    else
      write_relation(os, name, ws, ws.relations.at(name));
  }
  return os.str();
}

}  // namespace qwb
