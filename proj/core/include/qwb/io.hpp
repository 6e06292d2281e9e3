#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qwb/fixtures.hpp"
#include "qwb/module.hpp"
#include "qwb/transform.hpp"

namespace qwb {

// A named relation on a quantale's carrier, for saturation commands.
struct NamedRelation {
  std::string quantale_name;
  std::vector<std::pair<Elem, Elem>> pairs;
};

// All structures loaded from one or more structure files. Every structure
// has been run through its validator; a Workspace never holds an invalid
// object.
struct Workspace {
  std::map<std::string, FiniteSupLattice> lattices;
  std::map<std::string, std::shared_ptr<const Quantale>> quantales;
  std::map<std::string, QModule> modules;
  std::map<std::string, Kernel> kernels;
  std::map<std::string, NamedRelation> relations;

  // Name cross-references, kept so files round-trip.
  std::map<std::string, std::string> quantale_lattice;
  std::map<std::string, std::pair<std::string, std::string>> module_refs;
  std::map<std::string, std::string> kernel_quantale;

  // Insertion order, as (kind, name) pairs; serialization replays it.
  std::vector<std::pair<std::string, std::string>> order;
};

// Structure-file grammar (one directive per line, '#' starts a comment):
//
//   lattice NAME
//     elements a b c ...
//     leq a b            # any subrelation; the closure is taken
//   end
//
//   quantale NAME
//     lattice LAT        # a lattice declared earlier in the workspace
//     unit a             # optional
//     mul a b c          # a * b = c; unlisted products default to bottom
//   end
//
//   module NAME
//     quantale Q
//     lattice LAT
//     side left|right    # optional, default left
//     act a v w          # a * v = w; unlisted actions default to bottom
//   end
//
//   kernel NAME
//     quantale Q
//     side left|right
//     dim ROWS COLS      # entries over the free modules Q^ROWS -> Q^COLS
//     row a b c ...      # one line per row, in order
//   end
//
//   relation NAME
//     quantale Q
//     pair a b
//   end
//
// Throws Error("ParseError", ...) with the offending line number, or the
// relevant validator error.
void parse_into(Workspace& ws, std::istream& in, const std::string& source);
Workspace parse_workspace(const std::string& text);
Workspace load_workspace_file(const std::string& path);

// The workspace's quantales and modules in declaration order, in the shape
// the suite runner consumes.
Fixtures corpus_of(const Workspace& ws);

// Canonical form: lattices are written as their covering relation,
// products and actions as full tables minus the bottom-valued entries,
// all in carrier index order. parse(serialize(ws)) == serialize-fixed.
std::string serialize_workspace(const Workspace& ws);

}  // namespace qwb
