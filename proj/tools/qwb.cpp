// qwb: command-line workbench for finite quantales and their modules.
//
// Exit codes: 0 all checks pass, 1 verified failure (with witness),
// 2 usage or parse error, 3 budget exceeded.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qwb/enumerate.hpp"
#include "qwb/io.hpp"
#include "qwb/k0.hpp"
#include "qwb/saturation.hpp"
#include "qwb/suites.hpp"
#include "qwb/transform.hpp"

namespace {

using namespace qwb;

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int emit(const Report& r, const std::string& format) {
  std::cout << (format == "json" ? r.to_json() : r.to_text());
  return r.exit_code();
}

RelationSpec parse_relation(const Quantale& q,
                            const std::vector<std::string>& pairs) {
  RelationSpec rel;
  for (const auto& p : pairs) {
    std::istringstream is(p);
    std::string a, b;
    if (!(is >> a >> b))
      throw Error("ParseError", "--relation wants 'elemA elemB', got '" + p +
                                    "'");
    rel.emplace_back(q.lat.index_of(a), q.lat.index_of(b));
  }
  return rel;
}

// `check`: parse the file; every structure is validated on construction.
Report cmd_check(const std::string& file) {
  Clock clk;
  Report r;
  r.command = "check";
  r.structure = file;
  Workspace ws;
  try {
    ws = load_workspace_file(file);
  } catch (const Error& e) {
    if (std::string(e.code()) == "ParseError") throw;
    r.expect(false, std::string(e.code()) + ": " + e.what());
    r.millis = clk.ms();
    return r;
  }
  if (ws.order.empty())
    throw Error("ParseError", file + ": no structures declared");
  for (const auto& [kind, name] : ws.order) {
    r.expect(true, "");
    r.note(kind + " " + name + ": valid");
  }
  r.millis = clk.ms();
  return r;
}

const Quantale& find_quantale(const Workspace& ws, const std::string& name) {
  auto it = ws.quantales.find(name);
  if (it == ws.quantales.end())
    throw Error("UnknownStructure", "no quantale named " + name);
  return *it->second;
}

Report cmd_compute(const Workspace& ws, const std::string& what,
                   const std::string& name,
                   const std::vector<std::string>& relation, int bound) {
  Clock clk;
  Report r;
  r.command = "compute " + what;
  r.structure = name;
  if (what == "residuals") {
    const Quantale& q = find_quantale(ws, name);
    for (Elem a = 0; a < q.size(); ++a)
      for (Elem b = 0; b < q.size(); ++b) {
        r.note(q.lat.names[a] + "\\" + q.lat.names[b] + " = " +
               q.lat.names[q.under(a, b)] + "   " + q.lat.names[b] + "/" +
               q.lat.names[a] + " = " + q.lat.names[q.over(b, a)]);
        r.expect(true, "");
      }
  } else if (what == "ideals") {
    if (ws.modules.count(name)) {
      const QModule& m = ws.modules.at(name);
      for (Elem g : ideal_elements_module(m)) {
        r.note("ideal element " + m.lat.names[g] + " -> ideal [bot, " +
               m.lat.names[g] + "]");
        r.expect(true, "");
      }
    } else {
      const Quantale& q = find_quantale(ws, name);
      for (Elem g : ideal_elements_quantale(q)) {
        r.note("two-sided element " + q.lat.names[g] + " -> ideal [bot, " +
               q.lat.names[g] + "]");
        r.expect(true, "");
      }
    }
  } else if (what == "congruences") {
    std::vector<Congruence> congs;
    const FiniteSupLattice* lat = nullptr;
    if (ws.modules.count(name)) {
      congs = enumerate_congruences_module(ws.modules.at(name), bound);
      lat = &ws.modules.at(name).lat;
    } else {
      const Quantale& q = find_quantale(ws, name);
      congs = enumerate_congruences_quantale(q, bound);
      lat = &q.lat;
    }
    for (const auto& c : congs) {
      std::string line = "classes:";
      for (int k = 0; k < c.num_classes; ++k) {
        line += " {";
        bool first = true;
        for (Elem v = 0; v < static_cast<Elem>(c.cls.size()); ++v)
          if (c.cls[v] == k) {
            if (!first) line += ",";
            line += lat->names[v];
            first = false;
          }
        line += "}";
      }
      r.note(line);
      r.expect(true, "");
    }
  } else if (what == "saturated" || what == "quotient") {
    const Quantale& q = find_quantale(ws, name);
    RelationSpec rel = parse_relation(q, relation);
    if (what == "saturated") {
      std::string line = "saturated:";
      for (Elem s : saturated_set(q, rel)) line += " " + q.lat.names[s];
      r.note(line);
      r.expect(true, "");
    } else {
      auto qr = quotient_by_relation(q, rel);
      r.note("quotient carrier size " + std::to_string(qr.quotient.size()));
      const auto& nm = qr.quotient.lat.names;
      for (Elem a = 0; a < qr.quotient.size(); ++a)
        for (Elem b = 0; b < qr.quotient.size(); ++b)
          r.note(nm[a] + " . " + nm[b] + " = " + nm[qr.quotient.mul(a, b)]);
      r.expect(true, "");
    }
  } else if (what == "transform") {
    auto it = ws.kernels.find(name);
    if (it == ws.kernels.end())
      throw Error("UnknownStructure", "no kernel named " + name);
    const Kernel& k = it->second;
    QModule src = free_module(k.q, k.rows, k.side);
    QModule dst = free_module(k.q, k.cols, k.side);
    auto h = transform(k, src, dst);
    for (Elem v = 0; v < src.size(); ++v)
      r.note(src.lat.names[v] + " -> " + dst.lat.names[h[v]]);
    r.expect(true, "");
  } else if (what == "k0") {
    auto qp = ws.quantales.count(name)
                  ? ws.quantales.at(name)
                  : throw Error("UnknownStructure", "no quantale named " + name);
    auto classes = projective_classes(qp, bound);
    for (size_t i = 0; i < classes.reps.size(); ++i) {
      r.note("class " + std::to_string(i) + ": size " +
             std::to_string(classes.reps[i].size()));
      r.expect(true, "");
    }
    if (classes.reps.size() > 1) {
      auto verdict = [&](K0Verdict v) {
        return v == K0Verdict::equal
                   ? "equal"
                   : v == K0Verdict::distinct ? "distinct" : "unknown";
      };
      r.note(std::string("[c1] vs [c1]: ") +
             verdict(k0_equal(classes, {{1}, {}}, {{1}, {}}, bound)));
      r.note(std::string("[c1] vs [0]: ") +
             verdict(k0_equal(classes, {{1}, {}}, {{0}, {}}, bound)));
      r.expect(true, "");
    }
  } else {
    throw Error("ParseError", "unknown compute target " + what);
  }
  r.millis = clk.ms();
  return r;
}

Report cmd_enumerate(int size_bound) {
  Clock clk;
  Report r;
  r.command = "enumerate";
  r.structure = "size<=" + std::to_string(size_bound);
  auto all = enumerate_quantales(size_bound);
  int unital = 0, commutative = 0, integral = 0, frames = 0;
  for (const auto& q : all) {
    unital += q.flags.unital;
    commutative += q.flags.commutative;
    integral += q.flags.integral;
    frames += q.flags.frame;
    r.expect(true, "");
  }
  r.note("quantales up to isomorphism: " + std::to_string(all.size()));
  r.note("unital: " + std::to_string(unital) +
         ", commutative: " + std::to_string(commutative) +
         ", integral: " + std::to_string(integral) +
         ", frames: " + std::to_string(frames));
  r.millis = clk.ms();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite quantales and quantale modules"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate every structure in a file");
  check->add_option("file", check_file)->required();

  std::string comp_file, comp_what, comp_name;
  std::vector<std::string> relation;
  int bound = 7;
  auto* compute = app.add_subcommand("compute", "compute derived structure");
  compute->add_option("what", comp_what)
      ->required()
      ->check(CLI::IsMember({"residuals", "ideals", "congruences", "saturated",
                             "quotient", "transform", "k0"}));
  compute->add_option("name", comp_name, "structure name")->required();
  compute->add_option("--fixtures", comp_file,
                      "structure file (default: bundled corpus)");
  compute->add_option("--relation", relation,
                      "relation pair 'a b' (repeatable)");
  compute->add_option("--bound", bound, "enumeration/search bound");

  std::string ver_file, suite = "all";
  bool all_fixtures = false;
  int size = 2, enum_bound = 3;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("file", ver_file, "structure file");
  verify->add_flag("--all-fixtures", all_fixtures, "use the bundled corpus");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--size", size, "kernel dimension");
  verify->add_option("--bound", enum_bound, "lattice size for the scan");

  int enum_size = 4;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "all quantales on small lattices");
  enumerate->add_option("--size", enum_size, "max lattice size");

  std::string canon_file;
  auto* canon = app.add_subcommand("canon",
                                   "print the canonical form of a file");
  canon->add_option("file", canon_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return emit(cmd_check(check_file), format);
    if (*compute) {
      Workspace ws;
      if (comp_file.empty()) {
        const Fixtures& fx = builtin_fixtures();
        for (const auto& [n, q] : fx.quantales) ws.quantales.emplace(n, q);
        for (const auto& [n, m] : fx.modules) ws.modules.emplace(n, m);
      } else {
        ws = load_workspace_file(comp_file);
      }
      return emit(cmd_compute(ws, comp_what, comp_name, relation, bound),
                  format);
    }
    if (*verify) {
      SuiteOptions opts;
      opts.matrix_size = size;
      opts.enum_bound = enum_bound;
      Fixtures corpus;
      std::string label = "--all-fixtures";
      if (!ver_file.empty()) {
        corpus = corpus_of(load_workspace_file(ver_file));
        label = ver_file;
      } else if (!all_fixtures) {
        std::cerr << "verify: give a file or --all-fixtures\n";
        return 2;
      } else {
        corpus = builtin_fixtures();
      }
      Report r = run_suite(suite, corpus, opts);
      r.structure = label;
      return emit(r, format);
    }
    if (*canon) {
      std::cout << serialize_workspace(load_workspace_file(canon_file));
      return 0;
    }
    return emit(cmd_enumerate(enum_size), format);
  } catch (const Error& e) {
    const std::string code = e.code();
    std::cerr << "error [" << code << "]: " << e.what() << '\n';
    if (code == "ParseError" || code == "UnknownStructure" ||
        code == "UnknownSuite" || code == "UnknownElement")
      return 2;
    if (code == "BudgetExceeded" || code == "CarrierTooLarge") return 3;
    return 1;
  }
}
