#include "cli.hpp"

#include "graphk/classify.hpp"
#include "graphk/errors.hpp"
#include "graphk/ktheory.hpp"
#include "graphk/moves.hpp"
#include "graphk/textio.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace graphk::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }
MoveScript load_script(const std::string& path) { return parse_script(slurp(path)); }

std::string join_names(const Graph& g, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += " ";
    out += g.name(v);
  }
  return out;
}

void print_invariants(std::ostream& out, const InvariantBundle& b) {
  out << "k0: " << to_string(b.k0) << "\n";
  out << "unit_class: " << to_string(b.unit_class) << "\n";
  out << "k1_top: " << to_string(b.k1_top) << "\n";
  out << "k1_alg: " << to_string(b.k1_alg) << "\n";
  out << "sing_count: " << b.sing_count << "\n";
  out << "det_sign: " << to_string(b.det_sign) << "\n";
  out << "simple: " << (b.simple ? "true" : "false") << "\n";
  out << "has_cycle: " << (b.has_cycle ? "true" : "false") << "\n";
  out << "infinite_edges: " << (b.infinite_edges ? "true" : "false") << "\n";
}

int morita_exit(MoritaOutcome o) {
  switch (o) {
    case MoritaOutcome::equivalent: return 0;
    case MoritaOutcome::not_equivalent: return 1;
    case MoritaOutcome::open_problem: return 2;
    default: return 3;
  }
}

int iso_exit(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::isomorphic: return 0;
    case IsoOutcome::not_isomorphic: return 1;
    case IsoOutcome::open_problem:
    case IsoOutcome::undecided: return 2;
    default: return 3;
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string body = raw.substr(0, raw.find('#'));
    auto eq = body.find('=');
    std::string key, value;
    std::istringstream ks(body.substr(0, eq == std::string::npos ? body.size() : eq));
    ks >> key;
    if (key.empty()) continue;
    if (eq == std::string::npos) {
      throw input_error("config line " + std::to_string(number) + ": expected `key = value`");
    }
    std::istringstream vs(body.substr(eq + 1));
    long parsed = 0;
    if (!(vs >> parsed)) {
      throw input_error("config line " + std::to_string(number) + ": bad value");
    }
    if (key == "aut_bound") {
      cfg.aut_bound = parsed;
    } else if (key == "iso_vertex_bound") {
      cfg.iso_vertex_bound = int(parsed);
    } else if (key == "search_depth") {
      cfg.search_depth = int(parsed);
    } else if (key == "max_split") {
      cfg.max_split = int(parsed);
    } else {
      throw input_error("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants, moves, and classification for graph algebras"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "bounds configuration file");

  std::string graph_path, graph2_path, script_path, script2_path, matrix_path;
  std::string field_text = "generic";
  bool porcelain = false, transforms = false, check = false;
  int depth = -1, max_split = -1, max_vertices = 5;

  auto* cmd_check = app.add_subcommand("check", "parse a graph and report its structure");
  cmd_check->add_option("graph", graph_path)->required();
  cmd_check->add_flag("--porcelain", porcelain);

  auto* cmd_inv = app.add_subcommand("invariants", "K-theoretic invariant bundle of a graph");
  cmd_inv->add_option("graph", graph_path)->required();
  cmd_inv->add_option("--field", field_text);
  cmd_inv->add_flag("--porcelain", porcelain);

  auto* cmd_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  cmd_snf->add_option("matrix", matrix_path)->required();
  cmd_snf->add_flag("--transforms", transforms);
  cmd_snf->add_flag("--porcelain", porcelain);

  auto* cmd_apply = app.add_subcommand("move-apply", "apply a move script to a graph");
  cmd_apply->add_option("graph", graph_path)->required();
  cmd_apply->add_option("script", script_path)->required();
  cmd_apply->add_flag("--check", check, "verify preserved invariants per step");
  cmd_apply->add_flag("--porcelain", porcelain);

  auto* cmd_bridge =
      app.add_subcommand("verify-bridge", "check two forward scripts meet at one graph");
  cmd_bridge->add_option("graph1", graph_path)->required();
  cmd_bridge->add_option("script1", script_path)->required();
  cmd_bridge->add_option("graph2", graph2_path)->required();
  cmd_bridge->add_option("script2", script2_path)->required();
  cmd_bridge->add_flag("--porcelain", porcelain);

  auto* cmd_classify = app.add_subcommand("classify", "decision procedures");
  auto* cmd_morita = cmd_classify->add_subcommand("morita", "Morita equivalence");
  cmd_morita->add_option("graph1", graph_path)->required();
  cmd_morita->add_option("graph2", graph2_path)->required();
  cmd_morita->add_option("--field", field_text);
  cmd_morita->add_flag("--porcelain", porcelain);
  cmd_morita->add_flag("--via-k1", check, "use the K1 route where sound");
  auto* cmd_iso = cmd_classify->add_subcommand("iso", "ring isomorphism");
  cmd_iso->add_option("graph1", graph_path)->required();
  cmd_iso->add_option("graph2", graph2_path)->required();
  cmd_iso->add_option("--field", field_text);
  cmd_iso->add_flag("--porcelain", porcelain);
  cmd_classify->require_subcommand(1);

  auto* cmd_k2 = app.add_subcommand("k2-status", "torsion status of K2 of the algebra");
  cmd_k2->add_option("graph", graph_path)->required();
  cmd_k2->add_option("--field", field_text);
  cmd_k2->add_flag("--porcelain", porcelain);

  auto* cmd_search =
      app.add_subcommand("search-equiv", "bidirectional search for a move-equivalence bridge");
  cmd_search->add_option("graph1", graph_path)->required();
  cmd_search->add_option("graph2", graph2_path)->required();
  cmd_search->add_option("--depth", depth);
  cmd_search->add_option("--max-split", max_split);
  cmd_search->add_option("--max-vertices", max_vertices);
  cmd_search->add_flag("--porcelain", porcelain);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 4;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = parse_config(slurp(config_path));

    if (*cmd_check) {
      Graph g = load_graph(graph_path);
      auto c = classify_vertices(g);
      SimplicityReport r = simplicity(g);
      out << "vertices: " << g.count() << "\n";
      out << "regular: " << join_names(g, c.regular) << "\n";
      out << "singular: " << join_names(g, c.singular) << "\n";
      out << "sinks: " << join_names(g, c.sinks) << "\n";
      out << "infinite_emitters: " << join_names(g, c.infinite_emitters) << "\n";
      out << "sources: " << join_names(g, c.sources) << "\n";
      out << "cofinal: " << (r.cofinal ? "true" : "false") << "\n";
      out << "condition_L: " << (r.condition_l ? "true" : "false") << "\n";
      out << "sing_reachable: " << (r.singular_reachable ? "true" : "false") << "\n";
      out << "simple: " << (r.simple() ? "true" : "false") << "\n";
      return 0;
    }

    if (*cmd_inv) {
      Graph g = load_graph(graph_path);
      print_invariants(out, invariants(g, parse_field(field_text)));
      return 0;
    }

    if (*cmd_snf) {
      IntMatrix m = parse_matrix(slurp(matrix_path));
      SnfResult s = snf(m);
      out << "d:";
      for (const Int& d : s.d) out << " " << d.str();
      out << "\n";
      if (transforms) {
        out << "u:\n";
        for (int r = 0; r < s.u.rows(); ++r) {
          for (int c = 0; c < s.u.cols(); ++c) out << (c ? " " : "") << s.u.at(r, c).str();
          out << "\n";
        }
        out << "v:\n";
        for (int r = 0; r < s.v.rows(); ++r) {
          for (int c = 0; c < s.v.cols(); ++c) out << (c ? " " : "") << s.v.at(r, c).str();
          out << "\n";
        }
      }
      return 0;
    }

    if (*cmd_apply) {
      Graph g = load_graph(graph_path);
      ApplyResult r = apply_script(g, load_script(script_path), check);
      out << print_graph(r.final);
      return 0;
    }

    if (*cmd_bridge) {
      bool ok = verify_bridge(load_graph(graph_path), load_script(script_path),
                              load_graph(graph2_path), load_script(script2_path),
                              cfg.iso_vertex_bound);
      out << "bridge: " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }

    if (*cmd_morita) {
      Graph g1 = load_graph(graph_path);
      Graph g2 = load_graph(graph2_path);
      FieldDescriptor field = parse_field(field_text);
      MoritaVerdict v = check ? decide_morita_via_k1(g1, g2, field)
                              : decide_morita(g1, g2, field);
      out << "outcome: " << to_string(v.outcome) << "\n";
      out << "reason: " << v.reason() << "\n";
      return morita_exit(v.outcome);
    }

    if (*cmd_iso) {
      IsoVerdict v = decide_isomorphism(load_graph(graph_path), load_graph(graph2_path),
                                        parse_field(field_text), Int(cfg.aut_bound));
      out << "outcome: " << to_string(v.outcome) << "\n";
      out << "reason: " << v.reason() << "\n";
      return iso_exit(v.outcome);
    }

    if (*cmd_k2) {
      out << "k2_status: "
          << to_string(k2_torsion_status(load_graph(graph_path), parse_field(field_text)))
          << "\n";
      return 0;
    }

    if (*cmd_search) {
      SearchBounds bounds;
      bounds.depth = depth > 0 ? depth : cfg.search_depth;
      bounds.max_split = max_split > 0 ? max_split : cfg.max_split;
      bounds.max_vertices = max_vertices;
      SearchResult r =
          search_move_equivalence(load_graph(graph_path), load_graph(graph2_path), bounds);
      if (!r.found) {
        out << "result: NotFoundWithinBounds\n";
        return 2;
      }
      out << "result: Found\n";
      out << "script1:\n" << print_script(r.script1);
      out << "script2:\n" << print_script(r.script2);
      return 0;
    }
  } catch (const move_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  err << "error: no command\n";
  return 4;
}

}  // namespace graphk::cli
