#include "cmbal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmbal/acceptance.hpp"
#include "cmbal/errors.hpp"
#include "cmbal/graph_classify.hpp"
#include "cmbal/homology.hpp"
#include "cmbal/io.hpp"

namespace cmbal {

namespace {

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::uint64_t seed = kDefaultSeed;
  Json results = Json::object();
  Json checks = Json::array();
  /// Printed verbatim instead of the results in text mode, when set.
  std::string text;

  void check(const std::string& name, bool passed, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
  }

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["passed"].get<bool>(); });
  }
};

struct Context {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = kDefaultSeed;
  int retries = 8;
  Report report;

  std::string load(const std::string& path) {
    std::string bytes = read_file(path);
    report.inputs[path] = sha256_hex(bytes);
    return bytes;
  }
  SimplicialComplex complex(const std::string& path) {
    try {
      return parse_complex_text(load(path));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  Graph graph(const std::string& path) {
    try {
      return parse_graph_text(load(path));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  JoinCover cover(const std::string& path) {
    const std::string bytes = load(path);
    Json parsed;
    try {
      parsed = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    try {
      return parse_cover(parsed);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
};

std::vector<std::int64_t> parse_vector(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not an integer vector: \"" + text + "\"");
    }
  }
  return out;
}

std::string compact(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void print_text(const Report& report, std::ostream& out) {
  if (!report.text.empty()) {
    out << report.text;
  } else {
    for (const auto& [key, value] : report.results.items()) out << key << ": " << compact(value) << "\n";
  }
  for (const auto& c : report.checks) {
    out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    const std::string detail = c["detail"].get<std::string>();
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
  }
}

/// Source of the complex for commands that take either --complex or --graph.
struct ComplexSource {
  std::string complex_path;
  std::string graph_path;
  bool clique = false;

  void add_options(CLI::App* cmd) {
    auto* c = cmd->add_option("--complex", complex_path, "complex file (one facet per line)");
    auto* g = cmd->add_option("--graph", graph_path, "edge list; uses its independence complex");
    cmd->add_flag("--clique", clique, "with --graph, use the clique complex instead");
    c->excludes(g);
  }

  SimplicialComplex load(Context& ctx) const {
    if (!complex_path.empty()) return ctx.complex(complex_path);
    if (!graph_path.empty()) {
      const Graph g = ctx.graph(graph_path);
      return clique ? clique_complex(g) : independence_complex(g);
    }
    throw InputError("one of --complex or --graph is required");
  }
};

Json labels_json(const std::vector<std::string>& labels) { return Json(labels); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face numbers, Cohen–Macaulay tests and balancing witnesses for simplicial complexes", "cmbal"};
  app.require_subcommand(1);
  Context ctx;
  app.add_flag("--json", ctx.json, "print the full JSON report");
  app.add_option("--seed", ctx.seed, "random seed")->capture_default_str();
  app.add_option("--retries", ctx.retries, "extra specializations tried by balance")->capture_default_str();
  app.add_flag("--timing", ctx.timing, "include wall-clock duration in the report");

  std::function<void()> action;

  ComplexSource fv_src;
  auto* fvector = app.add_subcommand("fvector", "f- and h-vector of a complex");
  fv_src.add_options(fvector);
  fvector->callback([&] {
    action = [&] {
      const SimplicialComplex c = fv_src.load(ctx);
      ctx.report.results = face_numbers_json(c);
    };
  });

  ComplexSource hv_src;
  std::string f_text;
  std::string h_text;
  auto* hvector = app.add_subcommand("hvector", "convert between f- and h-vectors");
  hvector->set_help_flag("--help", "Print this help message and exit");
  hv_src.add_options(hvector);
  hvector->add_option("--f", f_text, "comma-separated f-vector starting with f_{-1} = 1");
  hvector->add_option("--h", h_text, "comma-separated h-vector starting with h_0 = 1");
  hvector->callback([&] {
    action = [&] {
      if (!f_text.empty() && !h_text.empty()) throw InputError("give only one of --f and --h");
      if (!f_text.empty()) {
        const FaceVector f{parse_vector(f_text)};
        ctx.report.results = {{"f", f.entries}, {"h", h_from_f(f).entries}};
      } else if (!h_text.empty()) {
        const HVector h{parse_vector(h_text)};
        ctx.report.results = {{"f", f_from_h(h).entries}, {"h", h.entries}};
      } else {
        ctx.report.results = face_numbers_json(hv_src.load(ctx));
      }
    };
  });

  ComplexSource cm_src;
  auto* cm = app.add_subcommand("cm", "Cohen–Macaulay test by Reisner's criterion");
  cm_src.add_options(cm);
  cm->callback([&] {
    action = [&] {
      const SimplicialComplex c = cm_src.load(ctx);
      ctx.report.results = cm_json(is_cohen_macaulay(c));
      ctx.report.results["dim"] = c.dimension();
    };
  });

  ComplexSource hom_src;
  std::vector<std::string> link_face;
  auto* homology = app.add_subcommand("homology", "reduced rational Betti numbers");
  hom_src.add_options(homology);
  homology->add_option("--link", link_face, "compute for the link of this face");
  homology->callback([&] {
    action = [&] {
      SimplicialComplex c = hom_src.load(ctx);
      if (!link_face.empty()) c = link(c, link_face);
      const BettiProfile b = reduced_betti(c);
      ctx.report.results = {{"betti", b.reduced}, {"dim", c.dimension()}, {"f", f_vector(c).entries}};
    };
  });

  std::string bal_complex;
  std::string bal_cover;
  std::string bal_graph;
  auto* balance = app.add_subcommand("balance", "build and verify a balancing witness");
  balance->add_option("--complex", bal_complex, "complex file");
  balance->add_option("--cover", bal_cover, "JSON cover of the complex by a join");
  balance->add_option("--graph", bal_graph, "edge list; balances I(G) over an automatic cover");
  balance->callback([&] {
    action = [&] {
      SimplicialComplex delta;
      JoinCover cover;
      if (!bal_graph.empty()) {
        if (!bal_cover.empty()) throw InputError("--graph builds its own cover; drop --cover");
        const Graph g = ctx.graph(bal_graph);
        const JoinEmbedding embedding = embed_in_join(g);
        delta = bal_complex.empty() ? embedding.complex : ctx.complex(bal_complex);
        cover = embedding.cover;
        ctx.report.results["cover"] = cover_to_json(cover);
      } else {
        if (bal_complex.empty() || bal_cover.empty()) throw InputError("balance needs --complex and --cover, or --graph");
        delta = ctx.complex(bal_complex);
        cover = ctx.cover(bal_cover);
      }
      WitnessOptions options;
      options.seed = ctx.seed;
      options.retries = ctx.retries;
      const BalancedWitness w = balanced_witness(delta, cover, options);
      const Json witness = witness_json(w);
      for (const auto& [key, value] : witness.items()) ctx.report.results[key] = value;
      for (const auto& c : w.checks) ctx.report.check(c.name, c.passed, c.detail);
    };
  });

  std::string cls_graph;
  bool cls_cm = false;
  auto* classify = app.add_subcommand("classify", "classify the components of a graph of girth at least 5");
  classify->add_option("--graph", cls_graph, "edge list")->required();
  classify->add_flag("--cm", cls_cm, "also test the independence complex for Cohen–Macaulayness");
  classify->callback([&] {
    action = [&] {
      const Graph g = ctx.graph(cls_graph);
      Json components = Json::array();
      for (const auto& c : classify_components(g)) {
        Json entry = verdict_json(c.verdict, c.component);
        entry["vertices"] = labels_json(c.labels);
        components.push_back(entry);
      }
      ctx.report.results["components"] = components;
      ctx.report.results["beta"] = beta(g);
      ctx.report.results["well_covered"] = is_well_covered(g);
      if (cls_cm) ctx.report.results["independence_complex"] = cm_json(is_cohen_macaulay(independence_complex(g)));
    };
  });

  std::string cat_name;
  bool cat_list = false;
  auto* catalog = app.add_subcommand("catalog", "edge list of a named graph");
  catalog->add_option("--name", cat_name, "K1, C5, C7, P10, P13, P14, Q13, figure2 or figure4");
  catalog->add_flag("--list", cat_list, "list the known names");
  catalog->callback([&] {
    action = [&] {
      if (cat_list || cat_name.empty()) {
        ctx.report.results["names"] = named_graph_names();
        std::string text;
        for (const auto& n : named_graph_names()) text += n + "\n";
        ctx.report.text = text;
        return;
      }
      const auto g = named_graph(cat_name);
      if (!g) throw InputError("unknown graph name \"" + cat_name + "\"");
      std::ostringstream edges;
      write_graph(edges, *g);
      ctx.report.text = edges.str();
      Json edge_list = Json::array();
      for (const auto& [u, v] : g->label_edges()) edge_list.push_back({u, v});
      ctx.report.results = {{"name", cat_name}, {"vertices", g->labels()}, {"edges", edge_list}};
    };
  });

  std::string emb_graph;
  std::string emb_out;
  auto* embed = app.add_subcommand("embed", "cover I(G) by a join of admissible factors");
  embed->add_option("--graph", emb_graph, "edge list")->required();
  embed->add_option("--write-cover", emb_out, "also write the cover JSON to this file");
  embed->callback([&] {
    action = [&] {
      const Graph g = ctx.graph(emb_graph);
      const JoinEmbedding e = embed_in_join(g);
      ctx.report.results = {{"cover", cover_to_json(e.cover)},
                            {"predicted_beta", e.predicted_beta},
                            {"dim", e.complex.dimension()}};
      ctx.report.check("full_dimensional", e.full_dimensional);
      ctx.report.check("beta_matches", e.beta_matches,
                       "beta = " + std::to_string(beta(g)) + ", predicted " + std::to_string(e.predicted_beta));
      if (!emb_out.empty()) {
        std::ofstream file(emb_out);
        if (!file) throw InputError("cannot write " + emb_out);
        file << cover_to_json(e.cover).dump(2) << "\n";
      }
    };
  });

  ComplexSource tr_src;
  auto* transversal = app.add_subcommand("transversal", "independent set of the 1-skeleton meeting every facet");
  tr_src.add_options(transversal);
  transversal->callback([&] {
    action = [&] {
      const SimplicialComplex c = tr_src.load(ctx);
      const auto t = independent_facet_transversal(c);
      ctx.report.results["transversal"] = t ? Json(c.labels_of(*t)) : Json(nullptr);
      const auto colouring = proper_coloring(c, c.dimension() + 1);
      ctx.report.results["balanced"] = colouring.has_value();
    };
  });

  int tur_n = 7;
  int tur_r = 3;
  auto* turan = app.add_subcommand("turan", "Turán graph T(n,r)");
  turan->add_option("--n", tur_n)->capture_default_str()->check(CLI::Range(1, 64));
  turan->add_option("--r", tur_r)->capture_default_str()->check(CLI::Range(1, 64));
  turan->callback([&] {
    action = [&] {
      const Graph t = turan_graph(tur_n, tur_r);
      ctx.report.results = {{"n", tur_n},
                            {"r", tur_r},
                            {"edges", t.num_edges()},
                            {"triangles", count_triangles(t)},
                            {"has_k4", has_k4(t)}};
      if (tur_r == 3) ctx.report.results["max_k4_free_edges"] = max_k4_free_edges(tur_n);
    };
  });

  std::vector<int> criteria;
  bool verbose = false;
  auto* examples = app.add_subcommand("paper-examples", "replay every acceptance criterion");
  examples->add_option("--criteria", criteria, "run only these criteria")->delimiter(',');
  examples->add_flag("-v,--verbose", verbose, "show every sub-check");
  examples->callback([&] {
    action = [&] {
      std::string text;
      Json list = Json::array();
      for (const auto& r : acceptance::run(criteria, ctx.seed)) {
        text += acceptance::summary_line(r) + "\n";
        for (const auto& note : r.notes) {
          if (verbose || note.rfind("FAILED", 0) == 0) text += "    " + note + "\n";
        }
        Json entry = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"notes", r.notes},
                      {"limit_seconds", r.limit_seconds}};
        if (ctx.timing) entry["seconds"] = r.seconds;
        list.push_back(entry);
        ctx.report.check("criterion " + std::to_string(r.id), r.passed, r.title);
      }
      ctx.report.results["criteria"] = list;
      ctx.report.text = text;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream command;
  for (std::size_t i = 0; i < args.size(); ++i) command << (i ? " " : "") << args[i];
  ctx.report.command = command.str();
  ctx.report.seed = ctx.seed;

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    action();
    code = ctx.report.passed() ? 0 : 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  }

  if (ctx.json) {
    Json report = {{"command", ctx.report.command},
                   {"inputs", ctx.report.inputs},
                   {"seed", ctx.report.seed},
                   {"results", ctx.report.results},
                   {"checks", ctx.report.checks},
                   {"ok", code == 0}};
    if (ctx.timing) {
      report["duration_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out << report.dump(2) << "\n";
  } else {
    print_text(ctx.report, out);
  }
  return code;
}

}  // namespace cmbal
