#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bimoore/bimoore.hpp"

namespace {

using namespace bimoore;

// 0 success, 1 verification failure, 2 usage error, 3 resource limit.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::too_large:
    case Errc::work_limit:
      return 3;
    case Errc::bad_input:
    case Errc::parse_error:
    case Errc::needs_input:
    case Errc::too_small:
    case Errc::unsupported_order:
    case Errc::unsupported_residue:
    case Errc::bad_multiplicity:
      return 2;
    default:
      return 1;
  }
}

LoadedGraph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_input, "cannot open " + path);
  return read_graph(in);
}

BipartiteGraph load_base(const std::string& ref) {
  auto names = known_constructions();
  if (std::find(names.begin(), names.end(), ref) != names.end())
    return build_named(ref, {});
  return load_graph(ref).graph;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::bad_input, "cannot open " + path + " for writing");
  f(out);
}

void write_graph(std::ostream& os, const BipartiteGraph& g, const std::string& format,
                 const Provenance* prov, const std::string& dot_name) {
  if (format == "graph6")
    write_graph6_file(os, g, prov);
  else if (format == "adj")
    write_biadjacency(os, g);
  else if (format == "dot")
    os << to_dot(g, dot_name);
  else
    throw Error(Errc::bad_input, "unknown format: " + format);
}

std::uint64_t default_work_limit() {
  if (const char* env = std::getenv("BIMOORE_WORK_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && *env != '\0') return v;
  }
  return kDefaultEnumWorkLimit;
}

struct BoundsArgs {
  int d = 0, max = 0, r_max = 0, s_max = 0, r = 0, s = 0;
  std::string format = "text", out;
};

int run_bounds(const BoundsArgs& a) {
  if (a.r > 0 && a.s > 0) {
    Params p(a.r, a.s, a.d);
    BoundResult b = best_bound(p);
    std::cout << "[" << a.r << "," << a.s << ";" << a.d << "]  regime "
              << regime_name(b.regime) << "\n";
    std::cout << "n1 <= " << b.n1_max << "  n2 <= " << b.n2_max << "\n";
    if (p.odd_diameter() && p.r > p.s)
      std::cout << "tree caps N1' = " << b.n1_raw << "  N2' = " << b.n2_raw
                << "  t = " << b.t << "\n";
    std::cout << "total: " << b.total;
    if (b.regime == Regime::odd_improved) std::cout << " (was " << b.plain_total << ")";
    std::cout << "\n";
    return 0;
  }
  int r_hi = a.r_max > 0 ? a.r_max : a.max;
  int s_hi = a.s_max > 0 ? a.s_max : (a.max > 0 ? a.max : r_hi);
  if (r_hi < 2) throw Error(Errc::bad_input, "need --max (or --r-max/--s-max) >= 2");
  BoundTable table = emit_bound_table(a.d, 2, r_hi, 2, std::min(s_hi, r_hi));
  with_output(a.out, [&](std::ostream& os) {
    os << (a.format == "csv" ? render_bound_table_csv(table)
                             : render_bound_table_text(table));
  });
  return 0;
}

struct ConstructArgs {
  std::string name;
  std::vector<int> params;
  std::string of, out, format = "graph6", hexagon;
  int k = 2, side = 1;
  bool no_check = false;
};

int run_construct(const ConstructArgs& a) {
  BipartiteGraph g(0, 0);
  std::optional<Provenance> prov;
  if (a.name == "subdivision" || a.name == "semi-double" || a.name == "k-tuple") {
    if (a.of.empty())
      throw Error(Errc::needs_input, a.name + " needs --of BASE (registry name or file)");
    BipartiteGraph base = load_base(a.of);
    Provenance p;
    p.kind = a.name;
    p.base = base;
    if (a.name == "subdivision") {
      auto bireg = is_biregular(base);
      g = subdivision(base);
      p.r = bireg ? bireg->first : 0;
    } else if (a.name == "semi-double") {
      g = semi_double(base, a.side);
      p.k = 2;
      p.side = a.side;
    } else {
      g = k_tuple(base, a.side, a.k);
      p.k = a.k;
      p.side = a.side;
    }
    prov = std::move(p);
  } else {
    std::optional<BipartiteGraph> external;
    if (!a.hexagon.empty()) external = load_graph(a.hexagon).graph;
    g = build_named(a.name, a.params, external ? &*external : nullptr);
    if (!a.no_check) {
      if (auto expected = expected_for(a.name, a.params)) {
        auto bad = check_expected(g, *expected);
        if (!bad.empty()) {
          for (const auto& line : bad)
            std::cerr << "expectation failed: " << line << "\n";
          return 1;
        }
      }
    }
  }
  with_output(a.out, [&](std::ostream& os) {
    write_graph(os, g, a.format, prov ? &*prov : nullptr, a.name);
  });
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::vector<int> expect;
};

int run_verify(const VerifyArgs& a) {
  LoadedGraph lg = load_graph(a.file);
  const BipartiteGraph& g = lg.graph;
  GraphMetrics m = metrics(g);
  std::cout << "order: " << g.order() << "  (sides " << g.n1() << " + " << g.n2()
            << ")\n";
  auto bireg = is_biregular(g);
  if (bireg) {
    std::cout << "degrees: biregular (" << bireg->first << "," << bireg->second
              << ")\n";
  } else {
    auto [d1, d2] = degrees(g);
    auto show = [](const std::vector<int>& v) {
      std::ostringstream os;
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      return os.str();
    };
    std::cout << "degrees: irregular; side 1 [" << show(d1) << "], side 2 ["
              << show(d2) << "]\n";
  }
  std::cout << "connected: " << (m.connected ? "yes" : "no") << "\n";
  std::cout << "diameter: "
            << (m.diameter ? std::to_string(*m.diameter) : std::string("infinite"))
            << "\n";
  std::cout << "girth: " << (m.girth ? std::to_string(*m.girth) : std::string("acyclic"))
            << "\n";
  if (a.expect.empty()) return 0;

  int r = a.expect[0], s = a.expect[1], d = a.expect[2];
  Params p(r, s, d);
  BoundResult b = best_bound(p);
  std::cout << "moore bound [" << r << "," << s << ";" << d << "]: " << b.total
            << " (" << regime_name(b.regime) << ")\n";
  Int def = b.total - g.order();
  std::cout << "defect: " << def << "\n";

  std::vector<std::string> fails;
  if (!matches_degrees(g, r, s))
    fails.push_back("graph is not (" + std::to_string(r) + "," + std::to_string(s) +
                    ")-biregular");
  if (!m.diameter || *m.diameter != d)
    fails.push_back("diameter is not " + std::to_string(d));
  if (p.odd_diameter() && r > s) {
    if (def == 0 && fails.empty()) {
      int cap = 2 * d - 2;
      bool ok = m.girth && *m.girth <= cap;
      std::cout << "girth cap " << cap << " (odd diameter, bound attained): "
                << (ok ? "satisfied" : "VIOLATED") << "\n";
      if (!ok) fails.push_back("girth exceeds the odd-diameter cap");
    } else {
      std::cout << "girth cap: not applicable (bound not attained)\n";
    }
  }
  for (const auto& f : fails) std::cout << "FAIL: " << f << "\n";
  if (!fails.empty()) return 1;
  std::cout << "OK\n";
  return 0;
}

struct SpectrumArgs {
  std::string file = "-", check;
  bool factored = false;
};

int run_spectrum(const SpectrumArgs& a) {
  LoadedGraph lg = load_graph(a.file);
  IntPolynomial phi = char_poly(lg.graph);
  std::cout << "phi = " << to_string(phi) << "\n";
  std::cout << "coeffs (low to high) = " << coeff_list_string(phi) << "\n";
  if (a.factored) std::cout << "factored: " << factored_string(phi) << "\n";
  if (a.check.empty()) return 0;

  if (!lg.provenance || !lg.provenance->base)
    throw Error(Errc::needs_input,
                "--check needs the #provenance/#base headers that construct emits");
  const Provenance& pv = *lg.provenance;
  auto family = [](const std::string& k) {
    return k == "semi-double" ? std::string("k-tuple") : k;
  };
  if (a.check != "auto" && family(a.check) != family(pv.kind))
    throw Error(Errc::bad_input, "recorded provenance is '" + pv.kind + "'");

  IdentityCheck chk;
  std::string description;
  if (pv.kind == "subdivision") {
    chk = check_subdivision_identity(*pv.base, pv.r);
    description = "phi_S(x) = x^(m-n) phi_G(x^2 - r)";
  } else {
    int k = pv.kind == "semi-double" ? 2 : pv.k;
    chk = check_ktuple_identity(*pv.base, pv.side, k);
    description = "phi_kG(x) = x^((k-1)n_side) sum_j a_j k^((n-j)/2) x^j";
  }
  if (phi != chk.lhs)
    throw Error(Errc::param_mismatch,
                "graph spectrum does not match its recorded provenance");
  if (chk.holds) {
    std::cout << "identity holds: " << description << "\n";
    return 0;
  }
  std::cout << "identity FAILS at x^" << *chk.first_mismatch_power << ": lhs "
            << to_string(chk.lhs) << " vs rhs " << to_string(chk.rhs) << "\n";
  return 1;
}

struct EnumArgs {
  int r = 0, s = 0, d = 0, n1 = 0, n2 = 0, threads = 1, max_reps = 8;
  std::uint64_t limit = 0;
  bool limit_given = false, exhaustive = false;
  std::string emit_dir, checkpoint;
};

void emit_representatives(const std::string& dir, const EnumArgs& a,
                          const EnumReport& rep) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (std::size_t i = 0; i < rep.representatives.size(); ++i) {
    std::ostringstream name;
    name << "census_" << a.r << "_" << a.s << "_" << a.d << "_n"
         << (rep.n1 + rep.n2) << "_" << i << ".g6";
    std::ofstream out(fs::path(dir) / name.str());
    write_graph6_file(out, rep.representatives[i]);
  }
}

void print_report_row(const EnumReport& rep, int d) {
  std::cout << "t=" << rep.t << "  (" << rep.n1 << "," << rep.n2 << ")  n="
            << (rep.n1 + rep.n2) << ": " << rep.generated << " generated, "
            << rep.with_diameter << " with diameter " << d;
  if (rep.incomplete) std::cout << "  [INCOMPLETE]";
  std::cout << "  [" << std::fixed << std::setprecision(2) << rep.elapsed_seconds
            << "s]\n";
}

int run_enumerate(const EnumArgs& a) {
  EnumOptions opts;
  opts.work_limit = a.exhaustive ? 0 : (a.limit_given ? a.limit : default_work_limit());
  opts.threads = a.threads;
  opts.max_representatives = a.max_reps;
  std::ifstream resume_in;
  std::ofstream ckpt_out;
  if (!a.checkpoint.empty()) {
    resume_in.open(a.checkpoint);
    if (resume_in) opts.resume = &resume_in;
    ckpt_out.open(a.checkpoint, std::ios::app);
    if (!ckpt_out)
      throw Error(Errc::bad_input, "cannot open checkpoint file " + a.checkpoint);
    opts.checkpoint = &ckpt_out;
  }

  std::vector<EnumReport> reports;
  if (a.n1 > 0 || a.n2 > 0) {
    if (a.n1 <= 0 || a.n2 <= 0)
      throw Error(Errc::bad_input, "--n1 and --n2 must be given together");
    EnumSpec spec(a.n1, a.n2, a.r, a.s, a.d);
    EnumReport rep;
    rep.n1 = a.n1;
    rep.n2 = a.n2;
    auto t0 = std::chrono::steady_clock::now();
    auto sink = [&](const BipartiteGraph& g) {
      if (detail::packed_diameter(g, a.d) != a.d) return false;
      if (static_cast<int>(rep.representatives.size()) < opts.max_representatives)
        rep.representatives.push_back(g);
      return true;
    };
    GenerateResult res = generate(spec, opts, sink);
    rep.generated = res.generated;
    rep.with_diameter = res.aux;
    rep.incomplete = res.incomplete;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    reports.push_back(std::move(rep));
  } else {
    reports = census(a.r, a.s, a.d, opts);
  }

  bool incomplete = false;
  for (const auto& rep : reports) {
    print_report_row(rep, a.d);
    incomplete = incomplete || rep.incomplete;
    if (!a.emit_dir.empty()) emit_representatives(a.emit_dir, a, rep);
  }
  if (!reports.empty()) {
    const EnumReport& last = reports.back();
    std::cout << last.generated << " generated, " << last.with_diameter
              << " with diameter " << a.d << "\n";
  }
  return incomplete ? 3 : 0;
}

struct ExportArgs {
  std::string file, format, out;
};

int run_export(const ExportArgs& a) {
  LoadedGraph lg = load_graph(a.file);
  with_output(a.out, [&](std::ostream& os) {
    write_graph(os, lg.graph, a.format,
                lg.provenance ? &*lg.provenance : nullptr, "G");
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moore bounds, constructions, spectra, and isomorph-free census "
               "runs for bipartite biregular graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  BoundsArgs bounds_args;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Render a Moore bound table, or one bound in detail");
  bounds_cmd->add_option("--d", bounds_args.d, "diameter")->required();
  bounds_cmd->add_option("--max", bounds_args.max, "largest degree in the grid");
  bounds_cmd->add_option("--r-max", bounds_args.r_max, "largest r (overrides --max)");
  bounds_cmd->add_option("--s-max", bounds_args.s_max, "largest s (overrides --max)");
  bounds_cmd->add_option("--r", bounds_args.r, "single bound: degree r");
  bounds_cmd->add_option("--s", bounds_args.s, "single bound: degree s (<= r)");
  bounds_cmd->add_option("--format", bounds_args.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  bounds_cmd->add_option("--out", bounds_args.out, "output file (default stdout)");
  bounds_cmd->callback([&] { action = [&] { return run_bounds(bounds_args); }; });

  ConstructArgs construct_args;
  auto* construct_cmd =
      app.add_subcommand("construct", "Build a graph family or apply a transform");
  construct_cmd->add_option("name", construct_args.name,
                            "family, registry entry, or transform "
                            "(subdivision, semi-double, k-tuple)")
      ->required();
  construct_cmd->add_option("params", construct_args.params, "integer parameters");
  construct_cmd->add_option("--of", construct_args.of,
                            "base graph for transforms: registry name or file");
  construct_cmd->add_option("--k", construct_args.k, "multiplicity for k-tuple");
  construct_cmd->add_option("--side", construct_args.side, "side to clone (1 or 2)");
  construct_cmd->add_option("--hexagon", construct_args.hexagon,
                            "externally supplied Moore bipartite graph file for "
                            "d=6 recipes");
  construct_cmd->add_option("--format", construct_args.format, "graph6, adj, or dot")
      ->check(CLI::IsMember({"graph6", "adj", "dot"}));
  construct_cmd->add_option("--out", construct_args.out, "output file (default stdout)");
  construct_cmd->add_flag("--no-check", construct_args.no_check,
                          "skip closed-form expectation checks");
  construct_cmd->callback([&] { action = [&] { return run_construct(construct_args); }; });

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Report a graph's parameters and check them against [r,s;d]");
  verify_cmd->add_option("file", verify_args.file, "graph file, or - for stdin")
      ->required();
  verify_cmd->add_option("--expect", verify_args.expect, "r s d with r >= s >= 2")
      ->expected(3);
  verify_cmd->callback([&] { action = [&] { return run_verify(verify_args); }; });

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Exact characteristic polynomial; optional identity check");
  spectrum_cmd->add_option("file", spectrum_args.file, "graph file, or - for stdin");
  spectrum_cmd->add_option("--check", spectrum_args.check,
                           "verify the spectral identity recorded in the file's "
                           "provenance")
      ->check(CLI::IsMember({"auto", "subdivision", "semi-double", "k-tuple"}));
  spectrum_cmd->add_flag("--factored", spectrum_args.factored,
                         "also print a factored form");
  spectrum_cmd->callback([&] { action = [&] { return run_spectrum(spectrum_args); }; });

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "Isomorph-free census down the Moore ladder, or at fixed sides");
  enum_cmd->add_option("r", enum_args.r, "side-1 degree")->required();
  enum_cmd->add_option("s", enum_args.s, "side-2 degree")->required();
  enum_cmd->add_option("d", enum_args.d, "diameter to count")->required();
  enum_cmd->add_option("--n1", enum_args.n1, "fix side-1 size (with --n2)");
  enum_cmd->add_option("--n2", enum_args.n2, "fix side-2 size (with --n1)");
  auto* limit_opt = enum_cmd->add_option(
      "--limit", enum_args.limit,
      "work limit in row placements (default $BIMOORE_WORK_LIMIT or built-in)");
  enum_cmd->add_flag("--exhaustive", enum_args.exhaustive, "no work limit");
  enum_cmd->add_option("--threads", enum_args.threads, "worker threads");
  enum_cmd->add_option("--max-reps", enum_args.max_reps,
                       "representatives kept per census row");
  enum_cmd->add_option("--emit", enum_args.emit_dir,
                       "write representatives as graph6 files into this directory");
  enum_cmd->add_option("--checkpoint", enum_args.checkpoint,
                       "resume from and append completed-prefix lines to this file");
  enum_cmd->callback([&] {
    enum_args.limit_given = limit_opt->count() > 0;
    action = [&] { return run_enumerate(enum_args); };
  });

  ExportArgs export_args;
  auto* export_cmd =
      app.add_subcommand("export", "Convert a graph file between formats");
  export_cmd->add_option("file", export_args.file, "graph file, or - for stdin")
      ->required();
  export_cmd->add_option("--format", export_args.format, "graph6, adj, or dot")
      ->required()
      ->check(CLI::IsMember({"graph6", "adj", "dot"}));
  export_cmd->add_option("--out", export_args.out, "output file (default stdout)");
  export_cmd->callback([&] { action = [&] { return run_export(export_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
