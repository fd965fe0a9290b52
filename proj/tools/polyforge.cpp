// polyforge: exact graph/matroid polynomial calculator and identity verifier.

#include <polyforge/basespoly.hpp>
#include <polyforge/flowchrom.hpp>
#include <polyforge/graph6.hpp>
#include <polyforge/matroid.hpp>
#include <polyforge/orderpoly.hpp>
#include <polyforge/potts.hpp>
#include <polyforge/serialize.hpp>
#include <polyforge/sturm.hpp>
#include <polyforge/tutte.hpp>
#include <polyforge/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace polyforge;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multigraph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  if (format == "graph6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return graph6_decode(line);
    }
    throw std::invalid_argument("no graph6 line in input");
  }
  if (format == "edgelist") return parse_edge_list(text);
  throw std::invalid_argument("unknown graph format: " + format);
}

Digraph load_digraph(const std::string& path) {
  std::string text = read_input(path);
  std::istringstream in(text);
  return parse_digraph(in);
}

WeightMap load_weights(const Multigraph& g, const std::string& path) {
  WeightMap w;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weight file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int id;
    std::string val;
    if (ls >> id >> val) w[id] = parse_rat(val);
  }
  for (const Edge& e : g.edges())
    if (!w.count(e.id))
      throw std::invalid_argument("weight file misses edge " + std::to_string(e.id));
  return w;
}

void emit(const json& j, const std::string& text_form, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_form << "\n";
}

json roots_json(const Poly& f, const Rat& width) {
  json out = json::array();
  for (const auto& [lo, hi] : isolate_real_roots(f, width))
    out.push_back(json{{"lo", to_string(lo)}, {"hi", to_string(hi)}});
  return out;
}

std::string roots_text(const Poly& f, const Rat& width) {
  std::ostringstream ss;
  for (const auto& [lo, hi] : isolate_real_roots(f, width))
    ss << "  real root in (" << to_string(lo) << ", " << to_string(hi) << "]\n";
  std::string s = ss.str();
  if (s.empty()) return "  no real roots";
  s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph and matroid polynomial engine"};
  app.require_subcommand(1);

  std::string input = "-", format = "edgelist";
  bool as_json = false;
  int jobs = 1;
  double timeout = 0;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--jobs", jobs, "worker threads for the census");
  app.add_option("--timeout", timeout, "time budget in seconds for flow computations");

  auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "graph file or - for stdin");
    cmd->add_option("--format", format, "edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
  };

  auto* potts = app.add_subcommand("potts", "Potts partition function Z_G(q,{w_e})");
  std::string weight_file;
  bool uniform = false;
  add_graph_input(potts);
  potts->add_option("--weights", weight_file, "weight file: lines 'edge-id num/den'");
  potts->add_flag("--uniform", uniform, "set every weight to the variable y");

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial with the special-value map");
  add_graph_input(tutte);

  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial");
  bool want_roots = false;
  add_graph_input(chrom);
  chrom->add_flag("--roots", want_roots, "emit exact isolating intervals for real roots");

  auto* flow = app.add_subcommand("flow", "flow polynomial");
  bool use_sweep = false;
  add_graph_input(flow);
  flow->add_flag("--roots", want_roots, "emit exact isolating intervals for real roots");
  flow->add_flag("--sweep", use_sweep,
                 "boundary-partition sweep with interpolation instead of deletion-contraction");

  auto* chr = app.add_subcommand("char", "characteristic polynomial of a matroid");
  bool cocycle = false;
  std::vector<int> uniform_kn;
  add_graph_input(chr);
  chr->add_flag("--cocycle", cocycle, "use the cocycle matroid of the input graph");
  chr->add_option("--uniform", uniform_kn, "k n: use the uniform matroid U_{k,n}")->expected(2);

  auto* order = app.add_subcommand("order", "order polynomial of an acyclic digraph");
  bool strict = false, weak = false;
  add_graph_input(order);
  order->add_flag("--strict", strict, "strictly order-preserving maps");
  order->add_flag("--weak", weak, "weakly order-preserving maps");

  auto* polys = app.add_subcommand("polys", "chi, sigma, w, tau with basis vectors");
  add_graph_input(polys);

  auto* census = app.add_subcommand("census", "sigma/w/tau-unreal census for one order");
  int census_order = 0;
  bool witnesses = false;
  std::string g6file;
  census->add_option("--order", census_order, "graph order")->required();
  census->add_flag("--witnesses", witnesses, "list unreal witnesses in graph6");
  census->add_option("--graph6", g6file, "graph6 file with the connected graphs to scan");

  auto* verify = app.add_subcommand("verify", "run identity suites; exit 0 iff all pass");
  std::string suite = "all";
  int max_order = 6;
  verify->add_option("suite", suite, "all|potts|tutte|flow|order|bases");
  verify->add_option("--max-order", max_order, "largest connected-graph order in the corpus");

  auto* roots_cmd = app.add_subcommand("roots", "exact real-root isolation");
  std::string which_poly = "chromatic";
  std::string width_str = "1/1000000";
  add_graph_input(roots_cmd);
  roots_cmd->add_option("--poly", which_poly, "chromatic|flow|sigma|w|tau");
  roots_cmd->add_option("--width", width_str, "interval width bound, as num/den");

  // let --json/--jobs/--timeout appear after the subcommand name too
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*potts) {
      Multigraph g = load_graph(input, format);
      if (!weight_file.empty()) {
        WeightMap w = load_weights(g, weight_file);
        Poly z = potts_dc(g, w);
        emit(poly_to_json(z), "Z(q) = " + z.str("q"), as_json);
      } else {
        if (!uniform && !as_json)
          std::cerr << "note: no weight file given; using the uniform mode w_e = y\n";
        BiPoly z = potts_dc_uniform(g);
        emit(bipoly_to_json(z), "Z(q,y) = " + z.str("q", "y"), as_json);
      }
    } else if (*tutte) {
      Multigraph g = load_graph(input, format);
      BiPoly t = tutte_dc(g);
      json j{{"tutte", bipoly_to_json(t)}};
      std::string text = "T(x,y) = " + t.str();
      if (g.is_connected()) {
        SpecialValues sv = special_values(g);
        j["special_values"] = json{
            {"spanning_trees", big_to_json(sv.spanning_trees)},
            {"acyclic_orientations", big_to_json(sv.acyclic_orientations)},
            {"totally_cyclic_orientations", big_to_json(sv.totally_cyclic_orientations)},
            {"forests", big_to_json(sv.forests)},
            {"connected_spanning_subgraphs", big_to_json(sv.connected_spanning_subgraphs)},
            {"two_pow_m", big_to_json(sv.two_pow_m)}};
        text += "\nspanning trees: " + sv.spanning_trees.str() +
                "\nacyclic orientations: " + sv.acyclic_orientations.str() +
                "\ntotally cyclic orientations: " + sv.totally_cyclic_orientations.str() +
                "\nspanning forests: " + sv.forests.str() +
                "\nconnected spanning subgraphs: " + sv.connected_spanning_subgraphs.str() +
                "\n2^|E|: " + sv.two_pow_m.str();
      }
      emit(j, text, as_json);
    } else if (*chrom) {
      Multigraph g = load_graph(input, format);
      Poly chi = chromatic_poly(g);
      json j{{"chromatic", poly_to_json(chi)}};
      std::string text = "chi(x) = " + chi.str();
      if (want_roots && !chi.is_zero()) {
        Rat width(1, 1000000);
        j["roots"] = roots_json(chi, width);
        text += "\n" + roots_text(chi, width);
      }
      emit(j, text, as_json);
    } else if (*flow) {
      Multigraph g = load_graph(input, format);
      Poly f;
      if (use_sweep) {
        if (timeout > 0) {
          auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::microseconds(int64_t(timeout * 1e6));
          f = flow_poly_sweep(g, &deadline);
        } else {
          f = flow_poly_sweep(g);
        }
      } else if (timeout > 0) {
        FlowDeadlineGuard guard(timeout);
        f = flow_poly(g);
      } else {
        f = flow_poly(g);
      }
      json j{{"flow", poly_to_json(f)}};
      std::string text = "F(x) = " + f.str();
      if (want_roots && !f.is_zero()) {
        Rat width(1, 1000000);
        j["roots"] = roots_json(f, width);
        text += "\n" + roots_text(f, width);
      }
      emit(j, text, as_json);
    } else if (*chr) {
      Poly c;
      if (!uniform_kn.empty()) {
        c = char_poly_uniform(uniform_kn[0], uniform_kn[1]);
      } else {
        Multigraph g = load_graph(input, format);
        Matroid m = cocycle ? Matroid::cocycle_matroid(g) : Matroid::cycle_matroid(g);
        c = char_poly_subset(m);
      }
      emit(poly_to_json(c), "C(x) = " + c.str(), as_json);
    } else if (*order) {
      if (strict == weak)
        throw std::invalid_argument("choose exactly one of --strict / --weak");
      Digraph d = load_digraph(input);
      OrderPolyResult r = strict ? omega_strict_expansion(d) : omega_weak_expansion(d);
      json j{{"mode", strict ? "strict" : "weak"},
             {"order_polynomial", poly_to_json(r.poly)},
             {"rho_values", r.rho_values}};
      emit(j,
           std::string(strict ? "strict" : "weak") + " order polynomial = " + r.poly.str("k"),
           as_json);
    } else if (*polys) {
      Multigraph g = load_graph(input, format);
      GraphPolys gp = compute_polys(g);
      json j{{"order", gp.p},
             {"chromatic", poly_to_json(gp.chi)},
             {"sigma", poly_to_json(gp.sigma)},
             {"w", poly_to_json(gp.wpoly)},
             {"tau", poly_to_json(gp.tau)},
             {"a_falling", coeff_vector_to_json(gp.a)},
             {"w_shifted_binomial", coeff_vector_to_json(gp.w)},
             {"c_rising_signed", coeff_vector_to_json(gp.c)}};
      emit(j,
           "chi = " + gp.chi.str() + "\nsigma = " + gp.sigma.str() +
               "\nw = " + gp.wpoly.str() + "\ntau = " + gp.tau.str(),
           as_json);
    } else if (*census) {
      CensusRow row;
      if (!g6file.empty()) {
        row = census_from_graphs(census_order, read_graph6_file(g6file), jobs, witnesses);
      } else if (census_order <= 8) {
        row = census_builtin(census_order, jobs, witnesses);
      } else {
        const char* env = std::getenv("POLYFORGE_G9_FILE");
        if (!env)
          throw std::invalid_argument("orders above 8 need --graph6 FILE or POLYFORGE_G9_FILE");
        row = census_from_graphs(census_order, read_graph6_file(env), jobs, witnesses);
      }
      std::ostringstream text;
      text << "order " << row.order << ": scanned " << row.graphs_scanned
           << " connected graphs; sigma-unreal " << row.sigma_unreal << ", w-unreal "
           << row.w_unreal << ", tau-unreal " << row.tau_unreal;
      if (witnesses)
        for (const std::string& wg : row.w_witnesses) text << "\n  w-unreal: " << wg;
      emit(census_to_json(row, witnesses), text.str(), as_json);
    } else if (*verify) {
      std::vector<RunReport> reports;
      if (suite == "all")
        reports = verify_all(max_order);
      else
        reports.push_back(verify_suite(suite, max_order));
      bool ok = true;
      json j = json::array();
      for (const RunReport& r : reports) {
        ok = ok && r.pass();
        std::cout << (r.pass() ? "[pass] " : "[FAIL] ") << r.suite << ": " << r.checks
                  << " checks";
        for (const std::string& n : r.notes) std::cout << " (" << n << ")";
        std::cout << "\n";
        for (const IdentityReport& f : r.failures)
          std::cout << "  failed " << f.identity << " on " << f.instance << ": " << f.detail
                    << "\n";
        j.push_back(json{{"suite", r.suite}, {"checks", r.checks}, {"pass", r.pass()}});
      }
      if (as_json) std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    } else if (*roots_cmd) {
      Multigraph g = load_graph(input, format);
      Poly f;
      if (which_poly == "chromatic")
        f = chromatic_poly(g);
      else if (which_poly == "flow")
        f = flow_poly(g);
      else if (which_poly == "sigma")
        f = sigma_poly(g);
      else if (which_poly == "w")
        f = w_poly(g);
      else if (which_poly == "tau")
        f = tau_poly(g);
      else
        throw std::invalid_argument("unknown polynomial: " + which_poly);
      if (f.is_zero()) {
        emit(json{{"poly", poly_to_json(f)}, {"roots", json::array()}}, "zero polynomial",
             as_json);
      } else {
        Rat width = parse_rat(width_str);
        emit(json{{"poly", poly_to_json(f)}, {"roots", roots_json(f, width)}},
             f.str() + "\n" + roots_text(f, width), as_json);
      }
    }
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
