// vnumkit: exact v-number computations for monomial ideals and edge ideals
// of clutters, with the decomposition, polarization, and Stanley-Reisner
// homology machinery behind them.
//
// Exit codes: 0 success, 1 usage or input error, 2 verify violations
// (implementation-level failures), 3 findings only (open-question data).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vnumkit/vnumkit.hpp"

namespace {

using namespace vnumkit;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct InputArgs {
  std::string ideal_path;
  std::string graph_path;
  std::string clutter_path;

  void attach(CLI::App* cmd, bool ideal = true, bool graph = true, bool clutter = true) {
    if (ideal) cmd->add_option("--ideal", ideal_path, "ideal file (text grammar), '-' for stdin");
    if (graph) cmd->add_option("--graph", graph_path, "graph JSON file, '-' for stdin");
    if (clutter) cmd->add_option("--clutter", clutter_path, "clutter JSON file, '-' for stdin");
  }

  int provided() const {
    return (ideal_path.empty() ? 0 : 1) + (graph_path.empty() ? 0 : 1) +
           (clutter_path.empty() ? 0 : 1);
  }
};

struct LoadedInstance {
  MonomialIdeal ideal;
  std::optional<Clutter> clutter;  // set for graph/clutter inputs and square-free ideals
  bool graph_input = false;
  bool warned_nonminimal = false;
};

LoadedInstance load(const InputArgs& in) {
  if (in.provided() != 1)
    throw std::runtime_error("provide exactly one of --ideal, --graph, --clutter");
  if (!in.ideal_path.empty()) {
    auto parsed = parse_ideal(read_input(in.ideal_path));
    LoadedInstance li{parsed.ideal, std::nullopt, false, !parsed.minimal_input};
    if (li.warned_nonminimal)
      std::cerr << "warning: input generators were not minimal; minimalized\n";
    if (parsed.ideal.is_proper() && parsed.ideal.is_squarefree())
      li.clutter = clutter_of(parsed.ideal);
    return li;
  }
  if (!in.graph_path.empty()) {
    Graph g = parse_graph_json(read_input(in.graph_path));
    return LoadedInstance{edge_ideal(g), g.to_clutter(), true, false};
  }
  Clutter c = parse_clutter_json(read_input(in.clutter_path));
  return LoadedInstance{edge_ideal(c), c, false, false};
}

void emit(const Json& j, bool json_mode) {
  if (json_mode) {
    std::cout << j.dump() << "\n";
    return;
  }
  // Human-readable: one "key: value" line per top-level field.
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << value.dump() << "\n";
}

std::vector<int> parse_vertex_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok) - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact v-numbers of monomial ideals, with decomposition, polarization,\n"
               "clutter invariants, and Stanley-Reisner homology"};
  app.set_version_flag("--version", std::string("vnumkit ") + vnumkit::version);
  app.require_subcommand(1);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable JSON output");

  std::int64_t field_char = 0;
  app.add_option("--field", field_char, "coefficient field characteristic: 0 or a prime");

  int exit_code = 0;

  // ---- vnum ----------------------------------------------------------------
  auto* vnum = app.add_subcommand("vnum", "v-number of an ideal, graph, or clutter");
  InputArgs vnum_in;
  vnum_in.attach(vnum);
  std::string vnum_method = "auto";
  vnum->add_option("--method", vnum_method, "auto|definition|squarefree|polarization|alpha")
      ->check(CLI::IsMember({"auto", "definition", "squarefree", "polarization", "alpha"}));
  std::string vnum_local;
  vnum->add_option("--local", vnum_local, "comma-separated 1-based prime support for v_p");
  vnum->callback([&]() {
    auto li = load(vnum_in);
    Json out;
    if (!vnum_local.empty()) {
      PrimeSupport p(parse_vertex_list(vnum_local));
      if (li.clutter) {
        auto w = v_local_squarefree(*li.clutter, p);
        out["v_local"] = w.degree;
        out["witness"] = format_monomial(li.ideal.ring(), w.f);
      } else {
        out["v_local"] = v_number_local(li.ideal, p);
        out["witness"] = format_monomial(li.ideal.ring(), witness_for_prime(li.ideal, p));
      }
      out["prime"] = prime_to_json(p);
      emit(out, json_mode);
      return;
    }
    std::string method = vnum_method;
    if (method == "auto") method = li.clutter ? "squarefree" : "definition";
    if (method == "definition") {
      auto w = v_number_definition(li.ideal);
      out["v"] = w.degree;
      out["witness"] = format_monomial(li.ideal.ring(), w.f);
      out["prime"] = prime_to_json(w.prime);
    } else if (method == "squarefree") {
      if (!li.clutter) throw std::runtime_error("--method squarefree requires a square-free input");
      auto w = v_number_squarefree(*li.clutter);
      out["v"] = w.degree;
      out["witness"] = format_monomial(li.ideal.ring(), w.f);
      out["prime"] = prime_to_json(w.prime);
    } else if (method == "polarization") {
      auto [ip, ctx] = polarize_ideal(li.ideal);
      auto w = v_number_squarefree(clutter_of(ip));
      out["v"] = w.degree;
      out["witness"] = format_monomial(ctx.target, w.f);
      out["prime"] = prime_to_json(w.prime);
      out["note"] = "value is v(I(pol)); equals v(I) when no embedded prime";
    } else {  // alpha
      Exponent best = -1;
      for (const auto& p : associated_primes(li.ideal).primes) {
        Exponent a = alpha_quotient(li.ideal, p);
        if (best < 0 || a < best) best = a;
      }
      out["v"] = best;
      out["witness"] = nullptr;
      out["prime"] = nullptr;
    }
    out["method"] = method;
    emit(out, json_mode);
  });

  // ---- ass / decomp ----------------------------------------------------------
  auto* ass = app.add_subcommand("ass", "associated primes, minimal and embedded");
  InputArgs ass_in;
  ass_in.attach(ass);
  ass->callback([&]() {
    auto li = load(ass_in);
    auto report = associated_primes(li.ideal);
    Json out;
    Json primes = Json::array();
    for (const auto& p : report.primes) primes.push_back(prime_to_json(p));
    Json embedded = Json::array();
    for (const auto& p : report.embedded) embedded.push_back(prime_to_json(p));
    out["primes"] = primes;
    out["embedded"] = embedded;
    emit(out, json_mode);
  });

  auto* decomp = app.add_subcommand("decomp", "irredundant irreducible decomposition");
  InputArgs decomp_in;
  decomp_in.attach(decomp);
  decomp->callback([&]() {
    auto li = load(decomp_in);
    auto comps = irreducible_decomposition(li.ideal);
    Json out;
    Json arr = Json::array();
    for (const auto& c : comps) {
      Json one = Json::array();
      for (auto [v, e] : c.pure_powers) one.push_back(Json::array({v + 1, e}));
      arr.push_back(one);
    }
    out["components"] = arr;
    emit(out, json_mode);
  });

  // ---- pol -------------------------------------------------------------------
  auto* pol = app.add_subcommand("pol", "polarization of a monomial ideal");
  InputArgs pol_in;
  pol_in.attach(pol, true, false, false);
  pol->callback([&]() {
    auto li = load(pol_in);
    auto [ip, ctx] = polarize_ideal(li.ideal);
    Json out;
    out["ring"] = ctx.target.names;
    Json gens = Json::array();
    for (const auto& g : ip.generators()) gens.push_back(format_monomial(ctx.target, g));
    out["generators"] = gens;
    Json map = Json::array();
    for (std::size_t pos = 0; pos < ctx.slot_of.size(); ++pos)
      map.push_back(Json::array(
          {ctx.slot_of[pos].first + 1, ctx.slot_of[pos].second + 1, static_cast<int>(pos) + 1}));
    out["index_map"] = map;
    emit(out, json_mode);
  });

  // ---- clutter/graph invariants ----------------------------------------------
  auto* im = app.add_subcommand("im", "induced matching number (graphs) or weight (clutters)");
  InputArgs im_in;
  im_in.attach(im, false, true, true);
  im->callback([&]() {
    auto li = load(im_in);
    Json out;
    if (li.graph_input)
      out["im"] = induced_matching_number(Graph::from_clutter(*li.clutter));
    else
      out["induced_matching_weight"] = induced_matching_weight(*li.clutter);
    emit(out, json_mode);
  });

  auto* alpha0 = app.add_subcommand("alpha0", "covering and independence numbers");
  InputArgs alpha0_in;
  alpha0_in.attach(alpha0, false, true, true);
  alpha0->callback([&]() {
    auto li = load(alpha0_in);
    auto cov = cover_numbers(*li.clutter);
    Json out;
    out["alpha0"] = cov.alpha0;
    out["beta0"] = cov.beta0;
    Json covers = Json::array();
    for (VertexSet c : cov.minimal_covers)
      covers.push_back(detail::vertex_set_to_json(c));
    out["covers"] = covers;
    emit(out, json_mode);
  });

  auto* dual = app.add_subcommand("dual", "Alexander dual of a square-free ideal");
  InputArgs dual_in;
  dual_in.attach(dual);
  dual->callback([&]() {
    auto li = load(dual_in);
    if (!li.clutter) throw std::runtime_error("dual requires a square-free input");
    auto d = alexander_dual(li.ideal);
    Json out;
    Json gens = Json::array();
    for (const auto& g : d.generators()) gens.push_back(format_monomial(d.ring(), g));
    out["generators"] = gens;
    emit(out, json_mode);
  });

  auto* lg = app.add_subcommand("linegraph", "line graph L(G)");
  InputArgs lg_in;
  lg_in.attach(lg, false, true, false);
  lg->callback([&]() {
    auto li = load(lg_in);
    emit(graph_to_json(line_graph(Graph::from_clutter(*li.clutter))), json_mode);
  });

  auto* wh = app.add_subcommand("whisker", "whisker graph W_G");
  InputArgs wh_in;
  wh_in.attach(wh, false, true, false);
  wh->callback([&]() {
    auto li = load(wh_in);
    emit(graph_to_json(whisker(Graph::from_clutter(*li.clutter))), json_mode);
  });

  auto* susp = app.add_subcommand("suspend", "S-suspension G^S");
  InputArgs susp_in;
  susp_in.attach(susp, false, true, false);
  std::string susp_s;
  susp->add_option("--s", susp_s, "comma-separated 1-based stable set S (may be empty)");
  susp->callback([&]() {
    auto li = load(susp_in);
    VertexSet s = 0;
    for (int v : parse_vertex_list(susp_s)) s |= detail::bit(v);
    emit(graph_to_json(s_suspension(Graph::from_clutter(*li.clutter), s)), json_mode);
  });

  // ---- homology ---------------------------------------------------------------
  auto add_homology_cmd = [&](const char* name, const char* desc, auto compute) {
    auto* cmd = app.add_subcommand(name, desc);
    auto in = std::make_shared<InputArgs>();
    in->attach(cmd);
    cmd->callback([&, in, compute, name]() {
      auto li = load(*in);
      Json out;
      out[name] = compute(li.ideal, FieldChoice(field_char));
      emit(out, json_mode);
    });
  };
  add_homology_cmd("reg", "Castelnuovo-Mumford regularity of R/I",
                   [](const MonomialIdeal& I, FieldChoice f) { return regularity(I, f); });
  add_homology_cmd("pd", "projective dimension of R/I",
                   [](const MonomialIdeal& I, FieldChoice f) { return projective_dimension(I, f); });
  add_homology_cmd("depth", "depth of R/I",
                   [](const MonomialIdeal& I, FieldChoice f) { return depth(I, f); });

  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay test");
  InputArgs cm_in;
  cm_in.attach(cm);
  cm->callback([&]() {
    auto li = load(cm_in);
    Json out;
    out["cohen_macaulay"] = is_cohen_macaulay(li.ideal, FieldChoice(field_char));
    out["depth"] = depth(li.ideal, FieldChoice(field_char));
    out["dim"] = krull_dim(li.ideal);
    emit(out, json_mode);
  });

  auto* betti = app.add_subcommand("betti", "graded Betti table of R/I");
  InputArgs betti_in;
  betti_in.attach(betti);
  betti->callback([&]() {
    auto li = load(betti_in);
    MonomialIdeal target = li.ideal.is_squarefree() ? li.ideal : polarize_ideal(li.ideal).first;
    auto table = betti_table(target, FieldChoice(field_char));
    Json out;
    Json rows = Json::array();
    for (const auto& [ij, rank] : table.entries) {
      Json row;
      row["i"] = ij.first;
      row["j"] = ij.second;
      row["rank"] = rank;
      rows.push_back(row);
    }
    out["table"] = rows;
    out["field"] = field_char;
    emit(out, json_mode);
  });

  // ---- report -----------------------------------------------------------------
  auto* rep = app.add_subcommand("report", "all invariants of one instance");
  InputArgs rep_in;
  rep_in.attach(rep);
  rep->callback([&]() {
    auto li = load(rep_in);
    Json out = li.clutter ? report_for_clutter(*li.clutter, li.graph_input)
                          : report_for_ideal(li.ideal);
    emit(out, json_mode);
  });

  // ---- verify -----------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run the full invariant checklist");
  std::string ver_level = "small";
  std::uint64_t ver_seed = 0;
  ver->add_option("--level", ver_level, "small|wide")->check(CLI::IsMember({"small", "wide"}));
  ver->add_option("--seed", ver_seed, "random seed");
  ver->callback([&]() {
    auto report = verify_suite(ver_level == "small" ? VerifyLevel::small : VerifyLevel::wide,
                               ver_seed);
    if (json_mode) {
      std::cout << report.to_json().dump() << "\n";
    } else {
      for (const auto& c : report.checks)
        std::cout << (c.violations ? "FAIL " : "ok   ") << c.name << "  [" << c.instances
                  << " instances, " << c.violations << " violations, " << c.findings
                  << " findings]\n";
      std::cout << (report.pass ? "PASS" : "FAIL") << " (" << report.violations_total
                << " violations, " << report.findings_total << " findings)\n";
    }
    if (!report.pass)
      exit_code = 2;
    else if (report.findings_total > 0)
      exit_code = 3;
  });

  // ---- survey -----------------------------------------------------------------
  auto* sur = app.add_subcommand("survey", "randomized open-question survey");
  SurveyConfig cfg;
  std::string sur_class = "connected-graph";
  std::string sur_emit = "all";
  sur->add_option("--class", sur_class,
                  "graph|bipartite|chordal|connected-graph|clutter|monomial-ideal");
  sur->add_option("--n-min", cfg.n_min, "minimum vertex/variable count");
  sur->add_option("--n-max", cfg.n_max, "maximum vertex/variable count");
  sur->add_option("--density", cfg.density, "edge density in [0,1]");
  sur->add_option("--max-exp", cfg.max_exp, "exponent cap (monomial-ideal class)");
  sur->add_option("--max-gens", cfg.max_gens, "generator cap (monomial-ideal class)");
  sur->add_option("--trials", cfg.trials, "number of instances");
  sur->add_option("--seed", cfg.seed, "random seed");
  sur->add_option("--emit", sur_emit, "all|findings")->check(CLI::IsMember({"all", "findings"}));
  sur->callback([&]() {
    cfg.cls = instance_class_from_string(sur_class);
    cfg.emit_all = sur_emit == "all";
    auto result = survey(cfg);
    if (json_mode) {
      Json out;
      Json records = Json::array();
      for (const auto& r : result.records) {
        Json rec;
        rec["trial"] = r.trial;
        rec["instance"] = r.instance;
        rec["invariants"] = r.invariants;
        rec["questions"] = r.questions;
        rec["finding"] = r.finding;
        records.push_back(rec);
      }
      out["records"] = records;
      out["aggregate"] = result.aggregate;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << result.aggregate.dump(2) << "\n";
    }
    if (result.findings > 0) exit_code = 3;
  });

  // Let --json/--field appear after the subcommand name as well as before it.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
