#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ttforge/forge.hpp"
#include "ttforge/io.hpp"

using namespace ttf;

namespace {

enum Exit { ok = 0, negative = 1, error = 2, inconclusive = 3 };

const char* tf(bool b) { return b ? "true" : "false"; }

Budget parse_budget(const std::string& s) {
  Budget b;
  std::vector<long> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stol(part));
  if (v.size() != 3 || v[0] < 1 || v[1] < 1 || v[2] < 1)
    throw std::invalid_argument("budget is L,P,B with positive entries, got '" + s + "'");
  b.max_len = static_cast<int>(v[0]);
  b.max_period = static_cast<int>(v[1]);
  b.max_nodes = v[2];
  return b;
}

Budget budget_from(const std::string& flag) {
  if (!flag.empty()) return parse_budget(flag);
  if (const char* env = std::getenv("TTFORGE_BUDGET")) return parse_budget(env);
  return {};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// a map from either an automorphism file or a decomposition file (its composite)
RoseMap load_map(const std::string& path) {
  std::string text = read_file(path);
  if (sniff(text) == FileKind::decomposition) {
    auto d = parse_decomposition(text).decomposition;
    return compose_folds(d.rank, d.folds);
  }
  return parse_automorphism(text);
}

std::string map_lines(const RoseMap& g, const std::string& indent) {
  std::ostringstream os;
  for (int k = 1; k <= g.rank(); ++k)
    os << indent << format_dir(k, g.rank()) << " -> " << format_word(g.image(k), g.rank()) << "\n";
  return os.str();
}

std::string wh_text(const WhiteheadGraph& G, const char* kind) {
  std::ostringstream os;
  os << "kind: " << kind << "\n";
  os << "vertices: " << G.vertex_count() << "\n";
  os << "edges: " << G.edges.size() << "\n";
  os << "components: " << component_count(G) << "\n";
  os << "connected: " << tf(is_connected(G)) << "\n";
  for (auto& t : G.edges) os << "edge: " << format_turn(t, G.rank) << "\n";
  return os.str();
}

std::string fic_text(const FicReport& f, int rank) {
  std::ostringstream os;
  os << "valid_decomposition: " << tf(f.valid_decomposition) << "\n";
  os << "decomposition_message: " << f.decomposition_message << "\n";
  os << "train_track: " << tf(f.train_track) << "\n";
  os << "pnp_free: " << verdict_name(f.pnp_free) << "\n";
  os << "pnp_outcome: " << outcome_name(f.pnp.outcome) << "\n";
  os << "pnp_nodes: " << f.pnp.nodes << "\n";
  if (!f.pnp.precondition.empty()) os << "pnp_precondition: " << f.pnp.precondition << "\n";
  for (auto& c : f.pnp.found)
    os << "pnp_found: period " << c.period << " " << format_word(invert(c.rho1), rank) << "." << format_word(c.rho2, rank) << "\n";
  os << "pf: " << tf(f.pf) << "\n";
  os << "pf_exponent: " << (f.pf_exponent ? std::to_string(*f.pf_exponent) : "none") << "\n";
  os << "lw_connected: " << tf(f.lw_connected) << "\n";
  os << "lw_components: " << f.lw_components << "\n";
  if (f.ideal) {
    os << "ideal_vertices: " << f.ideal->vertex_count() << "\n";
    os << "ideal_edges: " << f.ideal->edges.size() << "\n";
    int n = 2 * rank - 1;
    os << "ideal_complete_2r-1: " << tf(is_complete_on(*f.ideal, n)) << "\n";
  }
  os << "verdict: " << verdict_name(f.verdict) << "\n";
  return os.str();
}

nlohmann::ordered_json fic_json(const FicReport& f, int rank) {
  nlohmann::ordered_json j;
  j["valid_decomposition"] = f.valid_decomposition;
  j["decomposition_message"] = f.decomposition_message;
  j["train_track"] = f.train_track;
  j["pnp_free"] = verdict_name(f.pnp_free);
  j["pnp_outcome"] = outcome_name(f.pnp.outcome);
  j["pnp_nodes"] = f.pnp.nodes;
  auto found = nlohmann::ordered_json::array();
  for (auto& c : f.pnp.found)
    found.push_back({{"period", c.period}, {"rho1", format_word(c.rho1, rank)}, {"rho2", format_word(c.rho2, rank)}});
  j["pnp_found"] = found;
  j["pf"] = f.pf;
  j["pf_exponent"] = f.pf_exponent ? nlohmann::ordered_json(*f.pf_exponent) : nlohmann::ordered_json(nullptr);
  j["lw_connected"] = f.lw_connected;
  j["lw_components"] = f.lw_components;
  if (f.ideal) {
    j["ideal_vertices"] = f.ideal->vertex_count();
    j["ideal_edges"] = f.ideal->edges.size();
  }
  j["verdict"] = verdict_name(f.verdict);
  return j;
}

int verdict_exit(Verdict v) { return v == Verdict::yes ? ok : v == Verdict::no ? negative : inconclusive; }

int outcome_exit(PnpOutcome o) {
  switch (o) {
    case PnpOutcome::none_found_exhaustive: return ok;
    case PnpOutcome::found: return negative;
    default: return inconclusive;
  }
}

// prefix files: illegal turns are the folded turns; the last one comes from final_turn or the propagated structure
PnpReport run_prefix(const DecompFile& f, const Budget& b) {
  const Decomposition& d = f.decomposition;
  if (f.final_turn) {
    PrefixSpec spec;
    for (auto& fo : d.folds) spec.illegal.push_back(fo.folded());
    spec.final_turn = f.final_turn;
    return search_prefix(d.rank, d.folds, spec, b);
  }
  if (d.structures.empty()) throw std::invalid_argument("prefix mode needs final_turn or a structure for G_0");
  return verify_prevention_sequence(make_composition(d.rank, d.folds, d.structures.front()), b).report;
}

struct Opts {
  int jobs = 1;
  std::string file, file2, budget, oracle, kind = "local", dot, y;
  bool primitive = false, trace = false, json = false, prefix = false;
  bool validate = false, star = false, birecurrent = false, subgraph = false;
  int rank = 0;
  std::string out;
};

int cmd_check_tt(const Opts& o) {
  RoseMap g = load_map(o.file);
  auto c = is_train_track(g);
  std::cout << "train_track: " << tf(c.ok) << "\n";
  if (!c.ok) {
    std::cout << "edge: " << format_dir(c.edge, g.rank()) << "\n";
    std::cout << "illegal_turn: " << format_turn(c.turn, g.rank()) << "\n";
  }
  return c.ok ? ok : negative;
}

int cmd_matrix(const Opts& o) {
  RoseMap g = load_map(o.file);
  auto M = transition_matrix(g);
  for (auto& row : M) {
    for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k];
    std::cout << "\n";
  }
  if (!o.primitive) return ok;
  auto e = primitive_exponent(M);
  std::cout << "irreducible: " << tf(is_irreducible(M)) << "\n";
  std::cout << "primitive: " << tf(e.has_value()) << "\n";
  if (e) std::cout << "exponent: " << *e << "\n";
  return e ? ok : negative;
}

int cmd_whitehead(const Opts& o) {
  std::string text = read_file(o.file);
  WhiteheadGraph G;
  if (o.kind == "local" || o.kind == "stable") {
    RoseMap g = load_map(o.file);
    G = o.kind == "local" ? local_whitehead_graph(g) : stable_whitehead_graph(g);
  } else if (o.kind == "ideal") {
    if (sniff(text) != FileKind::decomposition) throw std::invalid_argument("the ideal graph needs a decomposition file");
    auto d = parse_decomposition(text).decomposition;
    auto rep = detect_ipnps(d.rank, d.folds, budget_from(o.budget));
    if (rep.outcome != PnpOutcome::none_found_exhaustive) {
      std::cout << "kind: ideal\npnp_outcome: " << outcome_name(rep.outcome) << "\n";
      return outcome_exit(rep.outcome);
    }
    RoseMap g = compose_folds(d.rank, d.folds);
    G = ideal_whitehead_graph(g, PnpFreeCertificate{g, true});
  } else {
    throw std::invalid_argument("kind is local, stable or ideal");
  }
  std::cout << wh_text(G, o.kind.c_str());
  if (!o.dot.empty()) write_text(o.dot, to_dot(G, o.kind));
  return ok;
}

std::string view_text(const LttView& V) {
  std::ostringstream os;
  os << "vertices:";
  for (size_t i = 0; i < V.vertex.size(); ++i)
    if (V.vertex[i]) os << " " << format_x(dir_from_index(static_cast<int>(i)));
  os << "\nblack:";
  for (size_t e = 0; e < V.black.size(); ++e)
    if (V.black[e]) os << " " << format_x(static_cast<Dir>(e + 1)) << "-" << format_x(-static_cast<Dir>(e + 1));
  os << "\ncolored:";
  for (auto& t : V.colored) os << " " << format_x(t.a) << "-" << format_x(t.b);
  os << "\n";
  return os.str();
}

int cmd_ltt(const Opts& o) {
  std::string text = read_file(o.file);
  // a map file gets the structure it induces
  LttStructure G = sniff(text) == FileKind::automorphism ? build_ltt(parse_automorphism(text)) : parse_ltt(text);
  int code = ok;
  std::cout << write_ltt(G);
  if (o.validate) {
    auto c = validate(G, o.star);
    std::cout << "valid: " << tf(c.ok) << "\n";
    if (!c.ok) {
      std::cout << "axiom: " << c.axiom << "\nwitness: " << c.witness << "\n";
      code = negative;
    }
  }
  if (o.birecurrent) {
    auto b = is_birecurrent(G);
    std::cout << "birecurrent: " << tf(b.birecurrent) << "\n";
    if (b.birecurrent) {
      std::cout << "witness:";
      for (int l : path_labels(b.witness)) std::cout << " " << l;
      std::cout << "\n";
    } else {
      code = negative;
    }
  }
  if (o.subgraph) {
    auto t = construction_subgraph_traced(G);
    std::cout << "subgraph_iterations: " << t.iterations << "\n" << view_text(t.result);
  }
  if (!o.dot.empty()) write_text(o.dot, to_dot(G));
  return code;
}

std::string labels_text(const SmoothPath& p) {
  std::ostringstream os;
  os << "[";
  auto l = path_labels(p);
  for (size_t k = 0; k < l.size(); ++k) os << (k ? ", " : "") << l[k];
  os << "]";
  return os.str();
}

int cmd_decomp_validate(const Opts& o) {
  auto f = parse_decomposition(read_file(o.file));
  const auto& d = f.decomposition;
  auto v = validate_ideal_decomposition(d);
  std::cout << "valid: " << tf(v.ok) << "\n";
  if (!v.ok) {
    std::cout << "condition: " << v.condition << "\nlocation: " << v.location << "\nmessage: " << v.message << "\n";
    return negative;
  }
  std::cout << "folds: " << d.folds.size() << "\n";
  std::cout << "kinds:";
  for (auto k : v.kinds) std::cout << " " << (k == TripleKind::switch_ ? "sw" : "ext");
  std::cout << "\n";
  std::cout << "composite:\n" << map_lines(v.composite, "  ");
  if (d.expected) std::cout << "matches_expected: " << tf(v.matches_expected) << "\n";
  auto s = pf_by_switch_schedule(v);
  std::cout << "pf_by_schedule: " << tf(s.holds) << "\n";
  return ok;
}

int cmd_decomp_path(const Opts& o) {
  auto f = parse_decomposition(read_file(o.file));
  const auto& d = f.decomposition;
  LttStructure g0;
  if (!d.structures.empty()) {
    g0 = d.structures.front();
  } else {
    auto v = validate_ideal_decomposition(d);
    if (!v.ok) throw std::invalid_argument("no structure given and the folds do not validate: " + v.message);
    g0 = v.structures.front();
  }
  auto c = make_composition(d.rank, d.folds, g0);
  if (c.is_construction()) {
    std::cout << "kind: construction\npath: " << labels_text(construction_path(c)) << "\n";
    return ok;
  }
  auto chk = check_switch_sequence(c);
  if (!chk.ok) throw std::invalid_argument("neither a construction composition nor a switch sequence: " + chk.message);
  std::cout << "kind: switch\npath: " << labels_text(switch_path(c)) << "\n";
  return ok;
}

int cmd_decomp_from_path(const Opts& o) {
  LttStructure G = parse_ltt(read_file(o.file));
  SmoothPath p = parse_path_spec(o.file2);
  std::optional<Dir> y;
  if (!o.y.empty()) y = parse_vertex_label(o.y);
  auto c = composition_from_path(G, p, y);
  Decomposition d;
  d.rank = c.rank;
  for (auto& t : c.triples) d.folds.push_back(t.fold);
  d.structures.push_back(c.triples.front().source);
  std::cout << "mode: prefix\n" << write_decomposition(d);
  std::cout << "# composite\n" << map_lines(c.automorphism(), "#   ");
  return ok;
}

int cmd_pnp(const Opts& o) {
  auto f = parse_decomposition(read_file(o.file));
  const auto& d = f.decomposition;
  Budget b = budget_from(o.budget);
  PnpReport rep = (f.prefix || o.prefix) ? run_prefix(f, b) : detect_ipnps(d.rank, d.folds, b);
  if (o.trace) {
    std::cout << narrate(rep, d.rank);
  } else {
    std::cout << "outcome: " << outcome_name(rep.outcome) << "\nnodes: " << rep.nodes << "\n";
    if (!rep.precondition.empty()) std::cout << "precondition: " << rep.precondition << "\n";
    for (auto& c : rep.found)
      std::cout << "found: period " << c.period << " path " << format_word(invert(c.rho1), d.rank) << "."
                << format_word(c.rho2, d.rank) << "\n";
  }
  if (!o.oracle.empty()) {
    int L = 0, P = 0;
    char comma = 0;
    std::istringstream is(o.oracle);
    if (!(is >> L >> comma >> P) || comma != ',' || L < 1 || P < 1) throw std::invalid_argument("oracle is L,P");
    auto paths = nielsen_oracle(compose_folds(d.rank, d.folds), L, P);
    std::cout << "oracle_paths: " << paths.size() << "\n";
    for (auto& np : paths) std::cout << "oracle: period " << np.period << " path " << format_word(np.path, d.rank) << "\n";
  }
  return outcome_exit(rep.outcome);
}

int cmd_verify(const Opts& o) {
  auto d = parse_decomposition(read_file(o.file)).decomposition;
  auto f = verify_fic(d, budget_from(o.budget), o.jobs);
  if (o.json)
    std::cout << fic_json(f, d.rank).dump(2) << "\n";
  else
    std::cout << fic_text(f, d.rank);
  return verdict_exit(f.verdict);
}

int cmd_generate(const Opts& o) {
  GeneratedRep rep = generate(o.rank);
  const auto& d = rep.decomposition;
  auto v = validate_ideal_decomposition(d);
  auto fic = verify_fic(d, budget_from(o.budget), o.jobs);
  auto sched = pf_by_switch_schedule(v);
  std::ostringstream report;
  report << "rank: " << rep.rank << "\nfolds: " << d.folds.size() << "\n" << fic_text(fic, rep.rank);
  report << "pf_by_schedule: " << tf(sched.holds) << "\n";
  report << "schedule_same_structure: " << tf(sched.strict_same_structure) << "\n";
  for (auto& b : rep.blocks) report << "block: " << b.name << " folds " << b.first << ".." << b.last << " path " << labels_text(b.path) << "\n";
  for (auto& p : rep.provenance) report << "note: " << p << "\n";
  if (o.out.empty()) {
    std::cout << write_automorphism(rep.composite) << report.str();
  } else {
    std::filesystem::create_directories(o.out);
    auto at = [&](const char* name) { return (std::filesystem::path(o.out) / name).string(); };
    write_text(at("map.txt"), write_automorphism(rep.composite));
    write_text(at("decomposition.txt"), write_decomposition(d));
    write_text(at("ltt.dot"), to_dot(v.structures.front(), "G0"));
    if (fic.ideal) write_text(at("ideal_whitehead.dot"), to_dot(*fic.ideal, "ideal"));
    write_text(at("report.txt"), report.str());
    std::cout << "wrote " << o.out << "\n";
  }
  return verdict_exit(fic.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ttforge: train tracks, ideal Whitehead graphs and fold decompositions on roses"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--jobs", o.jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  auto* c_tt = app.add_subcommand("check-tt", "check that an automorphism is a train track");
  c_tt->add_option("file", o.file)->required();
  auto* c_mx = app.add_subcommand("matrix", "transition matrix");
  c_mx->add_option("file", o.file)->required();
  c_mx->add_flag("--primitive", o.primitive, "also decide primitivity");
  auto* c_wh = app.add_subcommand("whitehead", "local, stable or ideal Whitehead graph");
  c_wh->add_option("file", o.file)->required();
  c_wh->add_option("--kind", o.kind)->check(CLI::IsMember({"local", "stable", "ideal"}));
  c_wh->add_option("--dot", o.dot, "write a DOT file");
  c_wh->add_option("--budget", o.budget, "L,P,B for the ideal graph certificate");
  auto* c_ltt = app.add_subcommand("ltt", "lamination train track structures");
  c_ltt->add_option("file", o.file)->required();
  c_ltt->add_flag("--validate", o.validate);
  c_ltt->add_flag("--star", o.star, "include the ltt(*) axiom in --validate");
  c_ltt->add_flag("--birecurrent", o.birecurrent);
  c_ltt->add_flag("--subgraph", o.subgraph, "construction subgraph");
  c_ltt->add_option("--dot", o.dot);
  auto* c_dc = app.add_subcommand("decomp", "fold decompositions");
  c_dc->require_subcommand(1);
  auto* c_dv = c_dc->add_subcommand("validate", "validate an ideal decomposition");
  c_dv->add_option("file", o.file)->required();
  auto* c_dp = c_dc->add_subcommand("path", "construction or switch path of a composition");
  c_dp->add_option("file", o.file)->required();
  auto* c_df = c_dc->add_subcommand("from-path", "construction composition from a smooth path");
  c_df->add_option("ltt", o.file)->required();
  c_df->add_option("path", o.file2, "x-labels, e.g. 2,3,4,6,5")->required();
  c_df->add_option("--y", o.y, "purple end of the switch source red edge, x<label>");
  auto* c_pnp = app.add_subcommand("pnp", "periodic Nielsen path search");
  c_pnp->add_option("file", o.file)->required();
  c_pnp->add_option("--budget", o.budget, "L,P,B");
  c_pnp->add_option("--oracle", o.oracle, "L,P: also run the brute-force oracle");
  c_pnp->add_flag("--trace", o.trace, "case-by-case narration");
  c_pnp->add_flag("--prefix", o.prefix, "treat the folds as a prefix");
  auto* c_vf = app.add_subcommand("verify", "full irreducibility criterion");
  c_vf->add_option("file", o.file)->required();
  c_vf->add_option("--budget", o.budget, "L,P,B");
  c_vf->add_flag("--json", o.json);
  auto* c_gen = app.add_subcommand("generate", "representative with complete ideal Whitehead graph");
  c_gen->add_option("--rank", o.rank)->required()->check(CLI::Range(3, 64));
  c_gen->add_option("--out", o.out, "output directory");
  c_gen->add_option("--budget", o.budget, "L,P,B");

  if (argc < 2) {
    std::cerr << app.help();
    return error;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return error;
  }

  try {
    if (*c_tt) return cmd_check_tt(o);
    if (*c_mx) return cmd_matrix(o);
    if (*c_wh) return cmd_whitehead(o);
    if (*c_ltt) return cmd_ltt(o);
    if (*c_dv) return cmd_decomp_validate(o);
    if (*c_dp) return cmd_decomp_path(o);
    if (*c_df) return cmd_decomp_from_path(o);
    if (*c_pnp) return cmd_pnp(o);
    if (*c_vf) return cmd_verify(o);
    if (*c_gen) return cmd_generate(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error;
  }
  return error;
}
