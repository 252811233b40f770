// Command-line front end. JSON on stdout (DOT for tensor-graph), diagnostics on stderr.
// Exit codes: 0 ok, 1 computational FAIL, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>

#include "wzw/affine.hpp"
#include "wzw/chevalley.hpp"
#include "wzw/heisenberg.hpp"
#include "wzw/lattice.hpp"
#include "wzw/report.hpp"
#include "wzw/tensor.hpp"

using namespace wzw;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "wzw-cli/1";

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(json j, bool ok = true) {
  json out = {{"schema", kSchema}};
  out.update(j);
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

AlgebraId algebra(const std::string& s) {
  try {
    return AlgebraId::parse(s);
  } catch (const std::exception& e) {
    throw Usage(std::string("--algebra: ") + e.what());
  }
}

QVec coords(const std::string& flag, const std::string& s, int n) {
  QVec v;
  try {
    v = parse_qlist(s);
  } catch (const std::exception& e) {
    throw Usage(flag + ": " + e.what());
  }
  if (int(v.size()) != n) throw Usage(flag + ": expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

Lbl labels(const std::string& flag, const std::string& s, int n) {
  QVec v = coords(flag, s, n);
  Lbl x{};
  for (int i = 0; i < n; ++i) {
    if (!is_integer(v[i])) throw Usage(flag + ": coordinates must be integers here");
    x[i] = int(v[i].get_num().get_si());
  }
  return x;
}

Lbl dominant_labels(const std::string& flag, const std::string& s, const RootSystem& rs) {
  Lbl x = labels(flag, s, rs.rank());
  if (!rs.dominant(x)) throw Usage(flag + ": weight must be dominant");
  return x;
}

json lbl_json(const RootSystem& rs, const Lbl& x) { return weight_json(rs.id(), x); }

std::vector<std::vector<long>> read_gram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("--gram: cannot open " + path);
  json j;
  try {
    in >> j;
    if (j.is_object() && j.contains("gram")) j = j["gram"];
    return j.get<std::vector<std::vector<long>>>();
  } catch (const std::exception& e) {
    throw Usage("--gram: expected a JSON integer matrix: " + std::string(e.what()));
  }
}

// ---------------------------------------------------------------------------

int cmd_rootsys(const std::string& alg) {
  auto rs = root_system(algebra(alg));
  json pos = json::array();
  for (auto& r : rs->positive_roots()) pos.push_back(r);
  return emit({{"algebra", rs->id().name()},
               {"rank", rs->rank()},
               {"dim", rs->dim()},
               {"cartan", rs->cartan_matrix()},
               {"positive_roots", pos},
               {"highest_root", lbl_json(*rs, rs->theta_lbl())},
               {"weyl_vector", lbl_json(*rs, rs->rho_lbl())},
               {"marks", rs->marks()},
               {"comarks", rs->comarks()},
               {"dual_coxeter", rs->dual_coxeter()}});
}

int cmd_weights(const std::string& alg, const std::string& w, bool realize) {
  auto rs = root_system(algebra(alg));
  QVec f = coords("--weight", w, rs->rank());
  Weight x = rs->from_fundamental(f);
  if (!rs->dominant_integral(x)) {
    auto red = rs->to_dominant(x);
    return emit({{"weight", weight_json(*rs, x)},
                 {"dominant_integral", false},
                 {"to_dominant", {{"weight", weight_json(*rs, red.weight)}, {"sign", red.sign}, {"length", red.length}}}});
  }
  Lbl hw = rs->labels(x);
  auto ch = dominant_character(*rs, hw);
  json dom = json::array();
  for (auto& [m, k] : ch.mults) dom.push_back({{"weight", lbl_json(*rs, m)["coords"]}, {"multiplicity", k}});
  json out = {{"highest_weight", lbl_json(*rs, hw)},
              {"dominant_integral", true},
              {"dim", ch.dim},
              {"conformal_weight_level1", rs->level_of(hw) <= 1 ? json(qstr(conformal_weight(*rs, hw, 1))) : json()},
              {"dominant_weights", dom}};
  if (realize) out["realization"] = realization_json(realize_module(*rs, hw));
  return emit(out);
}

int cmd_tensor(const std::string& alg, const std::string& lam, const std::string& mu, const std::string& nu) {
  auto rs = root_system(algebra(alg));
  Lbl l = dominant_labels("--charge", lam, *rs), m = dominant_labels("--source", mu, *rs);
  if (nu.empty()) {
    auto dec = tensor_decomposition(*rs, l, m);
    std::map<Lbl, int64_t> sorted(dec.begin(), dec.end());
    json parts = json::array();
    for (auto& [w, k] : sorted)
      if (k) parts.push_back({{"weight", lbl_json(*rs, w)["coords"]}, {"multiplicity", k}});
    return emit({{"charge", lbl_json(*rs, l)}, {"source", lbl_json(*rs, m)}, {"decomposition", parts}});
  }
  Lbl n = dominant_labels("--target", nu, *rs);
  TensorQuery q{rs->from_labels(l), rs->from_labels(m), rs->from_labels(n)};
  int64_t t = tensor_multiplicity(*rs, l, m, n);
  int64_t p = prop11_multiplicity(q);
  Cor20 c = cor20_criterion(q);
  bool agree = t == p && (c == Cor20::NotApplicable || (c == Cor20::One) == (t == 1));
  return emit({{"charge", lbl_json(*rs, l)},
               {"source", lbl_json(*rs, m)},
               {"target", lbl_json(*rs, n)},
               {"tensor_multiplicity", t},
               {"prop11_multiplicity", p},
               {"cor20_criterion", to_string(c)},
               {"agree", agree}},
              agree);
}

int cmd_tensor_graph(int height, bool as_json) {
  if (height < 1) throw Usage("--height must be at least 1");
  auto g = g2_tensor_graph(height);
  if (!as_json) {
    std::cout << g.to_dot();
    return 0;
  }
  auto rs = root_system(AlgebraId{'G', 2});
  json nodes = json::array(), edges = json::array();
  for (auto& n : g.nodes) nodes.push_back(lbl_json(*rs, n)["coords"]);
  for (auto& [a, b] : g.edges) edges.push_back({a, b});
  return emit({{"height", height}, {"nodes", nodes}, {"edges", edges}});
}

int cmd_fusion(const std::string& alg, int level, const std::string& lam, const std::string& mu, const std::string& nu) {
  auto rs = root_system(algebra(alg));
  if (level < 0) throw Usage("--level must be nonnegative");
  Lbl l = dominant_labels("--charge", lam, *rs), m = dominant_labels("--source", mu, *rs),
      n = dominant_labels("--target", nu, *rs);
  for (auto [flag, x] : {std::pair{"--charge", &l}, {"--source", &m}, {"--target", &n}})
    if (!admissible(*rs, *x, level)) throw Usage(std::string(flag) + ": weight is not admissible at level " + std::to_string(level));
  int64_t oracle = kac_walton_fusion(*rs, l, m, n, level);
  auto rule = paper_fusion_rule(*rs, l, m, n, level);
  json out = {{"algebra", rs->id().name()},
              {"level", level},
              {"charge", lbl_json(*rs, l)},
              {"source", lbl_json(*rs, m)},
              {"target", lbl_json(*rs, n)},
              {"charge_name", supported_charge(*rs, l)},
              {"oracle", oracle},
              {"rule", rule ? json(*rule) : json()},
              {"agree", rule ? json(*rule == oracle) : json()}};
  return emit(out, !rule || *rule == oracle);
}

int cmd_verify_e8() {
  json out;
  bool ok = true;
  try {
    auto emb = dynkin_embedding_g2_f4();
    auto br = branch_adjoint(emb.g2);
    auto hv = adjoint_highest_vectors(emb.g2);
    auto l30 = verify_lemma_lb30(emb);
    int k = dynkin_index(emb.g2);
    json mult = json::object();
    for (auto& [w, m] : br.mult) mult[weight_json(AlgebraId{'G', 2}, w)["coords"].dump()] = m;
    out = {{"e8_dim", emb.e8->dim()},
           {"g2_dim", emb.g2.dim()},
           {"f4_dim", emb.f4.dim()},
           {"joint_dim", emb.joint_dim},
           {"commute", emb.commute},
           {"g2_cartan", emb.g2.cartan},
           {"f4_cartan", emb.f4.cartan},
           {"f4_generator_order", emb.f4.order},
           {"a1_signs", emb.a1_signs},
           {"rejected_variants", emb.rejected},
           {"dynkin_index", k},
           {"adjoint_multiplicities", mult},
           {"adjoint_multiplicities_by_highest_vectors", hv.mult == br.mult},
           {"perp",
            {{"dim", l30.m_dim},
             {"x_in_perp", l30.x_in_m},
             {"y_in_perp", l30.y_in_m},
             {"xy_in_perp", l30.xy_in_m},
             {"xy_zero", l30.xy_zero},
             {"literal_pairing", qstr(l30.literal_pairing)},
             {"witness", l30.witness},
             {"witness_pairing", qstr(l30.witness_pairing)}}}};
    std::map<Lbl, int64_t> want{{Lbl{}, 52}, {Lbl{1}, 26}, {Lbl{0, 1}, 1}};
    ok = emb.g2.dim() == 14 && emb.f4.dim() == 52 && emb.commute && k == 1 && br.mult == want && hv.mult == want &&
         l30.x_in_m && l30.y_in_m && l30.xy_in_m && sgn(l30.witness_pairing) != 0;
  } catch (const VerificationFailed& e) {
    out = {{"error", e.what()}};
    ok = false;
  }
  out["verdict"] = ok ? "PASS" : "FAIL";
  return emit(out, ok);
}

int cmd_compress(const std::string& alg, int level, int a, const std::map<std::string, std::string>& w) {
  auto rs = root_system(algebra(alg));
  auto get = [&](const char* f) { return dominant_labels(f, w.at(f), *rs); };
  Lbl l = get("--charge"), m = get("--source"), n = get("--target"), rho = get("--rho"), m1 = get("--mu1"),
      n1 = get("--nu1");
  auto r = lemma24_conditions(*rs, l, m, n, rho, m1, n1, level, a);
  auto p = prop29_applicable(*rs, l, m, n, level);
  return emit({{"algebra", rs->id().name()},
               {"level", level},
               {"lemma24",
                {{"hypotheses", r.hypotheses}, {"failed", r.failed}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"notes", r.notes}}},
               {"prop29", {{"applicable", p.applicable}, {"fusion", p.fusion}, {"tensor", p.tensor}, {"mismatch", p.mismatch}}}},
              !p.mismatch);
}

int cmd_lattice(const std::string& path, const std::string& op, const std::string& lam, const std::string& mu,
                const std::string& nu, uint64_t seed) {
  auto g = read_gram(path);
  std::optional<IntegralLattice> L;
  try {
    L.emplace(g);
  } catch (const std::exception& e) {
    throw Usage(std::string("--gram: ") + e.what());
  }
  const int n = L->rank();
  json out = {{"rank", n}, {"even", L->even()}, {"discriminant", L->discriminant()}};
  if (op == "dual") {
    json db = json::array();
    for (auto& v : L->dual_basis()) db.push_back(to_json(v));
    out["dual_basis"] = db;
    return emit(out);
  }
  if (!L->even()) throw Usage("--op " + op + " needs an even lattice");
  auto c = build_cocycle(*L);
  if (op == "cocycle") {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i][j] = c.basis_value(i, j);
    std::mt19937_64 rng(seed);
    auto rep = check_cocycle(c, rng, 1000);
    out["basis_values"] = t;
    out["check"] = {{"triples", rep.triples},
                    {"cocycle_fail", rep.cocycle_fail},
                    {"unit_fail", rep.unit_fail},
                    {"commutator_fail", rep.commutator_fail},
                    {"dual_fail", rep.dual_fail}};
    return emit(out, rep.ok());
  }
  if (op == "fusion") {
    if (lam.empty() || mu.empty() || nu.empty()) throw Usage("--op fusion needs --charge, --source and --target");
    QVec x = coords("--charge", lam, n), y = coords("--source", mu, n), z = coords("--target", nu, n);
    for (auto* v : {&x, &y, &z})
      if (!L->in_dual(*v)) throw Usage("lattice fusion needs dual-lattice vectors");
    out["fusion"] = lattice_fusion(*L, x, y, z);
    if (out["fusion"] == 1) out["intertwiner_phase"] = intertwiner_phase(c, x, y, y).str();
    return emit(out);
  }
  throw Usage("--op must be one of cocycle, fusion, dual");
}

int cmd_probe(const std::string& charge, const std::string& norms, const std::string& source, int order,
              const std::string& cuts, int smax, double slack) {
  QVec k;
  try {
    k = parse_qlist(norms);
  } catch (const std::exception& e) {
    throw Usage(std::string("--norms: ") + e.what());
  }
  for (auto& x : k)
    if (sgn(x) <= 0) throw Usage("--norms must be positive");
  const int n = int(k.size());
  QVec a = coords("--charge", charge, n);
  QVec mu = source.empty() ? QVec(size_t(n), Q(0)) : coords("--source", source, n);
  std::vector<int> cutoffs;
  for (auto& c : parse_qlist(cuts)) {
    if (!is_integer(c) || sgn(c) <= 0) throw Usage("--cutoffs must be positive integers");
    cutoffs.push_back(int(c.get_num().get_si()));
  }
  if (order < 0) throw Usage("--order must be nonnegative");
  FockSpace F(k);
  EnergyProbe p;
  try {
    p = energy_bound_probe(F, a, mu, order, cutoffs, smax, slack);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
  json norms_j = json::object();
  for (auto& [cut, m] : p.norms) {
    json row = json::object();
    for (auto& [s, v] : m) row[qstr(s)] = v;
    norms_j[std::to_string(cut)] = row;
  }
  return emit({{"charge", to_json(a)},
               {"source", to_json(mu)},
               {"norms_squared", to_json(k)},
               {"pairing", qstr(F.ip(a, a))},
               {"order", order},
               {"slack", slack},
               {"norms", norms_j},
               {"maxima", p.maxima},
               {"verdict", p.pass ? "PASS" : "FAIL"}},
              p.pass);
}

int cmd_verify_paper(uint64_t seed, int64_t cap, int level) {
  VerifyOptions o;
  o.seed = seed;
  o.cap = cap;
  o.max_level = level;
  auto r = verify_paper(o);
  json j = r.to_json();
  j["verdict"] = r.ok() ? "PASS" : "FAIL";
  return emit(j, r.ok());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WZW fusion, tensor and embedding computations"};
  app.require_subcommand(1);
  app.fallthrough();
  int64_t cap = 0;
  app.add_option("--cap", cap, "module dimension cap (default: WZW_CAP or 512)");

  std::string alg, weight, lam, mu, nu, gram, op = "cocycle", norms = "1", cuts = "8,12,16", rho, mu1, nu1;
  int level = 1, height = 4, order = 0, smax = 6, a = 1, max_level = 3;
  uint64_t seed = 1;
  double slack = 1.05;
  bool realize = false, as_json = false, as_dot = false;

  auto* rs = app.add_subcommand("rootsys", "root system data");
  rs->add_option("--algebra", alg)->required();

  auto* we = app.add_subcommand("weights", "character of an irreducible, or Weyl reduction of a weight");
  we->add_option("--algebra", alg)->required();
  we->add_option("--weight", weight, "fundamental-weight coordinates, e.g. 1,0,1/2")->required();
  we->add_flag("--realize", realize, "include an explicit realization");

  auto* te = app.add_subcommand("tensor", "tensor product multiplicities");
  te->add_option("--algebra", alg)->required();
  te->add_option("--charge", lam)->required();
  te->add_option("--source", mu)->required();
  te->add_option("--target", nu);

  auto* tg = app.add_subcommand("tensor-graph", "G2 tensor graph of the 7-dimensional module");
  tg->add_option("--height", height);
  tg->add_flag("--json", as_json);
  tg->add_flag("--dot", as_dot);

  auto* fu = app.add_subcommand("fusion", "closed-form fusion rule against the Kac-Walton oracle");
  fu->add_option("--algebra", alg)->required();
  fu->add_option("--level", level)->required();
  fu->add_option("--charge", lam)->required();
  fu->add_option("--source", mu)->required();
  fu->add_option("--target", nu)->required();

  auto* e8 = app.add_subcommand("verify-e8", "g2+f4 inside e8 and the adjoint branching");

  auto* cc = app.add_subcommand("compress-check", "level-reduction preconditions");
  cc->add_option("--algebra", alg)->required();
  cc->add_option("--level", level)->required();
  cc->add_option("--a", a)->required();
  cc->add_option("--charge", lam)->required();
  cc->add_option("--source", mu)->required();
  cc->add_option("--target", nu)->required();
  cc->add_option("--rho", rho)->required();
  cc->add_option("--mu1", mu1)->required();
  cc->add_option("--nu1", nu1)->required();

  auto* la = app.add_subcommand("lattice", "even lattice cocycle, fusion and dual data");
  la->add_option("--gram", gram, "JSON integer matrix")->required();
  la->add_option("--op", op)->check(CLI::IsMember({"cocycle", "fusion", "dual"}));
  la->add_option("--charge", lam);
  la->add_option("--source", mu);
  la->add_option("--target", nu);
  la->add_option("--seed", seed);

  auto* pr = app.add_subcommand("probe", "truncated energy-bound probe for a Heisenberg intertwiner");
  pr->add_option("--charge", lam)->required();
  pr->add_option("--norms", norms, "squared norms of the orthogonal basis");
  pr->add_option("--source", mu);
  pr->add_option("--order", order);
  pr->add_option("--cutoffs", cuts);
  pr->add_option("--smax", smax);
  pr->add_option("--slack", slack);

  auto* vp = app.add_subcommand("verify-paper", "run every check and report");
  vp->add_option("--seed", seed);
  vp->add_option("--level", max_level);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cap < 0) throw Usage("--cap must be positive");
    if (cap > 0) set_default_cap(cap);
    if (*rs) return cmd_rootsys(alg);
    if (*we) return cmd_weights(alg, weight, realize);
    if (*te) return cmd_tensor(alg, lam, mu, nu);
    if (*tg) return cmd_tensor_graph(height, as_json && !as_dot);
    if (*fu) return cmd_fusion(alg, level, lam, mu, nu);
    if (*e8) return cmd_verify_e8();
    if (*cc) return cmd_compress(alg, level, a, {{"--charge", lam}, {"--source", mu}, {"--target", nu},
                                                 {"--rho", rho}, {"--mu1", mu1}, {"--nu1", nu1}});
    if (*la) return cmd_lattice(gram, op, lam, mu, nu, seed);
    if (*pr) return cmd_probe(lam, norms, mu, order, cuts, smax, slack);
    if (*vp) return cmd_verify_paper(seed, default_cap(), max_level);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return emit({{"error", e.what()}, {"dimension", e.dimension()}}, false);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return emit({{"error", e.what()}}, false);
  }
  return 2;
}
