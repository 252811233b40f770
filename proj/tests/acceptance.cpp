// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures (capped at 1).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "wzw/affine.hpp"
#include "wzw/chevalley.hpp"
#include "wzw/heisenberg.hpp"
#include "wzw/lattice.hpp"
#include "wzw/report.hpp"
#include "wzw/tensor.hpp"

using namespace wzw;

namespace {

constexpr uint64_t kSeed = 20240101;
constexpr double kAnticommutatorTol = 1e-10;
constexpr double kEnergySlack = 1.05;
constexpr double kPhaseTol = 1e-6;

Lbl unit(int i) {
  Lbl x{};
  x[i] = 1;
  return x;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* what, double budget_s, const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = budget_s <= 0 || s <= budget_s;
  bool pass = o.ok && in_time;
  failures += !pass;
  std::printf("C%-2d %s  %s  (%.1fs%s)  %s\n", n, pass ? "PASS" : "FAIL", what, s, in_time ? "" : ", over budget",
              o.detail.c_str());
  std::fflush(stdout);
}

std::shared_ptr<G2F4Embedding> embedding() {
  static auto e = std::make_shared<G2F4Embedding>(dynkin_embedding_g2_f4());
  return e;
}

}  // namespace

int main() {
  criterion(1, "E8 structure constants", 60, [] {
    auto e8 = build_simply_laced(AlgebraId{'E', 8});
    std::mt19937_64 rng(kSeed);
    auto r = check_structure_sampled(*e8, rng, 10000);
    std::ostringstream d;
    d << "dim " << e8->dim() << ", roots " << e8->num_roots() << ", triples " << r.triples << ", Jacobi fails "
      << r.jacobi_fail << ", invariance fails " << r.invariance_fail << ", star fails " << r.star_fail;
    return Outcome{e8->dim() == 248 && e8->num_roots() == 240 && r.triples == 10000 && r.ok(), d.str()};
  });

  criterion(2, "g2+f4 inside e8", 300, [] {
    auto e = embedding();
    auto g2 = root_system(AlgebraId{'G', 2}), f4 = root_system(AlgebraId{'F', 4});
    bool cartans = e->g2.cartan == g2->cartan_matrix() && e->f4.cartan == f4->cartan_matrix();
    std::ostringstream d;
    d << "dims " << e->g2.dim() << "/" << e->f4.dim() << ", Cartans " << (cartans ? "match" : "differ")
      << ", commute " << e->commute << ", A1 signs (" << e->a1_signs[0] << "," << e->a1_signs[1] << ","
      << e->a1_signs[2] << "), rejected variants " << e->rejected.size();
    return Outcome{e->g2.dim() == 14 && e->f4.dim() == 52 && cartans && e->commute, d.str()};
  });

  criterion(3, "adjoint branching, Dynkin index, perp commutator", 300, [] {
    auto e = embedding();
    auto br = branch_adjoint(e->g2);
    auto hv = adjoint_highest_vectors(e->g2);
    int k = dynkin_index(e->g2);
    auto l = verify_lemma_lb30(*e);
    std::map<Lbl, int64_t> want{{Lbl{}, 52}, {unit(0), 26}, {unit(1), 1}};
    std::ostringstream d;
    d << "branching " << br.str() << " (highest vectors " << hv.str() << "), index " << k << ", dim perp "
      << l.m_dim << ", X,Y,[X,Y] in perp " << (l.x_in_m && l.y_in_m && l.xy_in_m) << ", [X,Y]"
      << (l.xy_zero ? "=0" : "≠0") << ", witness " << l.witness << " pairing " << qstr(l.witness_pairing);
    bool ok = br.mult == want && hv.mult == want && k == 1 && l.x_in_m && l.y_in_m && l.xy_in_m &&
              sgn(l.witness_pairing) != 0;
    return Outcome{ok, d.str()};
  });

  criterion(4, "tensor rule triple agreement, dims <= 512", 600, [] {
    int64_t checked = 0, bad = 0, cor = 0;
    for (auto s : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"}) {
      auto st = tensor_agreement_sweep(AlgebraId::parse(s), 512, Exec::Parallel);
      checked += st.checked;
      bad += st.disagreements;
      cor += st.cor20_applicable;
    }
    std::ostringstream d;
    d << checked << " triples checked, " << cor << " with the criterion applicable, " << bad << " disagreements";
    return Outcome{bad == 0 && checked > 0, d.str()};
  });

  criterion(5, "G2 tensor graph, height <= 4", 0, [] {
    auto g = g2_tensor_graph(4);
    std::set<std::pair<int, int>> e(g.edges.begin(), g.edges.end());
    int64_t bad = 0;
    for (int i = 0; i < int(g.nodes.size()); ++i)
      for (int j = i; j < int(g.nodes.size()); ++j) bad += (e.count({i, j}) > 0) != (g2_graph_rule(g.nodes[i], g.nodes[j]) == 1);
    return Outcome{bad == 0 && !g.nodes.empty(), std::to_string(g.nodes.size()) + " nodes, " +
                                                     std::to_string(g.edges.size()) + " edges, " +
                                                     std::to_string(bad) + " mismatches"};
  });

  criterion(6, "fusion rules and generating sets, levels 1-3", 0, [] {
    int64_t q = 0, bad = 0;
    std::string nongen;
    for (auto s : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"}) {
      auto id = AlgebraId::parse(s);
      auto rs = root_system(id);
      const int n = rs->rank();
      std::vector<Lbl> fam = id.series == 'B'   ? std::vector<Lbl>{unit(n - 1)}
                             : id.series == 'D' ? std::vector<Lbl>{unit(n - 2), unit(n - 1)}
                                                : std::vector<Lbl>{unit(0)};
      for (int l = 1; l <= 3; ++l) {
        auto sw = fusion_agreement_sweep(id, l, Exec::Parallel);
        q += sw.supported;
        bad += sw.disagreements;
        if (!generating_check(*rs, fam, l).generating) nongen += std::string(" ") + s + "@" + std::to_string(l);
      }
    }
    auto r = verify_paper(VerifyOptions{kSeed, 8, 1, Exec::Parallel});
    int assumed = 0;
    for (auto& c : r.claims) assumed += c.status == ClaimStatus::Assumed && c.id == "kac-walton-identification";
    std::ostringstream d;
    d << q << " supported queries, " << bad << " disagreements, non-generating:" << (nongen.empty() ? " none" : nongen)
      << ", assumed entries " << r.count(ClaimStatus::Assumed) << " (identification " << assumed << ")";
    return Outcome{bad == 0 && q > 0 && nongen.empty() && r.count(ClaimStatus::Assumed) == 1 && assumed == 1, d.str()};
  });

  criterion(7, "spin module dimensions, n = 2..5", 0, [] {
    bool ok = true;
    std::ostringstream d;
    for (int n = 2; n <= 5; ++n) {
      auto b = root_system(AlgebraId{'B', n});
      auto dd = root_system(AlgebraId{'D', n + 1});
      int64_t x = b->weyl_dimension(unit(n - 1)), y = dd->weyl_dimension(unit(n)), z = dd->weyl_dimension(unit(n - 1));
      // Second route: count weights of the realized modules.
      int64_t xr = dominant_character(*b, unit(n - 1)).dim;
      ok = ok && x == (int64_t(1) << n) && y == x && z == x && xr == x;
      d << "n=" << n << ":" << x << "/" << y << "/" << z << " ";
    }
    return Outcome{ok, d.str()};
  });

  criterion(8, "pairing lemmas", 0, [] {
    auto r = verify_pairing_lemmas();
    std::set<std::string> seen;
    std::string bad;
    for (auto& c : r.checks) {
      seen.insert(c.lemma);
      if (!c.pass) bad += " " + c.lemma + ":" + c.claim;
    }
    bool ok = r.ok() && seen == std::set<std::string>{"lb19", "lb22", "lb32"} && r.checks.size() == 7;
    return Outcome{ok, std::to_string(r.checks.size()) + " checks" + (bad.empty() ? ", all hold" : ", failing:" + bad)};
  });

  criterion(9, "lattice cocycle and root-lattice fusion", 0, [] {
    std::mt19937_64 rng(kSeed);
    int64_t triples = 0, badlat = 0;
    for (int t = 0; t < 20; ++t) {
      auto L = random_even_lattice(rng, 1 + t % 4);
      auto rep = check_cocycle(build_cocycle(L), rng, 1000);
      triples += rep.triples;
      badlat += !rep.ok();
    }
    int64_t q = 0, mism = 0;
    for (auto s : {"A1", "A2", "D4"}) {
      auto id = AlgebraId::parse(s);
      auto rs = root_system(id);
      auto L = root_lattice(id);
      auto adm = admissible_lbls(*rs, 1);
      for (auto& x : adm)
        for (auto& y : adm)
          for (auto& z : adm) {
            auto co = [&](const Lbl& w) { return rs->from_labels(w).coords; };
            int lf = lattice_fusion(L, co(x), co(y), co(z));
            auto p = paper_fusion_rule(*rs, x, y, z, 1);
            ++q;
            mism += (p && *p != lf) || lf != kac_walton_fusion(*rs, x, y, z, 1);
          }
    }
    std::ostringstream d;
    d << triples << " cocycle triples over 20 lattices, " << badlat << " failing; " << q << " fusion triples, " << mism
      << " mismatches";
    return Outcome{badlat == 0 && triples == 20000 && mism == 0, d.str()};
  });

  criterion(10, "Heisenberg probes", 300, [] {
    FockSpace F1({Q(1)}), F2({Q(2)});
    double ac = 0;
    for (int cut : {6, 8, 10}) ac = std::max(ac, anticommutator_check(F1, {Q(1)}, cut).interior_max);
    auto p0 = energy_bound_probe(F1, {Q(1)}, {Q(0)}, 0, {8, 12, 16}, 6, kEnergySlack, Exec::Parallel);
    auto p1 = energy_bound_probe(F2, {Q(1)}, {Q(0)}, 1, {8, 12, 16}, 6, kEnergySlack, Exec::Parallel);
    FockSpace F({Q(1), Q(1)});
    auto ad = adjoint_phase_check(F, {Q(1), Q(0)}, {Q(1, 2), Q(1, 3)}, 12);
    auto br = braid_phase_check(F, {Q(1), Q(0)}, {Q(1), Q(1)}, {Q(1, 3), Q(-2, 5)}, 12, default_braid_samples());
    char buf[256];
    std::snprintf(buf, sizeof buf, "anticommutator %.2e, energy r=0 %s r=1 %s, adjoint %.2e, braid %.2e", ac,
                  p0.pass ? "ok" : "fail", p1.pass ? "ok" : "fail", ad.deviation, br.deviation);
    bool ok = ac <= kAnticommutatorTol && p0.pass && p1.pass && ad.deviation <= kPhaseTol && ad.index_ok &&
              br.deviation <= kPhaseTol && br.factorization_ok;
    return Outcome{ok, buf};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
