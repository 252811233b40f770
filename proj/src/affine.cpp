#include "wzw/affine.hpp"

#include <algorithm>
#include <set>

namespace wzw {

namespace {

Lbl plus(Lbl a, const Lbl& b, int k = 1) {
  for (int i = 0; i < 8; ++i) a[i] += k * b[i];
  return a;
}

std::string lbl_str(const Lbl& x, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

Lbl unit(int i) {
  Lbl x{};
  x[i] = 1;
  return x;
}

}  // namespace

bool admissible(const RootSystem& rs, const Lbl& x, int level) {
  return rs.dominant(x) && rs.level_of(x) <= level;
}

std::vector<Lbl> admissible_lbls(const RootSystem& rs, int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  const int n = rs.rank();
  std::vector<Lbl> out;
  Lbl x{};
  // odometer over label vectors with Σ x_i a_i^∨ ≤ level
  while (true) {
    if (rs.level_of(x) <= level) out.push_back(x);
    int i = 0;
    while (i < n) {
      ++x[i];
      if (rs.level_of(x) <= level) break;
      x[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Lbl& a, const Lbl& b) {
    return std::make_pair(rs.level_of(a), a) < std::make_pair(rs.level_of(b), b);
  });
  return out;
}

std::vector<AffineWeight> admissible_weights(const AlgebraId& id, int level) {
  auto rs = root_system(id);
  std::vector<AffineWeight> out;
  for (auto& x : admissible_lbls(*rs, level)) out.push_back({rs->from_labels(x), level});
  return out;
}

Q conformal_weight(const RootSystem& rs, const Lbl& lambda, int level) {
  Lbl shifted = plus(lambda, rs.rho_lbl(), 2);
  Q num = rs.ip(lambda, shifted);
  Q r = num / (2 * (level + rs.dual_coxeter()));
  r.canonicalize();
  return r;
}

Q conformal_weight(const AffineWeight& w) {
  auto rs = root_system(w.finite.algebra);
  Lbl x = rs->labels(w.finite);
  if (!admissible(*rs, x, w.level)) throw std::invalid_argument("conformal_weight: weight not admissible");
  return conformal_weight(*rs, x, w.level);
}

Q casimir_eigenvalue(const ModuleRealization& R) {
  auto rs = root_system(R.algebra);
  const int n = rs->rank();
  if (R.dim == 1) return 0;
  const QMat& B = rs->gram();
  std::vector<QMat> H;
  for (int i = 0; i < n; ++i) H.push_back(R.H(i).dense());
  std::vector<QMat> E, F;
  const auto& roots = rs->positive_roots();
  for (size_t r = 0; r < roots.size(); ++r) {
    const auto& beta = roots[r];
    int height = 0;
    for (int c : beta) height += c;
    QMat e, f;
    if (height == 1) {
      int i = int(std::find(beta.begin(), beta.end(), 1) - beta.begin());
      e = R.E[i].dense();
      f = R.F[i].dense();
    } else {
      bool done = false;
      for (int i = 0; i < n && !done; ++i) {
        if (beta[i] == 0) continue;
        auto g = beta;
        g[i] -= 1;
        auto it = std::find(roots.begin(), roots.end(), g);
        if (it == roots.end()) continue;
        size_t k = size_t(it - roots.begin());
        QMat Ei = R.E[i].dense(), Fi = R.F[i].dense();
        e = Ei * E[k] - E[k] * Ei;
        f = F[k] * Fi - Fi * F[k];
        done = true;
      }
    }
    // normalize so that [E_β, F_β] = β^∨
    Q len2 = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) len2 += beta[a] * B(a, b) * beta[b];
    QMat coroot(R.dim, R.dim);
    for (int i = 0; i < n; ++i) {
      Q c = beta[i] * B(i, i) / len2;
      if (sgn(c) == 0) continue;
      for (size_t t = 0; t < H[i].a.size(); ++t) coroot.a[t] += c * H[i].a[t];
    }
    QMat ef = e * f - f * e;
    Q t = 0;
    for (int k = 0; k < R.dim && sgn(t) == 0; ++k)
      if (sgn(coroot(k, k)) != 0) t = ef(k, k) / coroot(k, k);
    if (sgn(t) == 0) throw std::logic_error("casimir: degenerate root vector");
    for (auto& x : f.a) x /= t;
    if (!(e * f - f * e == coroot)) throw std::logic_error("casimir: root vectors not an sl2 pair");
    E.push_back(std::move(e));
    F.push_back(std::move(f));
  }
  // Cartan part with the dual basis of the coroots.
  QMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = 4 * B(i, j) / (B(i, i) * B(j, j));
  QMat Mi = *inverse(M);
  QVec v(R.dim);
  v[0] = 1;
  QVec out(R.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec w = mul(H[i], mul(H[j], v));
      for (int k = 0; k < R.dim; ++k) out[k] += Mi(i, j) * w[k];
    }
  for (size_t r = 0; r < roots.size(); ++r) {
    Q len2 = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) len2 += roots[r][a] * B(a, b) * roots[r][b];
    QVec w1 = mul(E[r], mul(F[r], v)), w2 = mul(F[r], mul(E[r], v));
    for (int k = 0; k < R.dim; ++k) out[k] += len2 / 2 * (w1[k] + w2[k]);
  }
  for (int k = 1; k < R.dim; ++k)
    if (sgn(out[k]) != 0) throw std::logic_error("casimir: highest vector is not an eigenvector");
  return out[0];
}

// ---------------------------------------------------------------------------

LblMap kac_walton_decomposition(const RootSystem& rs, const LblMap& wl, const Lbl& mu, int level) {
  const int n = rs.rank();
  const int K = level + rs.dual_coxeter();
  const Lbl theta = rs.theta_lbl();
  LblMap out;
  for (auto& [k, m] : wl) {
    Lbl x = k;
    for (int i = 0; i < n; ++i) x[i] += mu[i] + 1;
    int sign = 1;
    bool drop = false;
    while (true) {
      auto r = rs.to_dominant(x);
      if (r.sign == 0) {
        drop = true;
        break;
      }
      sign *= r.sign;
      x = r.weight;
      int lev = rs.level_of(x);
      if (lev < K) break;
      if (lev == K) {
        drop = true;
        break;
      }
      // affine reflection s_0: x ↦ x − ((x|θ) − K) θ
      x = plus(x, theta, -(lev - K));
      sign = -sign;
    }
    if (drop) continue;
    for (int i = 0; i < n; ++i) x[i] -= 1;
    out[x] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw std::logic_error("Kac-Walton produced a negative multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

int64_t kac_walton_fusion(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu, int level) {
  for (auto* x : {&lambda, &mu, &nu})
    if (!admissible(rs, *x, level)) return 0;
  auto wl = all_weights(rs, dominant_character(rs, lambda));
  auto d = kac_walton_decomposition(rs, wl, mu, level);
  auto it = d.find(nu);
  return it == d.end() ? 0 : it->second;
}

static void check_fusion_query(const RootSystem& rs, const FusionQuery& q) {
  int l = q.lambda.level;
  for (auto* w : {&q.lambda, &q.mu, &q.nu}) {
    if (!(w->finite.algebra == rs.id())) throw std::invalid_argument("fusion query mixes algebras");
    if (w->level != l) throw std::invalid_argument("fusion query mixes levels");
    if (!rs.dominant_integral(w->finite) || rs.level_of(rs.labels(w->finite)) > l)
      throw std::invalid_argument("fusion query weight not admissible at level " + std::to_string(l));
  }
}

int64_t kac_walton_fusion(const FusionQuery& q) {
  auto rs = root_system(q.lambda.finite.algebra);
  check_fusion_query(*rs, q);
  return kac_walton_fusion(*rs, rs->labels(q.lambda.finite), rs->labels(q.mu.finite), rs->labels(q.nu.finite),
                           q.lambda.level);
}

std::string supported_charge(const RootSystem& rs, const Lbl& lambda) {
  const int n = rs.rank();
  const char s = rs.id().series;
  if (lambda == unit(0) && (s == 'A' || s == 'B' || s == 'C' || s == 'D' || s == 'G')) return "theta1";
  if (s == 'B' && lambda == unit(n - 1)) return "spin";
  if (s == 'D' && lambda == unit(n - 1)) return "spin+";
  if (s == 'D' && lambda == unit(n - 2)) return "spin-";
  return "";
}

std::optional<int64_t> paper_fusion_rule(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu,
                                         int level) {
  std::string charge = supported_charge(rs, lambda);
  if (charge.empty()) return std::nullopt;
  for (auto* x : {&lambda, &mu, &nu})
    if (!admissible(rs, *x, level)) throw std::invalid_argument("paper_fusion_rule: weight not admissible");
  const char s = rs.id().series;
  if (s == 'G') return int64_t(g2_graph_rule(mu, nu));
  // Γ bijective: N = dim L(λ)[ν−μ], except the vector charge of B_n at μ = ν.
  if (s == 'B' && charge == "theta1" && mu == nu) return int64_t(mu[rs.rank() - 1] > 0 ? 1 : 0);
  return weight_multiplicity(rs, rs.from_labels(lambda), rs.from_labels(plus(nu, mu, -1)));
}

std::optional<int64_t> paper_fusion_rule(const FusionQuery& q) {
  auto rs = root_system(q.lambda.finite.algebra);
  check_fusion_query(*rs, q);
  return paper_fusion_rule(*rs, rs->labels(q.lambda.finite), rs->labels(q.mu.finite), rs->labels(q.nu.finite),
                           q.lambda.level);
}

// ---------------------------------------------------------------------------

std::vector<Lbl> GeneratingResult::chain(const Lbl& k) const {
  std::vector<Lbl> out{k};
  Lbl cur = k;
  std::set<Lbl> guard{k};
  while (true) {
    auto it = witness.find(cur);
    if (it == witness.end()) break;
    out.push_back(it->second.first);
    cur = it->second.second;
    if (!guard.insert(cur).second) break;
    out.push_back(cur);
  }
  return out;
}

GeneratingResult generating_check(const RootSystem& rs, const std::vector<Lbl>& family, int level) {
  auto adm = admissible_lbls(rs, level);
  std::set<Lbl> charges;
  for (auto& f : family) {
    if (!admissible(rs, f, level)) throw std::invalid_argument("generating_check: family member not admissible");
    charges.insert(f);
    charges.insert(rs.dual(f));
  }
  std::map<Lbl, LblMap> wl;
  for (auto& c : charges) wl[c] = all_weights(rs, dominant_character(rs, c));

  GeneratingResult res;
  std::set<Lbl> reached{Lbl{}};  // the vacuum needs no chain
  std::set<Lbl> sources = charges;
  sources.insert(Lbl{});
  std::vector<Lbl> frontier(sources.begin(), sources.end());
  while (!frontier.empty()) {
    std::vector<Lbl> next;
    for (auto& j : frontier)
      for (auto& i : charges)
        for (auto& [k, m] : kac_walton_decomposition(rs, wl[i], j, level)) {
          (void)m;
          if (reached.insert(k).second) res.witness[k] = {i, j};
          if (sources.insert(k).second) next.push_back(k);
        }
    frontier = std::move(next);
  }
  for (auto& k : adm)
    if (!reached.count(k)) res.unreached.push_back(k);
  res.generating = res.unreached.empty();
  return res;
}

Prop29Result prop29_applicable(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu, int level) {
  Prop29Result r;
  int a = rs.level_of(lambda);
  r.applicable = rs.level_of(mu) <= level - a || rs.level_of(nu) <= level - a;
  if (r.applicable) {
    r.fusion = kac_walton_fusion(rs, lambda, mu, nu, level);
    r.tensor = tensor_multiplicity(rs, lambda, mu, nu);
    r.mismatch = r.fusion != r.tensor;
  }
  return r;
}

Lemma24Result lemma24_conditions(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu,
                                 const Lbl& rho, const Lbl& mu1, const Lbl& nu1, int level, int a, int64_t cap) {
  const int n = rs.rank();
  Lemma24Result r;
  auto fail = [&](const std::string& why) {
    r.failed = why;
    return r;
  };
  const std::pair<const char*, const Lbl*> named[] = {{"λ", &lambda}, {"μ", &mu},   {"ν", &nu},
                                                       {"ρ", &rho},    {"μ1", &mu1}, {"ν1", &nu1}};
  for (auto& [name, x] : named)
    if (!admissible(rs, *x, level)) return fail(std::string(name) + " is not admissible at level " + std::to_string(level));
  int amax = std::max({rs.level_of(lambda), rs.level_of(mu1), rs.level_of(nu1)});
  if (a != amax) return fail("a must equal max((λ|θ),(μ1|θ),(ν1|θ)) = " + std::to_string(amax));
  if (a > level) return fail("a ≤ l");
  if (rs.level_of(rho) > level - a) return fail("(ρ|θ) ≤ l−a");
  auto chl = dominant_character(rs, lambda);
  for (auto& [w, m] : chl.mults)
    if (m > 1) return fail("weight spaces of L(λ) have dimension ≤ 1");
  if (kac_walton_fusion(rs, lambda, mu1, nu1, a) != 1) return fail("dim V^a(ν1; λ, μ1) = 1");
  r.hypotheses = true;

  Lbl kappa = plus(nu, mu, -1);
  r.a = mu == plus(mu1, rho) && nu == plus(nu1, rho);

  auto one_dim = [&](const Lbl& w) {
    for (auto& [x, m] : dominant_character(rs, w).mults)
      if (m > 1) return false;
    return true;
  };
  bool need_modules = (mu == plus(mu1, rho)) || (nu == plus(nu1, rho));
  if (!need_modules) return r;

  auto L = realize_module(rs, lambda, cap);
  auto M1 = realize_module(rs, mu1, cap);
  auto N1 = realize_module(rs, nu1, cap);
  auto homs = hom_space_basis(L, M1, N1);
  const auto& ublk = L.block(kappa);

  if (mu == plus(mu1, rho)) {
    bool sub = tensor_multiplicity(rs, nu1, rho, nu) >= 1;
    bool dims = one_dim(nu1);
    bool pairing = !homs.empty() && !ublk.empty();
    for (auto& T : homs)
      if (ublk.empty() || is_zero(T.apply(ublk[0], 0))) pairing = false;
    r.b = sub && dims && pairing;
    r.notes.push_back(std::string("(b): L(ν) ⊂ L(ν1)⊗L(ρ) ") + (sub ? "yes" : "no") + ", L(ν1) weight spaces ≤ 1 " +
                      (dims ? "yes" : "no") + ", T(L(λ)[ν−μ]⊗v_μ1) ≠ 0 " + (pairing ? "yes" : "no"));
  }
  if (nu == plus(nu1, rho)) {
    bool sub = tensor_multiplicity(rs, mu1, rho, mu) >= 1;
    bool dims = one_dim(mu1);
    Lbl need = plus(nu1, kappa, -1);
    const auto& vblk = M1.block(need);
    bool pairing = !homs.empty() && !ublk.empty() && !vblk.empty();
    for (auto& T : homs) {
      if (!pairing) break;
      QVec img = T.apply(ublk[0], vblk[0]);
      QVec top(N1.dim);
      top[0] = 1;
      if (sgn(N1.pair(img, top)) == 0) pairing = false;
    }
    r.c = sub && dims && pairing;
    r.notes.push_back(std::string("(c): L(μ) ⊂ L(μ1)⊗L(ρ) ") + (sub ? "yes" : "no") + ", L(μ1) weight spaces ≤ 1 " +
                      (dims ? "yes" : "no") + ", <T(u⊗u')|v_ν1> ≠ 0 " + (pairing ? "yes" : "no"));
  }
  (void)n;
  return r;
}

// ---------------------------------------------------------------------------

FusionSweep fusion_agreement_sweep(const AlgebraId& id, int level, Exec exec) {
  auto rs = root_system(id);
  auto adm = admissible_lbls(*rs, level);
  FusionSweep st;
  st.algebra = id.name();
  st.level = level;
  std::vector<Lbl> charges;
  for (auto& x : adm)
    if (!supported_charge(*rs, x).empty()) charges.push_back(x);
  struct Job {
    Lbl lambda, mu;
  };
  std::vector<Job> jobs;
  for (auto& c : charges)
    for (auto& m : adm) jobs.push_back({c, m});
  std::vector<FusionSweep> part(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::map<Lbl, LblMap> wl;
  for (auto& c : charges) wl[c] = all_weights(*rs, dominant_character(*rs, c));
  const int n = rs->rank();
  auto body = [&](int64_t j) {
    try {
      auto& job = jobs[j];
      auto d = kac_walton_decomposition(*rs, wl.at(job.lambda), job.mu, level);
      for (auto& nu : adm) {
        auto it = d.find(nu);
        int64_t kw = it == d.end() ? 0 : it->second;
        int64_t rule = *paper_fusion_rule(*rs, job.lambda, job.mu, nu, level);
        ++part[j].supported;
        if (kw) ++part[j].nonzero;
        if (kw != rule) {
          ++part[j].disagreements;
          part[j].samples.push_back(id.name() + " l=" + std::to_string(level) + " λ=" + lbl_str(job.lambda, n) +
                                    " μ=" + lbl_str(job.mu, n) + " ν=" + lbl_str(nu, n) + ": rule " +
                                    std::to_string(rule) + " vs oracle " + std::to_string(kw));
        }
      }
    } catch (const std::exception& e) {
      errors[j] = e.what();
    }
  };
  const int64_t J = int64_t(jobs.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int64_t j = 0; j < J; ++j) body(j);
  } else {
    for (int64_t j = 0; j < J; ++j) body(j);
  }
  for (int64_t j = 0; j < J; ++j) {
    if (!errors[j].empty()) throw std::runtime_error("fusion sweep failed: " + errors[j]);
    st.supported += part[j].supported;
    st.nonzero += part[j].nonzero;
    st.disagreements += part[j].disagreements;
    for (auto& s : part[j].samples)
      if (st.samples.size() < 10) st.samples.push_back(s);
  }
  return st;
}

}  // namespace wzw
