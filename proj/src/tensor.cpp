#include "wzw/tensor.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>

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

}  // namespace

LblMap tensor_decomposition(const RootSystem& rs, const LblMap& wl, const Lbl& mu) {
  const int n = rs.rank();
  LblMap out;
  for (auto& [k, m] : wl) {
    Lbl x = k;
    for (int i = 0; i < n; ++i) x[i] += mu[i] + 1;
    auto r = rs.to_dominant(x);
    if (r.sign == 0) continue;
    for (int i = 0; i < n; ++i) r.weight[i] -= 1;
    out[r.weight] += r.sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw std::logic_error("Brauer-Klimyk produced a negative multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

LblMap tensor_decomposition(const RootSystem& rs, const Lbl& lambda, const Lbl& mu) {
  return tensor_decomposition(rs, all_weights(rs, dominant_character(rs, lambda)), mu);
}

int64_t tensor_multiplicity(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu) {
  auto d = tensor_decomposition(rs, lambda, mu);
  auto it = d.find(nu);
  return it == d.end() ? 0 : it->second;
}

static void check_query(const RootSystem& rs, const TensorQuery& q) {
  for (auto* w : {&q.lambda, &q.mu, &q.nu}) {
    if (!(w->algebra == rs.id())) throw std::invalid_argument("tensor query mixes algebras");
    if (!rs.dominant_integral(*w)) throw std::invalid_argument("tensor query weight is not dominant integral");
  }
}

int64_t tensor_multiplicity(const TensorQuery& q, int64_t cap) {
  auto rs = root_system(q.lambda.algebra);
  check_query(*rs, q);
  auto ch = full_character(*rs, q.lambda, cap);
  auto d = tensor_decomposition(*rs, all_weights(*rs, ch), rs->labels(q.mu));
  auto it = d.find(rs->labels(q.nu));
  return it == d.end() ? 0 : it->second;
}

std::string to_string(Cor20 c) {
  switch (c) {
    case Cor20::Zero: return "0";
    case Cor20::One: return "1";
    default: return "not-applicable";
  }
}

Cor20 cor20_criterion(const RootSystem& rs, const LblMap& wl, const Lbl& mu, const Lbl& nu) {
  const int n = rs.rank();
  Lbl kappa = plus(nu, mu, -1);
  auto it = wl.find(kappa);
  if (it == wl.end() || it->second != 1) return Cor20::NotApplicable;
  for (int i = 0; i < n; ++i) {
    Lbl up = plus(kappa, rs.alpha_lbl(i), mu[i] + 1);
    if (wl.count(up)) return Cor20::Zero;
  }
  return Cor20::One;
}

Cor20 cor20_criterion(const TensorQuery& q) {
  auto rs = root_system(q.lambda.algebra);
  check_query(*rs, q);
  auto wl = all_weights(*rs, dominant_character(*rs, rs->labels(q.lambda)));
  return cor20_criterion(*rs, wl, rs->labels(q.mu), rs->labels(q.nu));
}

// ---------------------------------------------------------------------------

Prop11::Prop11(ModuleRealization R) : R_(std::move(R)), rs_(root_system(R_.algebra)) {}

int Prop11::top(const Lbl& kappa, int i) {
  Key key{kappa, i, 0};
  auto it = top_.find(key);
  if (it != top_.end()) return it->second;
  int t = 0;
  Lbl x = kappa;
  while (true) {
    x = plus(x, rs_->alpha_lbl(i));
    if (!R_.has_weight(x)) break;
    ++t;
  }
  top_[key] = t;
  return t;
}

const std::vector<QVec>& Prop11::powers(const Lbl& w, int i, int k) {
  Key key{w, i, k};
  auto it = pow_.find(key);
  if (it != pow_.end()) return it->second;
  if (k == 0) {
    size_t m = R_.block(w).size();
    std::vector<QVec> unit(m, QVec(m));
    for (size_t p = 0; p < m; ++p) unit[p][p] = 1;
    return pow_[key] = std::move(unit);
  }
  const std::vector<QVec>& prev = powers(w, i, k - 1);
  Lbl src = plus(w, rs_->alpha_lbl(i), -(k - 1));
  Lbl dst = plus(src, rs_->alpha_lbl(i), -1);
  const auto& sb = R_.block(src);
  size_t dm = R_.block(dst).size();
  std::vector<QVec> out;
  for (auto& v : prev) {
    QVec o(dm);
    for (size_t p = 0; p < sb.size(); ++p) {
      if (sgn(v[p]) == 0) continue;
      for (auto& [e, x] : R_.F[i].col[sb[p]]) o[R_.pos[e]] += v[p] * x;
    }
    out.push_back(std::move(o));
  }
  return pow_[key] = std::move(out);
}

std::vector<QVec> Prop11::k_subspace(const Lbl& mu, const Lbl& kappa) {
  std::vector<QVec> out;
  if (!R_.has_weight(kappa)) return out;
  for (int i = 0; i < rs_->rank(); ++i) {
    int t = mu[i] + 1;
    if (t > top(kappa, i)) continue;
    for (auto& v : powers(plus(kappa, rs_->alpha_lbl(i), t), i, t)) out.push_back(v);
  }
  return out;
}

int64_t Prop11::multiplicity(const Lbl& mu, const Lbl& nu) {
  Lbl kappa = plus(nu, mu, -1);
  if (!R_.has_weight(kappa)) return 0;
  Key2 key{kappa, Lbl{}};
  for (int i = 0; i < rs_->rank(); ++i) {
    int t = mu[i] + 1;
    key.kv[i] = t <= top(kappa, i) ? t : 0;
  }
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const int m = int(R_.block(kappa).size());
  SpanBasis span(m);
  for (auto& v : k_subspace(mu, kappa)) {
    span.add(v);
    if (span.dim() == m) break;
  }
  int64_t r = m - span.dim();
  memo_[key] = r;
  return r;
}

int64_t prop11_multiplicity(const TensorQuery& q, int64_t cap) {
  auto rs = root_system(q.lambda.algebra);
  check_query(*rs, q);
  Prop11 p(realize_module(*rs, rs->labels(q.lambda), cap));
  return p.multiplicity(rs->labels(q.mu), rs->labels(q.nu));
}

// ---------------------------------------------------------------------------

int g2_graph_rule(const Lbl& mu, const Lbl& nu) {
  static const std::set<std::pair<int, int>> steps = [] {
    auto rs = root_system("G2");
    Lbl t1{1, 0}, a1 = rs->alpha_lbl(0);
    Lbl eta = plus(t1, a1, -1);
    std::set<std::pair<int, int>> s;
    for (auto& w : {t1, eta, a1}) {
      s.insert({w[0], w[1]});
      s.insert({-w[0], -w[1]});
    }
    return s;
  }();
  if (mu == nu) return nu[0] > 0 ? 1 : 0;
  return steps.count({nu[0] - mu[0], nu[1] - mu[1]}) ? 1 : 0;
}

TensorGraph g2_tensor_graph(int height_cap) {
  if (height_cap < 1) throw std::invalid_argument("height cap must be >= 1");
  auto rs = root_system("G2");
  TensorGraph g;
  for (int h = 0; h <= height_cap; ++h)
    for (int b = 0; 2 * b <= h; ++b) g.nodes.push_back(Lbl{h - 2 * b, b});
  auto wl = all_weights(*rs, dominant_character(*rs, Lbl{1, 0}));
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    auto d = tensor_decomposition(*rs, wl, g.nodes[i]);
    for (size_t j = i; j < g.nodes.size(); ++j) {
      auto it = d.find(g.nodes[j]);
      if (it != d.end() && it->second == 1) g.edges.emplace_back(int(i), int(j));
    }
  }
  return g;
}

std::string TensorGraph::to_dot() const {
  std::ostringstream os;
  auto id = [&](int k) { return "w" + std::to_string(nodes[k][0]) + "_" + std::to_string(nodes[k][1]); };
  os << "graph g2_tensor {\n";
  for (size_t k = 0; k < nodes.size(); ++k)
    os << "  " << id(int(k)) << " [label=\"" << nodes[k][0] << "ϑ1+" << nodes[k][1] << "ϑ2\"];\n";
  for (auto [a, b] : edges) os << "  " << id(a) << " -- " << id(b) << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Lbl> dominant_weights_up_to(const RootSystem& rs, int64_t cap) {
  const int n = rs.rank();
  std::vector<Lbl> out{Lbl{}};
  std::set<Lbl> seen{Lbl{}};
  for (size_t q = 0; q < out.size(); ++q)
    for (int i = 0; i < n; ++i) {
      Lbl up = out[q];
      up[i] += 1;
      if (rs.weyl_dimension(up) <= cap && seen.insert(up).second) out.push_back(up);
    }
  std::sort(out.begin(), out.end(), [&](const Lbl& a, const Lbl& b) {
    return std::make_pair(rs.weyl_dimension(a), a) < std::make_pair(rs.weyl_dimension(b), b);
  });
  return out;
}

namespace {

struct LambdaResult {
  int64_t checked = 0, nonzero = 0, applicable = 0, bad = 0;
  std::vector<std::string> samples;
};

LambdaResult sweep_one(const RootSystem& rs, const Lbl& lambda, const std::vector<Lbl>& domain,
                       const std::set<Lbl>& in_domain, int64_t cap) {
  const int n = rs.rank();
  LambdaResult res;
  auto wl = all_weights(rs, dominant_character(rs, lambda));
  Prop11 p11(realize_module(rs, lambda, cap));
  auto note = [&](const Lbl& mu, const Lbl& nu, const std::string& what) {
    ++res.bad;
    if (res.samples.size() < 5)
      res.samples.push_back(rs.id().name() + " λ=" + lbl_str(lambda, n) + " μ=" + lbl_str(mu, n) +
                            " ν=" + lbl_str(nu, n) + ": " + what);
  };
  for (const Lbl& mu : domain) {
    auto bk = tensor_decomposition(rs, wl, mu);
    for (auto& [nu, m] : bk)
      if (!wl.count(plus(nu, mu, -1))) note(mu, nu, "character oracle nonzero outside ν−μ ∈ wt L(λ)");
    for (auto& [kappa, unused] : wl) {
      (void)unused;
      Lbl nu = plus(kappa, mu);
      if (!rs.dominant(nu) || !in_domain.count(nu)) continue;
      ++res.checked;
      auto it = bk.find(nu);
      int64_t a = it == bk.end() ? 0 : it->second;
      int64_t b = p11.multiplicity(mu, nu);
      if (a) ++res.nonzero;
      if (a != b) note(mu, nu, "oracle " + std::to_string(a) + " vs K-subspace " + std::to_string(b));
      Cor20 c = cor20_criterion(rs, wl, mu, nu);
      if (c != Cor20::NotApplicable) {
        ++res.applicable;
        if ((c == Cor20::One ? 1 : 0) != a) note(mu, nu, "oracle " + std::to_string(a) + " vs criterion " + to_string(c));
      }
    }
  }
  return res;
}

}  // namespace

SweepStats tensor_agreement_sweep(const AlgebraId& id, int64_t cap, Exec exec) {
  auto rs = root_system(id);
  auto domain = dominant_weights_up_to(*rs, cap);
  std::set<Lbl> in_domain(domain.begin(), domain.end());
  SweepStats st;
  st.algebra = id.name();
  st.weights = int64_t(domain.size());
  st.triples = st.weights * st.weights * st.weights;
  std::vector<LambdaResult> results(domain.size());
  std::vector<std::string> errors(domain.size());
  const int64_t N = int64_t(domain.size());
  auto body = [&](int64_t k) {
    try {
      results[k] = sweep_one(*rs, domain[k], domain, in_domain, cap);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  };
  if (exec == Exec::Parallel) {
    // Largest modules first keeps the dynamic schedule balanced.
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t k = N - 1; k >= 0; --k) body(k);
  } else {
    for (int64_t k = N - 1; k >= 0; --k) body(k);
  }
  for (int64_t k = 0; k < N; ++k) {
    if (!errors[k].empty()) throw std::runtime_error("tensor sweep failed: " + errors[k]);
    auto& r = results[k];
    st.checked += r.checked;
    st.nonzero += r.nonzero;
    st.cor20_applicable += r.applicable;
    st.disagreements += r.bad;
    for (auto& s : r.samples)
      if (st.samples.size() < 10) st.samples.push_back(s);
  }
  return st;
}

}  // namespace wzw
