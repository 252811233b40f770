#include "wzw/highmod.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_set>

namespace wzw {

namespace {
std::atomic<int64_t> g_cap{-1};
}

int64_t default_cap() {
  int64_t c = g_cap.load();
  if (c > 0) return c;
  if (const char* env = std::getenv("WZW_CAP")) {
    try {
      int64_t v = std::stoll(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 512;
}

void set_default_cap(int64_t cap) { g_cap.store(cap); }

int64_t DominantCharacter::mult(const Lbl& w) const {
  for (auto& [x, m] : mults)
    if (x == w) return m;
  return 0;
}

DominantCharacter dominant_character(const RootSystem& rs, const Lbl& hw) {
  if (!rs.dominant(hw)) throw std::invalid_argument("highest weight is not dominant");
  const int n = rs.rank();
  const auto& roots = rs.root_lbls();

  std::vector<Lbl> doms{hw};
  std::unordered_set<Lbl, LblHash> seen{hw};
  for (size_t q = 0; q < doms.size(); ++q) {
    for (auto& b : roots) {
      Lbl z = doms[q];
      for (int i = 0; i < n; ++i) z[i] -= b[i];
      Lbl d = rs.to_dominant(z).weight;
      if (!seen.count(d) && rs.dominates(hw, d)) {
        seen.insert(d);
        doms.push_back(d);
      }
    }
  }
  std::stable_sort(doms.begin(), doms.end(), [&](const Lbl& a, const Lbl& b) {
    return rs.height_scaled(a) > rs.height_scaled(b);
  });

  Lbl rho = rs.rho_lbl();
  auto shift = [&](Lbl x) {
    for (int i = 0; i < n; ++i) x[i] += rho[i];
    return x;
  };
  const int64_t top = rs.ip_scaled(shift(hw), shift(hw));

  LblMap m;
  m[hw] = 1;
  DominantCharacter ch;
  ch.hw = hw;
  ch.highest_weight = rs.from_labels(hw);
  ch.mults.emplace_back(hw, 1);
  for (size_t q = 1; q < doms.size(); ++q) {
    const Lbl& mu = doms[q];
    int64_t num = 0;
    for (auto& a : roots) {
      Lbl x = mu;
      while (true) {
        for (int i = 0; i < n; ++i) x[i] += a[i];
        auto it = m.find(rs.to_dominant(x).weight);
        if (it == m.end()) break;
        num += rs.ip_scaled(x, a) * it->second;
      }
    }
    int64_t den = top - rs.ip_scaled(shift(mu), shift(mu));
    num *= 2;
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    int64_t v = num / den;
    if (v > 0) {
      m[mu] = v;
      ch.mults.emplace_back(mu, v);
    }
  }
  ch.dim = 0;
  for (auto& [w, k] : ch.mults) ch.dim += k * int64_t(orbit(rs, w).size());
  return ch;
}

DominantCharacter full_character(const RootSystem& rs, const Weight& hw, int64_t cap) {
  Lbl x = rs.labels(hw);
  if (!rs.dominant(x)) throw std::invalid_argument("full_character: weight is not dominant");
  int64_t d = rs.weyl_dimension(x);
  if (d > cap) throw CapExceeded("full_character", d, cap);
  auto ch = dominant_character(rs, x);
  if (ch.dim != d) throw std::logic_error("character dimension disagrees with the Weyl dimension formula");
  return ch;
}

int64_t weight_multiplicity(const RootSystem& rs, const Weight& hw, const Weight& mu) {
  Lbl x = rs.labels(hw);
  if (!rs.dominant(x)) throw std::invalid_argument("weight_multiplicity: weight is not dominant");
  QVec f = rs.to_fundamental(mu);
  for (auto& c : f)
    if (!is_integer(c)) return 0;
  Lbl y = rs.labels(mu);
  Lbl d = rs.to_dominant(y).weight;
  if (!rs.dominates(x, d)) return 0;
  return dominant_character(rs, x).mult(d);
}

std::vector<Lbl> orbit(const RootSystem& rs, const Lbl& w) {
  const int n = rs.rank();
  std::vector<Lbl> out{w};
  std::unordered_set<Lbl, LblHash> seen{w};
  for (size_t q = 0; q < out.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      int c = out[q][i];
      if (c <= 0) continue;
      Lbl z = out[q];
      for (int j = 0; j < n; ++j) z[j] -= c * rs.cartan(i, j);
      if (seen.insert(z).second) out.push_back(z);
    }
  }
  return out;
}

LblMap all_weights(const RootSystem& rs, const DominantCharacter& ch) {
  LblMap m;
  for (auto& [w, k] : ch.mults)
    for (auto& x : orbit(rs, w)) m[x] = k;
  return m;
}

// ---------------------------------------------------------------------------

Q ModuleRealization::gram(int a, int b) const {
  if (wt[a] != wt[b]) return 0;
  return gram_block.at(wt[a])(pos[a], pos[b]);
}

QMat ModuleRealization::gram_dense() const {
  QMat g(dim, dim);
  for (auto& [w, idx] : index) {
    const QMat& blk = gram_block.at(w);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) g(idx[i], idx[j]) = blk(int(i), int(j));
  }
  return g;
}

SpMat ModuleRealization::H(int i) const {
  SpMat h(dim, dim);
  for (int k = 0; k < dim; ++k)
    if (wt[k][i] != 0) h.col[k].emplace_back(k, Q(wt[k][i]));
  return h;
}

std::vector<Weight> ModuleRealization::basis_weights(const RootSystem& rs) const {
  std::vector<Weight> out;
  for (auto& w : wt) out.push_back(rs.from_labels(w));
  return out;
}

const std::vector<int>& ModuleRealization::block(const Lbl& w) const {
  static const std::vector<int> empty;
  auto it = index.find(w);
  return it == index.end() ? empty : it->second;
}

Q ModuleRealization::pair(const QVec& u, const QVec& v) const {
  Q s = 0;
  for (auto& [w, idx] : index) {
    const QMat& blk = gram_block.at(w);
    for (size_t i = 0; i < idx.size(); ++i) {
      if (sgn(u[idx[i]]) == 0) continue;
      for (size_t j = 0; j < idx.size(); ++j)
        if (sgn(v[idx[j]]) != 0) s += u[idx[i]] * blk(int(i), int(j)) * v[idx[j]];
    }
  }
  return s;
}

ModuleRealization realize_module(const RootSystem& rs, const Weight& hw, int64_t cap) {
  return realize_module(rs, rs.labels(hw), cap);
}

ModuleRealization realize_module(const RootSystem& rs, const Lbl& hw, int64_t cap) {
  if (!rs.dominant(hw)) throw std::invalid_argument("realize_module: weight is not dominant");
  const int n = rs.rank();
  int64_t d = rs.weyl_dimension(hw);
  if (d > cap) throw CapExceeded("realize_module", d, cap);

  ModuleRealization R;
  R.algebra = rs.id();
  R.hw = hw;
  R.E.assign(n, SpMat(int(d), int(d)));
  R.F.assign(n, SpMat(int(d), int(d)));
  R.wt.push_back(hw);
  R.parent.emplace_back(-1, -1);
  R.pos.push_back(0);
  R.index[hw] = {0};
  QMat g0(1, 1);
  g0(0, 0) = 1;
  R.gram_block[hw] = g0;

  auto sub = [&](Lbl x, int i) {
    for (int j = 0; j < n; ++j) x[j] -= rs.cartan(i, j);
    return x;
  };
  auto add = [&](Lbl x, int i) {
    for (int j = 0; j < n; ++j) x[j] += rs.cartan(i, j);
    return x;
  };

  std::vector<Lbl> layer{hw};
  while (!layer.empty()) {
    std::map<Lbl, int> cand_weights;
    for (auto& v : layer)
      for (int i = 0; i < n; ++i) cand_weights[sub(v, i)] = 1;
    std::vector<Lbl> next;
    for (auto& [mu, unused] : cand_weights) {
      (void)unused;
      // Blocks L[μ+α_j] that E_j maps into.
      std::vector<int> off(n, -1);
      int total = 0;
      for (int j = 0; j < n; ++j) {
        auto it = R.index.find(add(mu, j));
        if (it == R.index.end()) continue;
        off[j] = total;
        total += int(it->second.size());
      }
      struct Cand {
        int i, b;
        QVec img;
      };
      std::vector<Cand> cands;
      for (int i = 0; i < n; ++i) {
        auto it = R.index.find(add(mu, i));
        if (it == R.index.end()) continue;
        for (int b : it->second) {
          QVec img(total);
          for (int j = 0; j < n; ++j) {
            if (off[j] < 0) continue;
            // E_j F_i b = F_i E_j b + δ_ij <wt(b), α_i^∨> b
            for (auto& [c, x] : R.E[j].col[b])
              for (auto& [e, y] : R.F[i].col[c]) img[off[j] + R.pos[e]] += x * y;
            if (i == j && R.wt[b][i] != 0) img[off[j] + R.pos[b]] += R.wt[b][i];
          }
          cands.push_back({i, b, std::move(img)});
        }
      }
      SpanBasis span(total);
      std::vector<int> chosen;
      for (size_t c = 0; c < cands.size(); ++c)
        if (span.add(cands[c].img)) chosen.push_back(int(c));
      if (chosen.empty()) continue;

      const int r = int(chosen.size());
      std::vector<int> ids;
      for (int c : chosen) {
        int k = int(R.wt.size());
        ids.push_back(k);
        R.wt.push_back(mu);
        R.parent.emplace_back(cands[c].i, cands[c].b);
        R.pos.push_back(int(ids.size()) - 1);
      }
      if (int(R.wt.size()) > d) throw std::logic_error("realize_module: basis exceeds Weyl dimension");
      R.index[mu] = ids;

      // E columns of the new vectors.
      for (int t = 0; t < r; ++t) {
        const QVec& img = cands[chosen[t]].img;
        for (int j = 0; j < n; ++j) {
          if (off[j] < 0) continue;
          const auto& blk = R.index.at(add(mu, j));
          for (size_t p = 0; p < blk.size(); ++p)
            if (sgn(img[off[j] + p]) != 0) R.E[j].col[ids[t]].emplace_back(blk[p], img[off[j] + p]);
        }
      }
      // F columns of the parents: chosen ones are basis vectors, the rest are solved for.
      QMat M(total, r);
      for (int t = 0; t < r; ++t)
        for (int p = 0; p < total; ++p) M(p, t) = cands[chosen[t]].img[p];
      std::vector<int> which(cands.size(), -1);
      for (int t = 0; t < r; ++t) which[chosen[t]] = t;
      for (size_t c = 0; c < cands.size(); ++c) {
        auto& col = R.F[cands[c].i].col[cands[c].b];
        if (which[c] >= 0) {
          col.emplace_back(ids[which[c]], Q(1));
          continue;
        }
        auto x = solve(M, cands[c].img);
        if (!x) throw std::logic_error("realize_module: dependent candidate not in span");
        for (int t = 0; t < r; ++t)
          if (sgn((*x)[t]) != 0) col.emplace_back(ids[t], (*x)[t]);
      }
      // Contravariant form: <F_i b, c> = <b, E_i c>.
      QMat G(r, r);
      for (int s = 0; s < r; ++s) {
        const Cand& cs = cands[chosen[s]];
        Lbl up = add(mu, cs.i);
        const QMat& gb = R.gram_block.at(up);
        for (int t = 0; t < r; ++t) {
          const QVec& img = cands[chosen[t]].img;
          Q v = 0;
          int ps = R.pos[cs.b];
          int sz = int(R.index.at(up).size());
          for (int p = 0; p < sz; ++p)
            if (sgn(img[off[cs.i] + p]) != 0) v += gb(ps, p) * img[off[cs.i] + p];
          G(s, t) = v;
        }
      }
      R.gram_block[mu] = G;
      next.push_back(mu);
    }
    layer = std::move(next);
  }
  R.dim = int(R.wt.size());
  if (R.dim != d) throw std::logic_error("realize_module: dimension disagrees with the Weyl dimension formula");
  for (auto& m : R.E) m.rows = m.cols = R.dim;
  for (auto& m : R.F) m.rows = m.cols = R.dim;
  return R;
}

// ---------------------------------------------------------------------------

QVec HomMap::apply(int a, int b) const {
  QVec out(dim_nu);
  for (auto& [k, x] : col[size_t(a) * dim_mu + b]) out[k] += x;
  return out;
}

QVec HomMap::apply(const QVec& u, const QVec& v) const {
  QVec out(dim_nu);
  for (int a = 0; a < dim_lambda; ++a) {
    if (sgn(u[a]) == 0) continue;
    for (int b = 0; b < dim_mu; ++b) {
      if (sgn(v[b]) == 0) continue;
      Q c = u[a] * v[b];
      for (auto& [k, x] : col[size_t(a) * dim_mu + b]) out[k] += c * x;
    }
  }
  return out;
}

std::vector<HomMap> hom_space_basis(const ModuleRealization& L, const ModuleRealization& M,
                                    const ModuleRealization& N) {
  const auto rs = root_system(L.algebra);
  const int n = rs->rank();
  const int dm = M.dim;
  auto key = [&](int a, int b) { return int64_t(a) * dm + b; };

  auto pairs_at = [&](const Lbl& k) {
    std::vector<std::pair<int, int>> out;
    for (auto& [x, ia] : L.index) {
      Lbl y;
      for (int i = 0; i < 8; ++i) y[i] = k[i] - x[i];
      auto it = M.index.find(y);
      if (it == M.index.end()) continue;
      for (int a : ia)
        for (int b : it->second) out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  Lbl nu = N.hw;
  auto P = pairs_at(nu);
  std::vector<HomMap> result;
  if (P.empty()) return result;

  // Highest-weight vectors of weight ν: kernel of every E_j.
  std::vector<std::unordered_map<int64_t, int>> rowmap(n);
  std::vector<int> rowoff(n, 0);
  int rows = 0;
  for (int j = 0; j < n; ++j) {
    Lbl up = nu;
    for (int t = 0; t < n; ++t) up[t] += rs->cartan(j, t);
    auto Pu = pairs_at(up);
    rowoff[j] = rows;
    for (size_t q = 0; q < Pu.size(); ++q) rowmap[j][key(Pu[q].first, Pu[q].second)] = rows + int(q);
    rows += int(Pu.size());
  }
  QMat Emat(rows, int(P.size()));
  for (size_t c = 0; c < P.size(); ++c) {
    auto [a, b] = P[c];
    for (int j = 0; j < n; ++j) {
      for (auto& [a2, x] : L.E[j].col[a]) Emat(rowmap[j].at(key(a2, b)), int(c)) += x;
      for (auto& [b2, x] : M.E[j].col[b]) Emat(rowmap[j].at(key(a, b2)), int(c)) += x;
    }
  }
  auto hws = nullspace(Emat);

  for (auto& w : hws) {
    // S: L(ν) → L(λ)⊗L(μ), generated from S(v_ν) = w along the parent chain.
    std::vector<std::unordered_map<int64_t, Q>> S(N.dim);
    for (size_t c = 0; c < P.size(); ++c)
      if (sgn(w[c]) != 0) S[0][key(P[c].first, P[c].second)] = w[c];
    for (int k = 1; k < N.dim; ++k) {
      auto [i, p] = N.parent[k];
      auto& out = S[k];
      for (auto& [kk, x] : S[p]) {
        int a = int(kk / dm), b = int(kk % dm);
        for (auto& [a2, y] : L.F[i].col[a]) out[key(a2, b)] += x * y;
        for (auto& [b2, y] : M.F[i].col[b]) out[key(a, b2)] += x * y;
      }
      for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    // T = G_ν^{-1} S^T (G_λ ⊗ G_μ), block by block.
    HomMap T;
    T.dim_lambda = L.dim;
    T.dim_mu = M.dim;
    T.dim_nu = N.dim;
    T.col.assign(size_t(L.dim) * M.dim, {});
    for (auto& [kappa, ks] : N.index) {
      auto Gi = inverse(N.gram_block.at(kappa));
      if (!Gi) throw std::logic_error("hom_space_basis: singular Gram block");
      const int r = int(ks.size());
      std::unordered_map<int64_t, QVec> U;
      for (int t = 0; t < r; ++t) {
        for (auto& [kk, s] : S[ks[t]]) {
          int a2 = int(kk / dm), b2 = int(kk % dm);
          const auto& ba = L.block(L.wt[a2]);
          const auto& bb = M.block(M.wt[b2]);
          for (int a : ba) {
            Q ga = L.gram(a2, a);
            if (sgn(ga) == 0) continue;
            for (int b : bb) {
              Q gb = M.gram(b2, b);
              if (sgn(gb) == 0) continue;
              auto& u = U[key(a, b)];
              if (u.empty()) u.assign(r, Q(0));
              u[t] += s * ga * gb;
            }
          }
        }
      }
      for (auto& [kk, u] : U) {
        QVec v = mul(*Gi, u);
        for (int t = 0; t < r; ++t)
          if (sgn(v[t]) != 0) T.col[size_t(kk)].emplace_back(ks[t], v[t]);
      }
    }
    result.push_back(std::move(T));
  }
  return result;
}

std::vector<HomMap> hom_space_basis(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                    const Weight& nu, int64_t cap) {
  auto L = realize_module(rs, lambda, cap);
  auto M = realize_module(rs, mu, cap);
  auto N = realize_module(rs, nu, cap);
  return hom_space_basis(L, M, N);
}

}  // namespace wzw
