#include <random>
#include <set>

#include "doctest.h"
#include "wzw/highmod.hpp"

using namespace wzw;

namespace {

Lbl lbl(std::initializer_list<int> xs) {
  Lbl x{};
  int i = 0;
  for (int v : xs) x[i++] = v;
  return x;
}

QMat commutator(const QMat& x, const QMat& y) { return x * y - y * x; }

// Exact positive definiteness through symmetric elimination.
bool positive_definite(QMat g) {
  for (int k = 0; k < g.rows; ++k) {
    if (sgn(g(k, k)) <= 0) return false;
    for (int i = k + 1; i < g.rows; ++i) {
      Q f = g(i, k) / g(k, k);
      for (int j = k; j < g.cols; ++j) g(i, j) -= f * g(k, j);
    }
  }
  return true;
}

void check_realization(const RootSystem& rs, const ModuleRealization& R) {
  const int n = rs.rank();
  std::vector<QMat> E, F, H;
  for (int i = 0; i < n; ++i) {
    E.push_back(R.E[i].dense());
    F.push_back(R.F[i].dense());
    H.push_back(R.H(i).dense());
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QMat c = commutator(E[i], F[j]);
      CHECK(c == (i == j ? H[i] : QMat(R.dim, R.dim)));
      QMat he = commutator(H[i], E[j]), hf = commutator(H[i], F[j]);
      QMat e2 = E[j], f2 = F[j];
      for (auto& x : e2.a) x *= rs.cartan(j, i);
      for (auto& x : f2.a) x *= -rs.cartan(j, i);
      CHECK(he == e2);
      CHECK(hf == f2);
    }
  QMat G = R.gram_dense();
  CHECK(G == transpose(G));
  CHECK(positive_definite(G));
  for (int i = 0; i < n; ++i) CHECK(transpose(F[i]) * G == G * E[i]);
}

}  // namespace

TEST_CASE("G2 seven-dimensional module: weights ±ϑ1, ±η, ±α1, 0") {
  auto rs = root_system("G2");
  auto ch = full_character(*rs, rs->fundamental_weights()[0]);
  CHECK(ch.dim == 7);
  auto all = all_weights(*rs, ch);
  CHECK(all.size() == 7);
  Lbl t1 = lbl({1, 0}), a1 = rs->alpha_lbl(0);
  Lbl eta = lbl({t1[0] - a1[0], t1[1] - a1[1]});
  std::set<Lbl> expect;
  for (Lbl w : {t1, eta, a1}) {
    expect.insert(w);
    expect.insert(lbl({-w[0], -w[1]}));
  }
  expect.insert(Lbl{});
  std::set<Lbl> got;
  for (auto& [w, m] : all) {
    got.insert(w);
    CHECK(m == 1);
  }
  CHECK(got == expect);
  CHECK(full_character(*rs, rs->highest_root()).dim == 14);
}

TEST_CASE("spin modules have dimension 2^n") {
  for (int n = 2; n <= 5; ++n) {
    auto b = root_system(AlgebraId{'B', n});
    Lbl s{};
    s[n - 1] = 1;
    CHECK(dominant_character(*b, s).dim == (1 << n));
    auto d = root_system(AlgebraId{'D', n + 1});
    Lbl sp{}, sm{};
    sp[n] = 1;
    sm[n - 1] = 1;
    CHECK(dominant_character(*d, sp).dim == (1 << n));
    CHECK(dominant_character(*d, sm).dim == (1 << n));
  }
}

TEST_CASE("so(2n+2) vector module has weights ±θi") {
  for (int n = 2; n <= 4; ++n) {
    auto rs = root_system(AlgebraId{'D', n + 1});
    auto th = classical_basis(*rs);
    auto ch = full_character(*rs, th[0]);
    auto all = all_weights(*rs, ch);
    CHECK(all.size() == size_t(2 * n + 2));
    for (auto& t : th) {
      Weight m = t;
      for (auto& c : m.coords) c = -c;
      CHECK(all.count(rs->labels(t)) == 1);
      CHECK(all.count(rs->labels(m)) == 1);
    }
  }
}

TEST_CASE("trivial module and highest weight multiplicity") {
  auto rs = root_system("B3");
  auto ch = full_character(*rs, rs->zero());
  CHECK(ch.dim == 1);
  CHECK(ch.mults.size() == 1);
  for (int i = 0; i < 3; ++i) {
    Weight w = rs->fundamental_weights()[i];
    CHECK(weight_multiplicity(*rs, w, w) == 1);
  }
  // non-integral offsets are not weights
  Weight half = rs->zero();
  half.coords[0] = Q(1, 3);
  CHECK(weight_multiplicity(*rs, rs->highest_root(), half) == 0);
}

TEST_CASE("cap is enforced") {
  auto rs = root_system("E8");
  CHECK_THROWS_AS(full_character(*rs, rs->highest_root(), 100), CapExceeded);
  CHECK_THROWS_AS(realize_module(*rs, rs->labels(rs->highest_root()), 100), CapExceeded);
}

TEST_CASE("multiplicities are Weyl invariant") {
  std::mt19937 gen(5);
  for (auto s : {"A3", "B2", "C3", "G2"}) {
    auto rs = root_system(s);
    const int n = rs->rank();
    Lbl hw{};
    hw[0] = 2;
    hw[n - 1] += 1;
    auto all = all_weights(*rs, dominant_character(*rs, hw));
    std::uniform_int_distribution<int> idx(0, n - 1);
    for (auto& [w, m] : all) {
      Lbl y = w;
      for (int t = 0; t < 6; ++t) {
        int i = idx(gen), c = y[i];
        for (int j = 0; j < n; ++j) y[j] -= c * rs->cartan(i, j);
      }
      CHECK(all.at(y) == m);
      CHECK(weight_multiplicity(*rs, rs->from_labels(hw), rs->from_labels(y)) == m);
    }
  }
}

TEST_CASE("Freudenthal agrees with explicit module construction up to dimension 64") {
  for (auto s : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"}) {
    auto rs = root_system(s);
    const int n = rs->rank();
    std::vector<Lbl> todo{Lbl{}};
    std::set<Lbl> seen{Lbl{}};
    for (size_t q = 0; q < todo.size(); ++q) {
      Lbl hw = todo[q];
      CAPTURE(s);
      auto all = all_weights(*rs, dominant_character(*rs, hw));
      auto R = realize_module(*rs, hw, 64);
      int64_t total = 0;
      for (auto& [w, m] : all) {
        CHECK(int64_t(R.block(w).size()) == m);
        total += m;
      }
      CHECK(total == R.dim);
      CHECK(R.index.size() == all.size());
      for (int i = 0; i < n; ++i) {
        Lbl up = hw;
        up[i] += 1;
        if (rs->weyl_dimension(up) <= 64 && seen.insert(up).second) todo.push_back(up);
      }
    }
  }
}

TEST_CASE("realizations satisfy the Chevalley relations and unitarity") {
  for (auto [s, hw] : std::vector<std::pair<const char*, Lbl>>{{"A1", lbl({1})},
                                                               {"A1", lbl({4})},
                                                               {"A2", lbl({1, 1})},
                                                               {"B2", lbl({0, 1})},
                                                               {"B2", lbl({1, 1})},
                                                               {"C3", lbl({1, 0, 0})},
                                                               {"D4", lbl({0, 0, 1, 0})},
                                                               {"D4", lbl({0, 1, 0, 0})},
                                                               {"G2", lbl({1, 0})},
                                                               {"G2", lbl({0, 1})},
                                                               {"B3", lbl({1, 0, 1})}}) {
    auto rs = root_system(s);
    CAPTURE(s);
    auto R = realize_module(*rs, hw);
    check_realization(*rs, R);
  }
}

TEST_CASE("A1 fundamental: E and F are the elementary nilpotents") {
  auto rs = root_system("A1");
  auto R = realize_module(*rs, lbl({1}));
  REQUIRE(R.dim == 2);
  QMat E = R.E[0].dense(), F = R.F[0].dense();
  CHECK(E(0, 1) == 1);
  CHECK(F(1, 0) == 1);
  CHECK(E(1, 0) == 0);
  CHECK(F(0, 1) == 0);
}

TEST_CASE("sp(2n) standard module has weights ±ϑi") {
  for (int n = 2; n <= 4; ++n) {
    auto rs = root_system(AlgebraId{'C', n});
    auto e = classical_basis(*rs);
    auto R = realize_module(*rs, e[0]);
    CHECK(R.dim == 2 * n);
    for (auto& t : e) {
      Weight m = t;
      for (auto& c : m.coords) c = -c;
      CHECK(R.has_weight(rs->labels(t)));
      CHECK(R.has_weight(rs->labels(m)));
    }
  }
}

namespace {

void check_intertwiner(const RootSystem& rs, const ModuleRealization& L, const ModuleRealization& M,
                       const ModuleRealization& N, const HomMap& T) {
  for (int i = 0; i < rs.rank(); ++i)
    for (const std::vector<SpMat>* gen : {&L.E, &L.F}) {
      bool raising = gen == &L.E;
      const SpMat& XL = raising ? L.E[i] : L.F[i];
      const SpMat& XM = raising ? M.E[i] : M.F[i];
      const SpMat& XN = raising ? N.E[i] : N.F[i];
      for (int a = 0; a < L.dim; ++a)
        for (int b = 0; b < M.dim; ++b) {
          QVec lhs(N.dim);
          for (auto& [a2, x] : XL.col[a]) {
            QVec t = T.apply(a2, b);
            for (int k = 0; k < N.dim; ++k) lhs[k] += x * t[k];
          }
          for (auto& [b2, x] : XM.col[b]) {
            QVec t = T.apply(a, b2);
            for (int k = 0; k < N.dim; ++k) lhs[k] += x * t[k];
          }
          QVec rhs = XN.apply(T.apply(a, b));
          CHECK(lhs == rhs);
        }
    }
}

}  // namespace

TEST_CASE("hom spaces") {
  auto g2 = root_system("G2");
  auto V7 = realize_module(*g2, lbl({1, 0}));
  auto homs = hom_space_basis(V7, V7, V7);
  CHECK(homs.size() == 1);
  check_intertwiner(*g2, V7, V7, V7, homs[0]);
  auto V0 = realize_module(*g2, Lbl{});
  CHECK(hom_space_basis(V7, V7, V0).size() == 1);
  CHECK(hom_space_basis(V0, V7, V7).size() == 1);
  auto V14 = realize_module(*g2, lbl({0, 1}));
  auto h14 = hom_space_basis(V7, V7, V14);
  CHECK(h14.size() == 1);
  check_intertwiner(*g2, V7, V7, V14, h14[0]);

  auto a2 = root_system("A2");
  auto W1 = realize_module(*a2, lbl({1, 0})), W2 = realize_module(*a2, lbl({0, 1}));
  auto W0 = realize_module(*a2, Lbl{});
  CHECK(hom_space_basis(W1, W1, W0).empty());
  CHECK(hom_space_basis(W1, W2, W0).size() == 1);
  auto W11 = realize_module(*a2, lbl({1, 1}));
  auto h8 = hom_space_basis(W11, W11, W11);
  CHECK(h8.size() == 2);
  for (auto& T : h8) check_intertwiner(*a2, W11, W11, W11, T);
}
