#include <cmath>

#include "doctest.h"
#include "wzw/heisenberg.hpp"

using namespace wzw;

namespace {

int64_t partitions(int n) {
  std::vector<int64_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

}  // namespace

TEST_CASE("Fock levels and norms") {
  for (int N = 0; N <= 12; ++N) CHECK(int64_t(fock_level(1, N).size()) == partitions(N));
  // bipartitions: Σ p(a)p(N−a)
  for (int N = 0; N <= 8; ++N) {
    int64_t s = 0;
    for (int a = 0; a <= N; ++a) s += partitions(a) * partitions(N - a);
    CHECK(int64_t(fock_level(2, N).size()) == s);
  }
  FockSpace F({Q(2)});
  // h(−1)^2 h(−3): (1·2)^2·2! · (3·2)
  CHECK(monomial_norm2(F, {{0, 1, 2}, {0, 3, 1}}) == 48);
  auto B = fock_basis(F, {Q(1)}, 4);
  CHECK(B.offset == 1);
  CHECK(B.levels.size() == 5);
  CHECK_THROWS(FockSpace({Q(0)}));
}

TEST_CASE("zero charge gives identity modes") {
  FockSpace F({Q(1), Q(3)});
  QVec zero(2);
  QVec mu{Q(1, 2), Q(-1)};
  auto M = heisenberg_mode(F, zero, mu, Q(-1), 6);
  CHECK(M.shift == 0);
  for (auto& b : M.blocks)
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) CHECK(b.exact[size_t(r) * b.cols + c] == (r == c ? 1 : 0));
  CHECK(heisenberg_mode(F, zero, mu, Q(0), 6).blocks.size() == 6);  // lowers by one; level 0 maps to nothing
  auto P = energy_bound_probe(F, zero, mu, 0, {4, 6, 8});
  for (double m : P.maxima) CHECK(m == 1.0);
  CHECK(P.pass);
}

TEST_CASE("mode grading and the lowest matrix element") {
  FockSpace F({Q(1), Q(2)});
  QVec alpha{Q(1, 3), Q(1, 2)}, mu{Q(2), Q(-1, 4)};
  Q am = F.ip(alpha, mu);
  Q s0 = -1 - am;  // level 0 → level 0
  auto M = heisenberg_mode(F, alpha, mu, s0, 5);
  CHECK(M.shift == 0);
  CHECK(M.blocks[0].exact[0] == 1);
  CHECK(M.target_charge == QVec{Q(7, 3), Q(1, 4)});
  // conformal weight raised by Δ_α − s − 1
  Q Delta = F.ip(alpha, alpha) / 2;
  for (int j = -3; j <= 3; ++j) {
    Q s = s0 + j;
    int d = mode_shift(F, alpha, mu, s);
    Q before = F.ip(mu, mu) / 2, after = F.ip(M.target_charge, M.target_charge) / 2 + d;
    CHECK(after - before == Delta - s - 1);
  }
  CHECK_THROWS(mode_shift(F, alpha, mu, Q(0)));
  // boundary levels are reported, not computed
  auto up = heisenberg_mode(F, alpha, mu, s0 - 2, 5);
  CHECK(up.shift == 2);
  CHECK(up.boundary_levels == std::vector<int>{4, 5});
}

TEST_CASE("mode coefficients against a direct series expansion") {
  // rank one, k = 1: E^-(a,x)Ω = exp(Σ a t_n x^n / n)Ω; the x^2 coefficient is a t_2/2 + a^2 t_1^2/2
  FockSpace F({Q(1)});
  Q a(3, 2);
  auto b = raw_block(F, {a}, 0, 2);
  const auto& lv = fock_level(1, 2);
  for (int r = 0; r < b.rows; ++r) {
    if (lv[r] == Monomial{{0, 1, 2}}) CHECK(b.exact[r] == a * a / 2);
    if (lv[r] == Monomial{{0, 2, 1}}) CHECK(b.exact[r] == a / 2);
  }
  // ⟨Ω| E^+(a,x) t_1^2: (t_1 − a x^{−1})^2 → a^2 at x^{−2}
  auto d = raw_block(F, {a}, 2, 0);
  for (int c = 0; c < d.cols; ++c) {
    if (lv[c] == Monomial{{0, 1, 2}}) CHECK(d.exact[c] == a * a);
    if (lv[c] == Monomial{{0, 2, 1}}) CHECK(d.exact[c] == -a);
  }
}

TEST_CASE("fermionic anticommutator for (α|α) = 1") {
  FockSpace F({Q(1)});
  for (int cut : {6, 8, 10}) {
    auto r = anticommutator_check(F, {Q(1)}, cut);
    CHECK(r.interior_max <= 1e-10);
    CHECK(r.vacuum_max <= 1e-12);
    CHECK(r.interior_blocks > 0);
    CHECK(r.boundary_blocks > 0);
  }
  // same relation with the norm split over two directions
  FockSpace G({Q(1, 2), Q(1, 2)});
  CHECK(anticommutator_check(G, {Q(1), Q(1)}, 6).interior_max <= 1e-10);
  CHECK_THROWS(anticommutator_check(F, {Q(2)}, 4));
}

TEST_CASE("energy bound probes") {
  FockSpace F1({Q(1)}), F2({Q(2)});
  auto p0 = energy_bound_probe(F1, {Q(1)}, {Q(0)}, 0, {8, 12, 16});
  CHECK(p0.pass);
  for (double m : p0.maxima) CHECK(std::abs(m - 1.0) < 1e-6);
  auto p1 = energy_bound_probe(F2, {Q(1)}, {Q(0)}, 1, {8, 12, 16});
  CHECK(p1.pass);
  // without the (1+L0) weight the (α|α) = 2 modes grow with the cutoff
  auto grow = energy_bound_probe(F2, {Q(1)}, {Q(0)}, 0, {4, 8, 12});
  CHECK_FALSE(grow.pass);
  auto s = energy_bound_probe(F1, {Q(1)}, {Q(0)}, 0, {4, 6}, 6, 1.05, Exec::Serial);
  auto p = energy_bound_probe(F1, {Q(1)}, {Q(0)}, 0, {4, 6}, 6, 1.05, Exec::Parallel);
  CHECK(s.norms == p.norms);
  CHECK_THROWS(energy_bound_probe(F1, {Q(1)}, {Q(0)}, 0, {8, 4}));
}

TEST_CASE("adjoint modes") {
  FockSpace F({Q(1), Q(1)});
  auto z = adjoint_phase_check(F, {Q(0), Q(0)}, {Q(1, 3), Q(2)}, 6);
  CHECK(z.deviation == 0);
  CHECK(z.phase == Phase());
  FockSpace G({Q(2)});
  auto two = adjoint_phase_check(G, {Q(1)}, {Q(1, 2)}, 8);
  CHECK(two.phase == Phase(Q(1)));
  CHECK(two.deviation <= 1e-9);
  CHECK(two.index_ok);
  auto r = adjoint_phase_check(F, {Q(2, 3), Q(-1, 5)}, {Q(1, 7), Q(3, 4)}, 8);
  CHECK(r.deviation <= 1e-9);
  CHECK(r.index_ok);
  CHECK(r.blocks > 0);
}

TEST_CASE("braiding phase") {
  FockSpace F({Q(1), Q(1)});
  auto S = default_braid_samples();
  QVec g{Q(1, 3), Q(-2, 5)};
  auto r0 = braid_phase_check(F, {Q(1), Q(0)}, {Q(0), Q(1)}, g, 12, S);
  CHECK(r0.factorization_ok);
  CHECK(r0.deviation <= 1e-9);
  auto r1 = braid_phase_check(F, {Q(1), Q(0)}, {Q(1), Q(1)}, g, 12, S);
  CHECK(r1.pairing == 1);
  CHECK(r1.expected.real() == -1.0);
  CHECK(r1.deviation <= 1e-6);
  auto r2 = braid_phase_check(F, {Q(1), Q(1)}, {Q(1), Q(1)}, g, 12, S);
  CHECK(r2.pairing == 2);
  CHECK(r2.deviation <= 1e-6);
  CHECK(r2.factorization_ok);
  // leading coefficients follow (1 − q)^{(α|β)} also for fractional pairings
  QVec a{Q(1, 2), Q(1, 3)}, b{Q(3, 4), Q(-1, 2)};
  auto P = braid_leading_coefficients(F, a, b, g, 8);
  for (int N = 0; N <= 8; ++N) CHECK(P[N] == signed_binomial(F.ip(a, b), N));
  CHECK_THROWS(braid_phase_check(F, a, b, g, 12, S));
  CHECK_THROWS(braid_phase_check(F, {Q(1), Q(0)}, {Q(1), Q(1)}, g, 12, {{0.1, 0.3}}));
}
