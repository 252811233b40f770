#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "wzw/exec.hpp"
#include "wzw/lattice.hpp"

namespace wzw {

// Heisenberg algebra on h with an orthogonal basis h_i, (h_i|h_i) = k_i > 0.
// Charges are coordinates in that basis, so (a|b) = Σ k_i a_i b_i.
struct FockSpace {
  std::vector<Q> k;
  explicit FockSpace(std::vector<Q> k);
  int rank() const { return int(k.size()); }
  Q ip(const QVec& a, const QVec& b) const;
};

// Occupation of the creation operator h_i(−n), m times.
struct Occ {
  int i, n, m;
  auto operator<=>(const Occ&) const = default;
};
using Monomial = std::vector<Occ>;  // sorted by (n, i)

// Monomials of total degree N in rank many colours. Cached; the reference stays valid.
const std::vector<Monomial>& fock_level(int rank, int N);
Q monomial_norm2(const FockSpace& F, const Monomial& m);

struct FockBasis {
  QVec charge;
  int cutoff = 0;
  std::vector<std::vector<Monomial>> levels;
  Q offset;  // (λ|λ)/2; a state at level N has energy offset + N
};
FockBasis fock_basis(const FockSpace& F, const QVec& charge, int cutoff);

// One graded block of a mode: source level → target level.
// exact: coefficients in the monomial basis, row = target state; on: the same map in orthonormal bases.
struct ModeBlock {
  int source_level = 0, target_level = 0, rows = 0, cols = 0;
  std::vector<Q> exact;
  std::vector<double> on;
  double at(int r, int c) const { return on[size_t(r) * cols + c]; }
};

// Block of E^-(α,x)E^+(α,x) between levels N → N' (the coefficient of x^{N'−N}).
ModeBlock raw_block(const FockSpace& F, const QVec& alpha, int N, int Nt);

// The mode Y_α(s): L(μ) → L(α+μ), where Y_α(x) = Σ Y_α(s) x^{−s−1}. Maps level N to N − s − 1 − (α|μ).
struct ModeMatrix {
  QVec alpha, source_charge, target_charge;
  Q s;
  int shift = 0;  // target level − source level
  int cutoff = 0;
  std::vector<ModeBlock> blocks;     // source and target level both ≤ cutoff
  std::vector<int> boundary_levels;  // source levels whose image lies beyond the cutoff
};
ModeMatrix heisenberg_mode(const FockSpace& F, const QVec& alpha, const QVec& mu, const Q& s, int cutoff);
// Level shift of Y_α(s) on L(μ); throws if s is not in −1 − (α|μ) + Z.
int mode_shift(const FockSpace& F, const QVec& alpha, const QVec& mu, const Q& s);

// Operator norm by power iteration on AᵀA (relative tolerance 1e−8).
double block_norm(const std::vector<double>& a, int rows, int cols);

// Y(x) = E^-(α,x)E^+(α,x) = Σ Y(n) x^n, with Y(n) raising the level by n:
// Y(n)Y(m)† + Y(m−1)†Y(n−1) = δ_{n,m} for (α|α) = 1.
struct AnticommutatorResult {
  double interior_max = 0;
  int64_t interior_blocks = 0, boundary_blocks = 0;
  double vacuum_max = 0;  // |value − 1| for n = m on the vacuum
};
AnticommutatorResult anticommutator_check(const FockSpace& F, const QVec& alpha, int cutoff);

struct EnergyProbe {
  QVec alpha, mu;
  int order = 0;
  double slack = 1.05;
  std::vector<int> cutoffs;
  std::map<int, std::map<Q, double>> norms;  // cutoff → s → max_N ‖Y(s)|_N‖ / (1 + Δ_N)^r
  std::vector<double> maxima;
  bool pass = false;
};
EnergyProbe energy_bound_probe(const FockSpace& F, const QVec& alpha, const QVec& mu, int order,
                               std::vector<int> cutoffs, int smax = 6, double slack = 1.05,
                               Exec exec = Exec::Parallel);

struct AdjointResult {
  double deviation = 0;
  Phase phase;  // e^{iπ(α|α)/2}
  int64_t blocks = 0;
  bool index_ok = true;  // the adjoint mode s' = 2Δ − 2 − s lands on the transposed block
};
AdjointResult adjoint_phase_check(const FockSpace& F, const QVec& alpha, const QVec& beta, int cutoff);

// P_N = ⟨v_{α+β+γ}| Y_α Y_β v_γ⟩ restricted to intermediate level N, by explicit state sums.
std::vector<Q> braid_leading_coefficients(const FockSpace& F, const QVec& alpha, const QVec& beta,
                                          const QVec& gamma, int cutoff);
// (−1)^N binom(p, N) for rational p.
Q signed_binomial(const Q& p, int N);

struct BraidResult {
  Q pairing;  // (α|β)
  std::vector<Q> lhs, rhs;
  bool factorization_ok = false;
  std::vector<std::complex<double>> ratios;
  std::complex<double> expected;
  double deviation = 0;
};
// Sample points are (arg z1, arg z2) on the unit circle.
BraidResult braid_phase_check(const FockSpace& F, const QVec& alpha, const QVec& beta, const QVec& gamma, int cutoff,
                              const std::vector<std::pair<double, double>>& args);
std::vector<std::pair<double, double>> default_braid_samples();

}  // namespace wzw
