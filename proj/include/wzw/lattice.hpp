#pragma once

#include <complex>
#include <random>
#include <vector>

#include "wzw/linalg.hpp"
#include "wzw/rootsys.hpp"

namespace wzw {

// e^{iπt}, t kept in [0,2).
struct Phase {
  Q t = 0;
  Phase() = default;
  explicit Phase(const Q& x);
  static Phase sign(bool negative) { return Phase(negative ? Q(1) : Q(0)); }
  Phase operator*(const Phase& o) const { return Phase(t + o.t); }
  Phase inv() const { return Phase(-t); }
  bool operator==(const Phase& o) const { return t == o.t; }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  std::complex<double> value() const;
  std::string str() const;  // "exp(i*pi*t)"
};

// Vectors are coordinates in the lattice basis; dual vectors have rational coordinates x with Gx integral.
class IntegralLattice {
 public:
  explicit IntegralLattice(std::vector<std::vector<long>> gram);
  int rank() const { return n_; }
  const std::vector<std::vector<long>>& gram() const { return g_; }
  bool even() const;
  Q ip(const QVec& x, const QVec& y) const;
  bool in_lattice(const QVec& x) const;
  bool in_dual(const QVec& x) const;
  // Columns of G^{-1}: the dual basis in lattice coordinates.
  std::vector<QVec> dual_basis() const;
  long discriminant() const;  // |det G| = |Λ°/Λ|
  QVec dual_coords(const QVec& x) const;  // Gx

 private:
  int n_;
  std::vector<std::vector<long>> g_;
  QMat G_, Ginv_;
};

IntegralLattice random_even_lattice(std::mt19937_64& rng, int rank, int bound = 3);
// Root lattice of a simply-laced type, Gram = Cartan matrix.
IntegralLattice root_lattice(const AlgebraId& id);

// eps: the ±1 cocycle on Λ with ε(e_i,e_j) = (−1)^{G_ij} for i > j and 1 otherwise.
// eps_dual: a bimultiplicative phase cocycle on Λ° whose commutator omega_dual is (−1)^{(α|β)} on Λ.
class Cocycle {
 public:
  explicit Cocycle(IntegralLattice L);
  const IntegralLattice& lattice() const { return L_; }
  // ±1 on lattice vectors (integer coordinates required).
  int eps(const std::vector<long>& a, const std::vector<long>& b) const;
  int basis_value(int i, int j) const { return sign_[i][j]; }
  // Extension to the dual lattice and its commutator.
  Phase eps_dual(const QVec& x, const QVec& y) const;
  Phase omega_dual(const QVec& x, const QVec& y) const;

 private:
  IntegralLattice L_;
  std::vector<std::vector<int>> sign_;
  QMat S_, Lo_;  // in dual-basis coordinates
};

Cocycle build_cocycle(const IntegralLattice& L);

int lattice_fusion(const IntegralLattice& L, const QVec& lambda0, const QVec& mu0, const QVec& nu0);

// κ(λ,μ) = ε(λ,μ) ω(μ−μ0,λ) e^{iπ(μ−μ0|λ)}.
Phase intertwiner_phase(const Cocycle& c, const QVec& lambda, const QVec& mu, const QVec& mu0);

struct RelationCheck {
  bool first = false, second = false;
};
RelationCheck check_intertwiner_relations(const Cocycle& c, const QVec& alpha, const QVec& lambda, const QVec& mu,
                                       const QVec& mu0);

struct CocycleReport {
  int64_t triples = 0, cocycle_fail = 0, unit_fail = 0, commutator_fail = 0, dual_fail = 0;
  bool ok() const { return cocycle_fail == 0 && unit_fail == 0 && commutator_fail == 0 && dual_fail == 0; }
};
// Cocycle identity, ε(α,0)=1 and the commutator on random triples with entries in [−bound, bound];
// dual_fail counts the same identities failing for the extension on random dual vectors.
CocycleReport check_cocycle(const Cocycle& c, std::mt19937_64& rng, int triples, int bound = 6);

}  // namespace wzw
