#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wzw/linalg.hpp"

namespace wzw {

struct AlgebraId {
  char series = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  static AlgebraId parse(const std::string& s);
  bool simply_laced() const { return series == 'A' || series == 'D' || series == 'E'; }
  bool operator==(const AlgebraId&) const = default;
};

struct Weight {
  AlgebraId algebra;
  QVec coords;  // simple-root basis
  bool operator==(const Weight&) const = default;
};

// Dynkin labels of an integral weight; rank never exceeds 8.
using Lbl = std::array<int, 8>;

struct LblHash {
  size_t operator()(const Lbl& x) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (int v : x) h = (h ^ uint64_t(uint32_t(v))) * 1099511628211ull;
    return size_t(h);
  }
};

struct Reduction {
  Weight weight;
  int sign;
  int length;
};

struct LblReduction {
  Lbl weight;
  int sign;
  int length;
};

class RootSystem {
 public:
  explicit RootSystem(AlgebraId id);

  const AlgebraId& id() const { return id_; }
  int rank() const { return n_; }
  int dim() const { return n_ + 2 * int(pos_.size()); }
  int cartan(int i, int j) const { return A_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return A_; }
  const QMat& gram() const { return B_; }  // (α_i|α_j)
  const QMat& inverse_cartan() const { return Ainv_; }

  // Positive roots as simple-root coordinates, ordered by height.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_; }
  std::vector<Weight> simple_roots() const;
  std::vector<Weight> positive_root_weights() const;
  std::vector<Weight> fundamental_weights() const;
  Weight highest_root() const;
  Weight weyl_vector() const;
  int dual_coxeter() const { return hvee_; }
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }

  Weight zero() const { return Weight{id_, QVec(n_)}; }
  Weight root_weight(const std::vector<int>& c) const;
  Q inner(const Weight& x, const Weight& y) const;
  QVec to_fundamental(const Weight& w) const;
  Weight from_fundamental(const QVec& f) const;
  bool dominant_integral(const Weight& w) const;
  Reduction to_dominant(const Weight& w) const;
  Weight dual_weight(const Weight& w) const;

  // Integral fast path on Dynkin labels.
  Lbl labels(const Weight& w) const;  // throws on non-integral weight
  Weight from_labels(const Lbl& x) const;
  Lbl zero_lbl() const { return Lbl{}; }
  Lbl rho_lbl() const;
  Lbl theta_lbl() const { return theta_; }
  // Labels of the simple root α_i (row i of the Cartan matrix).
  Lbl alpha_lbl(int i) const { return alpha_[i]; }
  // Positive roots in label form, same order as positive_roots().
  const std::vector<Lbl>& root_lbls() const { return root_lbl_; }
  // scale() * (x|y) is an integer for integral x, y.
  int64_t ip_scaled(const Lbl& x, const Lbl& y) const;
  int64_t scale() const { return scale_; }
  Q ip(const Lbl& x, const Lbl& y) const {
    Q q(ip_scaled(x, y), scale_);
    q.canonicalize();
    return q;
  }
  // (x|θ) = Σ x_i a_i^∨.
  int level_of(const Lbl& x) const;
  LblReduction to_dominant(Lbl x) const;
  Lbl dual(const Lbl& x) const;
  bool dominant(const Lbl& x) const;
  // height(x - y) when x - y lies in the root lattice, scaled by height_scale().
  int64_t height_scaled(const Lbl& x) const;
  int64_t height_scale() const { return hden_; }
  // Simple-root coordinates of x - y are nonnegative integers.
  bool dominates(const Lbl& x, const Lbl& y) const;
  bool in_root_lattice(const Lbl& d) const;
  // Exact Weyl dimension; saturates at INT64_MAX.
  int64_t weyl_dimension(const Lbl& x) const;

 private:
  AlgebraId id_;
  int n_;
  std::vector<std::vector<int>> A_;
  QMat B_, Ainv_, G_;
  std::vector<std::vector<int>> pos_;
  std::vector<int> marks_, comarks_;
  int hvee_ = 0;
  Lbl theta_{};
  std::vector<Lbl> alpha_, root_lbl_;
  std::vector<std::vector<int64_t>> Gs_;  // scaled (ω_i|ω_j)
  int64_t scale_ = 1;
  std::vector<std::vector<int64_t>> Ainv_s_;  // det-scaled inverse Cartan
  int64_t ainv_den_ = 1;
  std::vector<int64_t> hrow_;
  int64_t hden_ = 1;
  std::vector<int64_t> rho_pair_s_;  // scaled (α|ρ) per positive root
  std::vector<std::vector<int64_t>> root_pair_s_;  // scaled (α|ω_j)
};

// Shared immutable instances, built once per id.
std::shared_ptr<const RootSystem> root_system(const AlgebraId& id);
inline std::shared_ptr<const RootSystem> root_system(const std::string& s) {
  return root_system(AlgebraId::parse(s));
}

// Orthogonal basis vectors in simple-root coordinates:
// B_n, C_n: ϑ_1..ϑ_n; D_n: θ_1..θ_n; A_n: ε_1..ε_{n+1} (projected).
std::vector<Weight> classical_basis(const RootSystem& rs);

}  // namespace wzw
