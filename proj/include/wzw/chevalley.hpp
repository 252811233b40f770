#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wzw/exec.hpp"
#include "wzw/highmod.hpp"
#include "wzw/lattice.hpp"

namespace wzw {

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element coordinates in the basis h_1..h_r, then x_α for the positive roots, then the negative roots.
using Elem = QVec;

// Simply-laced g with x_α normalized by a sign cocycle on the root lattice:
//   [h_i, x_β] = (α_i|β) x_β,  [x_α, x_β] = ε(α,β) x_{α+β},  [x_α, x_{−α}] = ε(α,−α) h_α,
//   B(h_i,h_j) = (α_i|α_j),  B(x_α, x_{−α}) = ε(α,−α),  x_α* = ε(α,−α) x_{−α},  h* = h.
// ⟨X|Y⟩ = B(X, Y*) is positive definite with unit root vectors.
class StructureAlgebra {
 public:
  explicit StructureAlgebra(const AlgebraId& id);

  const AlgebraId& id() const { return id_; }
  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rank() const { return r_; }
  int dim() const { return r_ + int(root_.size()); }
  int num_roots() const { return int(root_.size()); }
  // Root k (0 ≤ k < num_roots) in simple-root coordinates.
  const std::vector<int>& root(int k) const { return root_[k]; }
  int root_index(const std::vector<int>& c) const;  // −1 if c is not a root
  int negative(int k) const { return k < npos_ ? k + npos_ : k - npos_; }
  // Basis position of x_{α_i}, x_{−α_i}.
  int raising(int i) const { return r_ + i; }
  int lowering(int i) const { return r_ + npos_ + i; }
  int epsilon(const std::vector<int>& a, const std::vector<int>& b) const;

  Elem zero() const { return Elem(size_t(dim())); }
  Elem basis(int b) const;
  Elem e(int i) const { return basis(raising(i)); }
  Elem f(int i) const { return basis(lowering(i)); }
  // Weight of basis element b in simple-root coordinates (zero on the Cartan).
  std::vector<int> weight(int b) const;

  Elem bracket(const Elem& x, const Elem& y) const;
  Elem star(const Elem& x) const;
  Q form(const Elem& x, const Elem& y) const;
  Q inner(const Elem& x, const Elem& y) const { return form(x, star(y)); }
  Q form_basis(int a, int b) const;
  // Right-nested bracket [e_{w1},[e_{w2},…,[e_{w(n−1)}, e_{wn}]]] of unit raising generators (0-based indices).
  Elem nested_bracket(const std::vector<int>& word) const;

 private:
  void add_bracket(int a, int b, const Q& c, Elem& out) const;

  AlgebraId id_;
  std::shared_ptr<const RootSystem> rs_;
  int r_ = 0, npos_ = 0;
  std::vector<std::vector<int>> root_;
  std::map<std::vector<int>, int> index_;
  std::unique_ptr<Cocycle> cocycle_;
  std::vector<int> sum_;         // R×R: index of root k+l, −2 when k+l = 0, −1 otherwise
  std::vector<signed char> sg_;  // R×R: ε(root k, root l)
  std::vector<int> pair_;        // R×r: (root k | α_i)
  std::vector<signed char> eneg_;  // ε(α, −α)
};

std::shared_ptr<const StructureAlgebra> build_simply_laced(const AlgebraId& id);

struct StructureReport {
  int64_t triples = 0, jacobi_fail = 0, invariance_fail = 0, star_fail = 0;
  bool ok() const { return jacobi_fail == 0 && invariance_fail == 0 && star_fail == 0; }
};
// Jacobi, ([X,Y]|Z) = (Y|[X*,Z]) and [X,Y]* = [Y*,X*] on basis triples.
StructureReport check_structure_exhaustive(const StructureAlgebra& g, Exec exec = Exec::Parallel);
StructureReport check_structure_sampled(const StructureAlgebra& g, std::mt19937_64& rng, int64_t triples,
                                        Exec exec = Exec::Parallel);

// The unitary subalgebra generated by raising elements X_j and their stars.
struct EmbeddedSubalgebra {
  std::shared_ptr<const StructureAlgebra> ambient;
  std::string name;
  AlgebraId type;
  std::vector<Elem> generators;   // X_j in the Bourbaki order of `type`
  std::vector<Elem> stars;        // X_j*
  std::vector<Elem> span_basis;   // nested brackets spanning the subalgebra
  std::vector<Elem> cartan_images;  // coroots H_j = 2[X_j,X_j*] / α_j([X_j,X_j*])
  std::vector<std::vector<int>> cartan;  // recovered α_i(H_j)
  std::vector<int> order;         // generators[j] was input generator order[j]

  int dim() const { return int(span_basis.size()); }
  bool contains(const Elem& x) const;
  // Ambient coordinates of a weight: (Σ_k c_jk λ_k)_j when H_j = Σ_k c_jk h_k; throws if H_j leaves the Cartan.
  Lbl restrict_labels(const Lbl& ambient_labels) const;
  std::shared_ptr<SpanBasis> span;
};

// Throws VerificationFailed with the broken relation.
EmbeddedSubalgebra generate_subalgebra(std::shared_ptr<const StructureAlgebra> ambient, std::vector<Elem> generators,
                                       const AlgebraId& expected, std::string name);
// Same, returning the failure text instead of throwing.
std::optional<EmbeddedSubalgebra> try_generate_subalgebra(std::shared_ptr<const StructureAlgebra> ambient,
                                                          std::vector<Elem> generators, const AlgebraId& expected,
                                                          std::string name, std::string* why);

// Ratio of the ambient normalized form on the subalgebra to the subalgebra's own normalized form.
int dynkin_index(const EmbeddedSubalgebra& sub);

struct Branching {
  AlgebraId sub;
  std::map<Lbl, int64_t> mult;  // sub dominant weight → multiplicity
  int64_t dim = 0;              // dimension of the ambient module
  int64_t total() const;        // Σ mult · dim, recomputed from the sub characters
  std::string str() const;
};

// Restriction of the ambient L(hw) by character peeling.
Branching branch(const EmbeddedSubalgebra& sub, const Lbl& ambient_hw, int64_t cap = default_cap());
Branching branch_adjoint(const EmbeddedSubalgebra& sub);
// Independent route for the adjoint: highest weight vectors counted as common kernels of ad(X_j) per weight.
Branching adjoint_highest_vectors(const EmbeddedSubalgebra& sub);

// E8 in the labeling used for the g2⊕f4 construction: label i (1..8) → Bourbaki index.
std::array<int, 8> e8_label_map();
// P_w for a word in those labels, read as [[…[P_{w1},P_{w2}],…],P_{wn}].
Elem e8_word(const StructureAlgebra& e8, const std::string& word);

struct G2F4Embedding {
  std::shared_ptr<const StructureAlgebra> e8;
  EmbeddedSubalgebra g2, f4;
  Elem a1, a2;
  std::array<Elem, 4> b;
  std::array<int, 3> a1_signs{};   // signs of the three summands of A1
  std::vector<std::string> rejected;  // sign variants tried first, with the failure
  int joint_dim = 0;
  bool commute = false;
};
G2F4Embedding dynkin_embedding_g2_f4();

struct Lemma30Result {
  int m_dim = 0;
  // The literal triple X = P2, Y = P4 − P6.
  Elem x, y, xy;
  bool x_in_m = false, y_in_m = false, xy_in_m = false;
  bool xy_zero = false;
  Q literal_pairing;  // ⟨[X,Y]|[X,Y]⟩
  // First triple in M with ⟨[X,Y]|Z⟩ ≠ 0 among P_i and P_i ± P_j.
  std::string witness;
  Elem wx, wy, wz;
  Q witness_pairing;
  bool literal_ok() const { return x_in_m && y_in_m && xy_in_m && literal_pairing != 0; }
};
// Throws VerificationFailed if no witness exists.
Lemma30Result verify_lemma_lb30(const G2F4Embedding& emb);

// Generators of so(2n+1) ⊂ so(2n+2) = D_{n+1} and sp(2n) ⊂ so(4n) = D_{2n}.
EmbeddedSubalgebra so_odd_in_so_even(int n);
EmbeddedSubalgebra sp_in_so(int n);

struct LemmaCheck {
  std::string lemma, claim, detail;
  bool pass = false;
};
struct PairingReport {
  std::vector<LemmaCheck> checks;
  bool ok() const;
};
PairingReport verify_pairing_lemmas(int64_t cap = default_cap());

}  // namespace wzw
