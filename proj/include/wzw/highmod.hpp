#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wzw/rootsys.hpp"

namespace wzw {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int64_t dim, int64_t cap)
      : std::runtime_error(what + ": dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap)),
        dim_(dim) {}
  int64_t dimension() const { return dim_; }

 private:
  int64_t dim_;
};

// 512 unless WZW_CAP is set or set_default_cap was called.
int64_t default_cap();
void set_default_cap(int64_t cap);

using LblMap = std::unordered_map<Lbl, int64_t, LblHash>;

struct DominantCharacter {
  Weight highest_weight;
  Lbl hw{};
  // Dominant weights in order of increasing depth below the highest weight.
  std::vector<std::pair<Lbl, int64_t>> mults;
  int64_t dim = 0;

  int64_t mult(const Lbl& dominant_weight) const;
};

// Freudenthal over the dominant cone; no dimension cap.
DominantCharacter dominant_character(const RootSystem& rs, const Lbl& hw);
DominantCharacter full_character(const RootSystem& rs, const Weight& hw, int64_t cap = default_cap());
int64_t weight_multiplicity(const RootSystem& rs, const Weight& hw, const Weight& mu);

// Weyl orbit of a dominant weight.
std::vector<Lbl> orbit(const RootSystem& rs, const Lbl& dominant_weight);
// Every weight with its multiplicity.
LblMap all_weights(const RootSystem& rs, const DominantCharacter& ch);

struct ModuleRealization {
  AlgebraId algebra;
  Lbl hw{};
  int dim = 0;
  std::vector<Lbl> wt;                        // weight of each basis vector
  std::vector<std::pair<int, int>> parent;    // basis k = F_i(parent); (-1,-1) for the highest vector
  std::vector<SpMat> E, F;                    // one per simple index
  std::unordered_map<Lbl, std::vector<int>, LblHash> index;
  std::unordered_map<Lbl, QMat, LblHash> gram_block;
  std::vector<int> pos;                       // position of a basis vector inside its weight block

  Q gram(int a, int b) const;
  QMat gram_dense() const;
  SpMat H(int i) const;
  std::vector<Weight> basis_weights(const RootSystem& rs) const;
  const std::vector<int>& block(const Lbl& w) const;
  bool has_weight(const Lbl& w) const { return index.count(w) > 0; }
  // ⟨u, v⟩ for vectors in basis coordinates.
  Q pair(const QVec& u, const QVec& v) const;
};

ModuleRealization realize_module(const RootSystem& rs, const Lbl& hw, int64_t cap = default_cap());
ModuleRealization realize_module(const RootSystem& rs, const Weight& hw, int64_t cap = default_cap());

// Intertwiner T: L(λ)⊗L(μ) → L(ν); the pair (a,b) has index a*dim_mu + b.
struct HomMap {
  int dim_lambda = 0, dim_mu = 0, dim_nu = 0;
  std::vector<SpVec> col;

  QVec apply(int a, int b) const;
  QVec apply(const QVec& u, const QVec& v) const;
};

std::vector<HomMap> hom_space_basis(const ModuleRealization& L, const ModuleRealization& M,
                                    const ModuleRealization& N);
std::vector<HomMap> hom_space_basis(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                    const Weight& nu, int64_t cap = default_cap());

}  // namespace wzw
