#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wzw/exec.hpp"
#include "wzw/highmod.hpp"

namespace wzw {

struct TensorQuery {
  Weight lambda, mu, nu;
};

// Brauer–Klimyk: multiplicity of every L(ν) in L(λ)⊗L(μ), given all weights of L(λ).
LblMap tensor_decomposition(const RootSystem& rs, const LblMap& weights_of_lambda, const Lbl& mu);
LblMap tensor_decomposition(const RootSystem& rs, const Lbl& lambda, const Lbl& mu);
int64_t tensor_multiplicity(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu);
int64_t tensor_multiplicity(const TensorQuery& q, int64_t cap = default_cap());

enum class Cor20 { Zero, One, NotApplicable };
std::string to_string(Cor20 c);

Cor20 cor20_criterion(const RootSystem& rs, const LblMap& weights_of_lambda, const Lbl& mu, const Lbl& nu);
Cor20 cor20_criterion(const TensorQuery& q);

// dim L(λ)[ν−μ] − dim K^μ(λ)[ν−μ], on one realized L(λ), with memoized F-string powers.
class Prop11 {
 public:
  explicit Prop11(ModuleRealization R);
  const ModuleRealization& module() const { return R_; }
  int64_t multiplicity(const Lbl& mu, const Lbl& nu);
  // Spanning vectors of K^μ(λ)[κ] in block coordinates.
  std::vector<QVec> k_subspace(const Lbl& mu, const Lbl& kappa);

 private:
  struct Key {
    Lbl w;
    int i, k;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& x) const noexcept {
      return LblHash{}(x.w) * 31 + size_t(x.i) * 1000003 + size_t(x.k);
    }
  };
  const std::vector<QVec>& powers(const Lbl& top, int i, int k);
  int top(const Lbl& kappa, int i);

  ModuleRealization R_;
  std::shared_ptr<const RootSystem> rs_;
  std::unordered_map<Key, std::vector<QVec>, KeyHash> pow_;
  std::unordered_map<Key, int, KeyHash> top_;
  struct Key2 {
    Lbl kappa, kv;
    bool operator==(const Key2&) const = default;
  };
  struct Key2Hash {
    size_t operator()(const Key2& x) const noexcept { return LblHash{}(x.kappa) * 1315423911u ^ LblHash{}(x.kv); }
  };
  std::unordered_map<Key2, int64_t, Key2Hash> memo_;
};

int64_t prop11_multiplicity(const TensorQuery& q, int64_t cap = default_cap());

struct TensorGraph {
  std::vector<Lbl> nodes;
  std::vector<std::pair<int, int>> edges;  // (μ, ν) with μ ≤ ν in node order; loops allowed
  std::string to_dot() const;
};

// Nodes: dominant μ with (μ|ϑ2) ≤ height_cap; edges where Hom(ϑ1⊗μ, ν) = 1.
TensorGraph g2_tensor_graph(int height_cap);

// The literal rule from the tensor graph: ν−μ ∈ {±ϑ1, ±η, ±α1}, or μ = ν with n1 > 0.
int g2_graph_rule(const Lbl& mu, const Lbl& nu);

struct SweepStats {
  std::string algebra;
  int64_t weights = 0;        // dominant weights with dim ≤ cap
  int64_t triples = 0;        // all (λ, μ, ν) in the domain
  int64_t checked = 0;        // triples with ν−μ a weight of L(λ)
  int64_t nonzero = 0;
  int64_t cor20_applicable = 0;
  int64_t disagreements = 0;
  std::vector<std::string> samples;  // first few disagreements

  bool operator==(const SweepStats& o) const {
    return weights == o.weights && triples == o.triples && checked == o.checked && nonzero == o.nonzero &&
           cor20_applicable == o.cor20_applicable && disagreements == o.disagreements;
  }
};

std::vector<Lbl> dominant_weights_up_to(const RootSystem& rs, int64_t cap);

// Three-way agreement (character oracle, K-subspace rank, simple-root criterion)
// over every triple with module dims ≤ cap.
SweepStats tensor_agreement_sweep(const AlgebraId& id, int64_t cap, Exec exec);

}  // namespace wzw
