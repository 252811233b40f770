#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wzw/tensor.hpp"

namespace wzw {

struct AffineWeight {
  Weight finite;
  int level = 0;
};

struct FusionQuery {
  AffineWeight lambda, mu, nu;
};

std::vector<Lbl> admissible_lbls(const RootSystem& rs, int level);
std::vector<AffineWeight> admissible_weights(const AlgebraId& id, int level);
bool admissible(const RootSystem& rs, const Lbl& x, int level);

// (λ|λ+2ρ) / (2(l+h∨)).
Q conformal_weight(const RootSystem& rs, const Lbl& lambda, int level);
Q conformal_weight(const AffineWeight& w);
// Eigenvalue of the quadratic Casimir (normalized form) on a realized module,
// computed from explicit root vectors built by commutators.
Q casimir_eigenvalue(const ModuleRealization& R);

// Kac–Walton: all ν with nonzero N^ν_{λμ} at the given level, from the weights of L(λ).
LblMap kac_walton_decomposition(const RootSystem& rs, const LblMap& weights_of_lambda, const Lbl& mu, int level);
int64_t kac_walton_fusion(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu, int level);
int64_t kac_walton_fusion(const FusionQuery& q);

// Closed-form fusion rules for the charges the theorems cover; nullopt = unsupported.
std::optional<int64_t> paper_fusion_rule(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu,
                                         int level);
std::optional<int64_t> paper_fusion_rule(const FusionQuery& q);
// Name of a supported charge ("theta1", "spin", "spin+", "spin-") or empty.
std::string supported_charge(const RootSystem& rs, const Lbl& lambda);

struct GeneratingResult {
  bool generating = false;
  std::vector<Lbl> unreached;
  // For each reached weight: (charge i, predecessor j) with N^k_{ij} ≠ 0; the vacuum has none.
  std::map<Lbl, std::pair<Lbl, Lbl>> witness;
  std::vector<Lbl> chain(const Lbl& k) const;
};

GeneratingResult generating_check(const RootSystem& rs, const std::vector<Lbl>& family, int level);

struct Prop29Result {
  bool applicable = false;
  int64_t fusion = 0, tensor = 0;
  bool mismatch = false;
};

Prop29Result prop29_applicable(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu, int level);

struct Lemma24Result {
  bool hypotheses = false;
  std::string failed;  // first violated hypothesis
  bool a = false, b = false, c = false;
  std::vector<std::string> notes;
};

Lemma24Result lemma24_conditions(const RootSystem& rs, const Lbl& lambda, const Lbl& mu, const Lbl& nu,
                                 const Lbl& rho, const Lbl& mu1, const Lbl& nu1, int level, int a,
                                 int64_t cap = default_cap());

struct FusionSweep {
  std::string algebra;
  int level = 0;
  int64_t supported = 0, nonzero = 0, disagreements = 0;
  std::vector<std::string> samples;
  bool operator==(const FusionSweep& o) const {
    return supported == o.supported && nonzero == o.nonzero && disagreements == o.disagreements;
  }
};

// paper_fusion_rule vs kac_walton_fusion on every supported query at one level.
FusionSweep fusion_agreement_sweep(const AlgebraId& id, int level, Exec exec);

}  // namespace wzw
