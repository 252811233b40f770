#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wzw/exec.hpp"
#include "wzw/highmod.hpp"

namespace wzw {

enum class ClaimStatus { Pass, Fail, Assumed };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string anchor;  // label of the theorem or lemma the claim checks
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<Claim> claims;

  bool ok() const;  // no Fail entries
  int count(ClaimStatus s) const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  uint64_t seed = 1;
  int64_t cap = default_cap();  // module-dimension bound for the tensor sweep
  int max_level = 3;
  Exec exec = Exec::Parallel;
};

VerificationReport verify_paper(const VerifyOptions& opt = {});

// Exact rationals as strings in JSON.
nlohmann::json to_json(const Q& q);
nlohmann::json to_json(const QVec& v);
// {"algebra":"B3","basis":"fundamental","coords":["1","0","1"]}
nlohmann::json weight_json(const AlgebraId& id, const Lbl& x);
nlohmann::json weight_json(const RootSystem& rs, const Weight& w);
// Basis weights and sparse E_i, F_i as (row, col, value) triples.
nlohmann::json realization_json(const ModuleRealization& R);

}  // namespace wzw
