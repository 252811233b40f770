#include "wzw/rootsys.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wzw {

void AlgebraId::validate() const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid algebra " + name() + ": " + why);
  };
  if (rank < 1) fail("rank must be >= 1");
  if (rank > 8) fail("rank must be <= 8");
  switch (series) {
    case 'A':
      break;
    case 'B':
      if (rank < 2) fail("B requires rank >= 2");
      break;
    case 'C':
      if (rank < 2) fail("C requires rank >= 2");
      break;
    case 'D':
      if (rank < 3) fail("D requires rank >= 3");
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail("E requires rank in {6,7,8}");
      break;
    case 'F':
      if (rank != 4) fail("F requires rank 4");
      break;
    case 'G':
      if (rank != 2) fail("G requires rank 2");
      break;
    default:
      fail("series must be one of A,B,C,D,E,F,G");
  }
}

AlgebraId AlgebraId::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse algebra '" + s + "'");
  AlgebraId id;
  id.series = char(std::toupper(static_cast<unsigned char>(s[0])));
  std::string r = s.substr(1);
  if (!r.empty() && r[0] == '_') r.erase(0, 1);
  if (r.empty() || r.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("cannot parse algebra '" + s + "'");
  id.rank = std::stoi(r);
  id.validate();
  return id;
}

namespace {

struct Diagram {
  std::vector<Q> len2;
  std::vector<std::pair<int, int>> edges;
};

Diagram diagram(const AlgebraId& id) {
  int n = id.rank;
  Diagram d;
  d.len2.assign(n, Q(2));
  auto chain = [&](int a, int b) {
    for (int i = a; i < b; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (id.series) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':
      chain(0, n - 1);
      d.len2[n - 1] = 1;
      break;
    case 'C':
      chain(0, n - 1);
      for (int i = 0; i < n - 1; ++i) d.len2[i] = 1;
      break;
    case 'D':
      chain(0, n - 2);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      chain(2, n - 1);
      break;
    case 'F':
      chain(0, 3);
      d.len2[2] = d.len2[3] = 1;
      break;
    case 'G':
      chain(0, 1);
      d.len2[0] = Q(2, 3);
      break;
  }
  return d;
}

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

RootSystem::RootSystem(AlgebraId id) : id_(id), n_(id.rank) {
  id_.validate();
  Diagram d = diagram(id_);
  B_ = QMat(n_, n_);
  for (int i = 0; i < n_; ++i) B_(i, i) = d.len2[i];
  for (auto [i, j] : d.edges) {
    Q v = -std::max(d.len2[i], d.len2[j]) / 2;
    B_(i, j) = B_(j, i) = v;
  }
  A_.assign(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Q v = 2 * B_(i, j) / B_(j, j);
      A_[i][j] = int(v.get_num().get_si());
    }
  QMat Aq(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) Aq(i, j) = A_[i][j];
  Ainv_ = *inverse(Aq);

  // Positive roots, layer by layer in height.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> e(n_);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& b : layer) {
      pos_.push_back(b);
      for (int i = 0; i < n_; ++i) {
        int pair = 0;  // <β, α_i^∨>
        for (int k = 0; k < n_; ++k) pair += b[k] * A_[k][i];
        int p = 0;
        auto c = b;
        while (true) {
          c[i] -= 1;
          if (c[i] < 0 || !seen.count(c)) break;
          ++p;
        }
        if (p - pair > 0) {
          auto up = b;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::stable_sort(pos_.begin(), pos_.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });

  marks_ = pos_.back();
  comarks_.resize(n_);
  hvee_ = 1;
  for (int i = 0; i < n_; ++i) {
    Q c = marks_[i] * B_(i, i) / 2;
    comarks_[i] = int(c.get_num().get_si());
    hvee_ += comarks_[i];
  }

  alpha_.assign(n_, Lbl{});
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) alpha_[i][j] = A_[i][j];
  for (auto& r : pos_) {
    Lbl x{};
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < n_; ++j) x[j] += r[k] * A_[k][j];
    root_lbl_.push_back(x);
  }
  theta_ = root_lbl_.back();

  // (ω_i|ω_j) = (A^{-1})_{ij} |α_j|^2 / 2, scaled to integers.
  G_ = QMat(n_, n_);
  scale_ = 1;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      G_(i, j) = Ainv_(i, j) * B_(j, j) / 2;
      scale_ = lcm64(scale_, G_(i, j).get_den().get_si());
    }
  Gs_.assign(n_, std::vector<int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) Gs_[i][j] = Q(G_(i, j) * scale_).get_num().get_si();

  ainv_den_ = 1;
  for (auto& x : Ainv_.a) ainv_den_ = lcm64(ainv_den_, x.get_den().get_si());
  Ainv_s_.assign(n_, std::vector<int64_t>(n_));
  hrow_.assign(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Ainv_s_[i][j] = Q(Ainv_(i, j) * ainv_den_).get_num().get_si();
      hrow_[i] += Ainv_s_[i][j];
    }
  hden_ = ainv_den_;

  // (x|α) = Σ_k c_k(α) x_k |α_k|^2/2; scale by 6 covers G2's 1/3.
  for (auto& r : pos_) {
    std::vector<int64_t> row(n_);
    for (int k = 0; k < n_; ++k) row[k] = Q(r[k] * B_(k, k) / 2 * 6).get_num().get_si();
    root_pair_s_.push_back(row);
    int64_t s = 0;
    for (int k = 0; k < n_; ++k) s += row[k];
    rho_pair_s_.push_back(s);
  }
}

std::vector<Weight> RootSystem::simple_roots() const {
  std::vector<Weight> out;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> e(n_);
    e[i] = 1;
    out.push_back(root_weight(e));
  }
  return out;
}

std::vector<Weight> RootSystem::positive_root_weights() const {
  std::vector<Weight> out;
  for (auto& r : pos_) out.push_back(root_weight(r));
  return out;
}

std::vector<Weight> RootSystem::fundamental_weights() const {
  std::vector<Weight> out;
  for (int i = 0; i < n_; ++i) {
    Weight w = zero();
    for (int k = 0; k < n_; ++k) w.coords[k] = Ainv_(i, k);
    out.push_back(w);
  }
  return out;
}

Weight RootSystem::highest_root() const { return root_weight(pos_.back()); }

Weight RootSystem::weyl_vector() const { return from_labels(rho_lbl()); }

Weight RootSystem::root_weight(const std::vector<int>& c) const {
  Weight w = zero();
  for (int k = 0; k < n_; ++k) w.coords[k] = c[k];
  return w;
}

static void same_algebra(const Weight& x, const Weight& y, const AlgebraId& id) {
  if (!(x.algebra == id) || !(y.algebra == id))
    throw std::invalid_argument("algebra mismatch: " + x.algebra.name() + " vs " +
                                y.algebra.name() + " in " + id.name());
}

Q RootSystem::inner(const Weight& x, const Weight& y) const {
  same_algebra(x, y, id_);
  Q s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (sgn(B_(i, j)) != 0) s += x.coords[i] * B_(i, j) * y.coords[j];
  return s;
}

QVec RootSystem::to_fundamental(const Weight& w) const {
  QVec d(n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) d[j] += w.coords[k] * A_[k][j];
  return d;
}

Weight RootSystem::from_fundamental(const QVec& f) const {
  if (int(f.size()) != n_)
    throw std::invalid_argument(id_.name() + " expects " + std::to_string(n_) + " coordinates, got " +
                                std::to_string(f.size()));
  Weight w = zero();
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j) w.coords[k] += f[j] * Ainv_(j, k);
  return w;
}

bool RootSystem::dominant_integral(const Weight& w) const {
  for (auto& d : to_fundamental(w))
    if (!is_integer(d) || sgn(d) < 0) return false;
  return true;
}

Reduction RootSystem::to_dominant(const Weight& w) const {
  QVec d = to_fundamental(w);
  int sign = 1, len = 0;
  while (true) {
    int i = -1;
    for (int k = 0; k < n_; ++k)
      if (sgn(d[k]) < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    Q c = d[i];
    for (int j = 0; j < n_; ++j) d[j] -= c * A_[i][j];
    sign = -sign;
    ++len;
  }
  for (auto& x : d)
    if (sgn(x) == 0) sign = 0;
  return {from_fundamental(d), sign, len};
}

Weight RootSystem::dual_weight(const Weight& w) const {
  if (!dominant_integral(w)) throw std::invalid_argument("dual_weight: weight is not dominant integral");
  Weight m = w;
  for (auto& c : m.coords) c = -c;
  return to_dominant(m).weight;
}

Lbl RootSystem::labels(const Weight& w) const {
  if (!(w.algebra == id_)) throw std::invalid_argument("algebra mismatch");
  QVec d = to_fundamental(w);
  Lbl x{};
  for (int j = 0; j < n_; ++j) {
    if (!is_integer(d[j])) throw std::invalid_argument("weight is not integral");
    x[j] = int(d[j].get_num().get_si());
  }
  return x;
}

Weight RootSystem::from_labels(const Lbl& x) const {
  QVec f(n_);
  for (int j = 0; j < n_; ++j) f[j] = x[j];
  return from_fundamental(f);
}

Lbl RootSystem::rho_lbl() const {
  Lbl x{};
  for (int i = 0; i < n_; ++i) x[i] = 1;
  return x;
}

int64_t RootSystem::ip_scaled(const Lbl& x, const Lbl& y) const {
  int64_t s = 0;
  for (int i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    int64_t t = 0;
    for (int j = 0; j < n_; ++j) t += Gs_[i][j] * y[j];
    s += x[i] * t;
  }
  return s;
}

int RootSystem::level_of(const Lbl& x) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += x[i] * comarks_[i];
  return s;
}

LblReduction RootSystem::to_dominant(Lbl x) const {
  int sign = 1, len = 0;
  while (true) {
    int i = -1;
    for (int k = 0; k < n_; ++k)
      if (x[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    int c = x[i];
    for (int j = 0; j < n_; ++j) x[j] -= c * A_[i][j];
    sign = -sign;
    ++len;
  }
  for (int k = 0; k < n_; ++k)
    if (x[k] == 0) sign = 0;
  return {x, sign, len};
}

Lbl RootSystem::dual(const Lbl& x) const {
  Lbl m{};
  for (int i = 0; i < n_; ++i) m[i] = -x[i];
  return to_dominant(m).weight;
}

bool RootSystem::dominant(const Lbl& x) const {
  for (int i = 0; i < n_; ++i)
    if (x[i] < 0) return false;
  return true;
}

int64_t RootSystem::height_scaled(const Lbl& x) const {
  int64_t s = 0;
  for (int i = 0; i < n_; ++i) s += hrow_[i] * x[i];
  return s;
}

bool RootSystem::in_root_lattice(const Lbl& d) const {
  for (int a = 0; a < n_; ++a) {
    int64_t c = 0;
    for (int j = 0; j < n_; ++j) c += d[j] * Ainv_s_[j][a];
    if (c % ainv_den_ != 0) return false;
  }
  return true;
}

bool RootSystem::dominates(const Lbl& x, const Lbl& y) const {
  for (int a = 0; a < n_; ++a) {
    int64_t c = 0;
    for (int j = 0; j < n_; ++j) c += int64_t(x[j] - y[j]) * Ainv_s_[j][a];
    if (c < 0 || c % ainv_den_ != 0) return false;
  }
  return true;
}

int64_t RootSystem::weyl_dimension(const Lbl& x) const {
  mpz_class num = 1, den = 1;
  for (size_t r = 0; r < pos_.size(); ++r) {
    int64_t t = 0;
    for (int k = 0; k < n_; ++k) t += root_pair_s_[r][k] * (x[k] + 1);
    num *= mpz_class(std::to_string(t));
    den *= mpz_class(std::to_string(rho_pair_s_[r]));
  }
  mpz_class q = num / den;
  if (q > mpz_class(std::to_string(INT64_MAX))) return INT64_MAX;
  return int64_t(std::stoll(q.get_str()));
}

std::shared_ptr<const RootSystem> root_system(const AlgebraId& id) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  id.validate();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[id.name()];
  if (!slot) slot = std::make_shared<const RootSystem>(id);
  return slot;
}

std::vector<Weight> classical_basis(const RootSystem& rs) {
  int n = rs.rank();
  auto alpha = rs.simple_roots();
  auto sum = [&](int from, int to) {  // Σ_{j=from}^{to-1} α_j
    Weight w = rs.zero();
    for (int j = from; j < to; ++j)
      for (int k = 0; k < n; ++k) w.coords[k] += alpha[j].coords[k];
    return w;
  };
  std::vector<Weight> e;
  switch (rs.id().series) {
    case 'A': {
      Weight w1 = rs.fundamental_weights()[0];
      for (int i = 0; i <= n; ++i) {
        Weight w = w1;
        Weight s = sum(0, i);
        for (int k = 0; k < n; ++k) w.coords[k] -= s.coords[k];
        e.push_back(w);
      }
      break;
    }
    case 'B':
      for (int i = 0; i < n; ++i) e.push_back(sum(i, n));
      break;
    case 'C':
      for (int i = 0; i < n; ++i) {
        Weight w = sum(i, n - 1);
        w.coords[n - 1] += Q(1, 2);
        e.push_back(w);
      }
      break;
    case 'D':
      for (int i = 0; i < n; ++i) {
        Weight w = rs.zero();
        if (i <= n - 2) {
          w = sum(i, n - 2);
          w.coords[n - 2] += Q(1, 2);
          w.coords[n - 1] += Q(1, 2);
        } else {
          w.coords[n - 2] = Q(-1, 2);
          w.coords[n - 1] = Q(1, 2);
        }
        e.push_back(w);
      }
      break;
    default:
      throw std::invalid_argument("classical_basis: no orthogonal basis for " + rs.id().name());
  }
  return e;
}

}  // namespace wzw
