#include "wzw/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wzw {

namespace {

Q mod2(Q t) {
  t.canonicalize();
  mpz_class q;
  mpz_class twoden = 2 * t.get_den();
  mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), twoden.get_mpz_t());
  Q r = t - Q(2 * q);
  r.canonicalize();
  return r;
}

QVec to_qvec(const std::vector<long>& a) { return QVec(a.begin(), a.end()); }

Q bilinear(const QVec& u, const QMat& M, const QVec& v) {
  Q s = 0;
  for (int i = 0; i < M.rows; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (int j = 0; j < M.cols; ++j) s += u[i] * M(i, j) * v[j];
  }
  return s;
}

}  // namespace

Phase::Phase(const Q& x) : t(mod2(x)) {}

std::complex<double> Phase::value() const {
  // exact values at multiples of 1/2 so ±1, ±i come out clean
  if (t == 0) return {1, 0};
  if (t == 1) return {-1, 0};
  if (t == Q(1, 2)) return {0, 1};
  if (t == Q(3, 2)) return {0, -1};
  return std::polar(1.0, std::numbers::pi * t.get_d());
}

std::string Phase::str() const { return "exp(i*pi*" + qstr(t) + ")"; }

IntegralLattice::IntegralLattice(std::vector<std::vector<long>> gram) : n_(int(gram.size())), g_(std::move(gram)) {
  if (n_ == 0) throw std::invalid_argument("lattice: empty Gram matrix");
  for (auto& r : g_)
    if (int(r.size()) != n_) throw std::invalid_argument("lattice: Gram matrix is not square");
  G_ = QMat(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (g_[i][j] != g_[j][i]) throw std::invalid_argument("lattice: Gram matrix is not symmetric");
      G_(i, j) = g_[i][j];
    }
  auto inv = inverse(G_);
  if (!inv) throw std::invalid_argument("lattice: Gram matrix is degenerate");
  Ginv_ = *inv;
}

bool IntegralLattice::even() const {
  for (int i = 0; i < n_; ++i)
    if (g_[i][i] % 2 != 0) return false;
  return true;
}

Q IntegralLattice::ip(const QVec& x, const QVec& y) const {
  if (int(x.size()) != n_ || int(y.size()) != n_) throw std::invalid_argument("lattice: vector has wrong rank");
  Q s = bilinear(x, G_, y);
  s.canonicalize();
  return s;
}

bool IntegralLattice::in_lattice(const QVec& x) const {
  if (int(x.size()) != n_) return false;
  for (auto& q : x)
    if (!is_integer(q)) return false;
  return true;
}

QVec IntegralLattice::dual_coords(const QVec& x) const {
  if (int(x.size()) != n_) throw std::invalid_argument("lattice: vector has wrong rank");
  QVec u = mul(G_, x);
  for (auto& q : u) q.canonicalize();
  return u;
}

bool IntegralLattice::in_dual(const QVec& x) const {
  if (int(x.size()) != n_) return false;
  for (auto& q : dual_coords(x))
    if (!is_integer(q)) return false;
  return true;
}

std::vector<QVec> IntegralLattice::dual_basis() const {
  std::vector<QVec> out(n_, QVec(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[j][i] = Ginv_(i, j);
  return out;
}

long IntegralLattice::discriminant() const {
  // det G = 1/det G^{-1}; compute det by elimination
  QMat m = G_;
  Q det = 1;
  for (int c = 0; c < n_; ++c) {
    int p = c;
    while (p < n_ && sgn(m(p, c)) == 0) ++p;
    if (p != c) {
      for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n_; ++r) {
      Q f = m(r, c) / m(c, c);
      for (int j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  det.canonicalize();
  return std::labs(det.get_num().get_si());
}

IntegralLattice random_even_lattice(std::mt19937_64& rng, int rank, int bound) {
  std::uniform_int_distribution<long> off(-bound, bound), diag(-bound, bound);
  while (true) {
    std::vector<std::vector<long>> g(rank, std::vector<long>(rank));
    for (int i = 0; i < rank; ++i) {
      g[i][i] = 2 * diag(rng);
      for (int j = 0; j < i; ++j) g[i][j] = g[j][i] = off(rng);
    }
    try {
      return IntegralLattice(g);
    } catch (const std::invalid_argument&) {
    }
  }
}

Cocycle::Cocycle(IntegralLattice L) : L_(std::move(L)) {
  if (!L_.even()) throw std::invalid_argument("cocycle: lattice is not even");
  const int n = L_.rank();
  const auto& g = L_.gram();
  sign_.assign(n, std::vector<int>(n, 1));
  QMat T(n, n), G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      G(i, j) = g[i][j];
      if (i > j) {
        sign_[i][j] = g[i][j] % 2 ? -1 : 1;
        T(i, j) = g[i][j];
      } else if (i < j) {
        T(i, j) = -g[i][j];
      }
    }
  QMat Gi = *inverse(G);
  S_ = Gi * T * Gi;
  Lo_ = QMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) Lo_(i, j) = S_(i, j);
}

int Cocycle::eps(const std::vector<long>& a, const std::vector<long>& b) const {
  const int n = L_.rank();
  if (int(a.size()) != n || int(b.size()) != n) throw std::invalid_argument("cocycle: vector has wrong rank");
  const auto& g = L_.gram();
  long parity = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) parity += (a[i] * b[j] % 2) * (g[i][j] % 2);
  return parity % 2 ? -1 : 1;
}

Phase Cocycle::eps_dual(const QVec& x, const QVec& y) const {
  if (!L_.in_dual(x) || !L_.in_dual(y)) throw std::invalid_argument("cocycle: argument not in the dual lattice");
  return Phase(bilinear(L_.dual_coords(x), Lo_, L_.dual_coords(y)));
}

Phase Cocycle::omega_dual(const QVec& x, const QVec& y) const {
  if (!L_.in_dual(x) || !L_.in_dual(y)) throw std::invalid_argument("cocycle: argument not in the dual lattice");
  return Phase(bilinear(L_.dual_coords(x), S_, L_.dual_coords(y)));
}

Cocycle build_cocycle(const IntegralLattice& L) { return Cocycle(L); }

int lattice_fusion(const IntegralLattice& L, const QVec& lambda0, const QVec& mu0, const QVec& nu0) {
  for (auto* v : {&lambda0, &mu0, &nu0})
    if (!L.in_dual(*v)) throw std::invalid_argument("lattice_fusion: argument not in the dual lattice");
  QVec d(L.rank());
  for (int i = 0; i < L.rank(); ++i) d[i] = nu0[i] - lambda0[i] - mu0[i];
  return L.in_lattice(d) ? 1 : 0;
}

Phase intertwiner_phase(const Cocycle& c, const QVec& lambda, const QVec& mu, const QVec& mu0) {
  const auto& L = c.lattice();
  if (!L.in_dual(lambda) || !L.in_dual(mu) || !L.in_dual(mu0))
    throw std::invalid_argument("intertwiner_phase: argument not in the dual lattice");
  QVec d(L.rank());
  for (int i = 0; i < L.rank(); ++i) d[i] = mu[i] - mu0[i];
  if (!L.in_lattice(d)) throw std::invalid_argument("intertwiner_phase: μ is not in the coset μ0 + Λ");
  return c.eps_dual(lambda, mu) * c.omega_dual(d, lambda) * Phase(L.ip(d, lambda));
}

RelationCheck check_intertwiner_relations(const Cocycle& c, const QVec& alpha, const QVec& lambda, const QVec& mu,
                                       const QVec& mu0) {
  const auto& L = c.lattice();
  if (!L.in_lattice(alpha)) throw std::invalid_argument("check_intertwiner_relations: α must lie in Λ");
  const int n = L.rank();
  QVec lm(n), al(n), am(n);
  for (int i = 0; i < n; ++i) {
    lm[i] = lambda[i] + mu[i];
    al[i] = alpha[i] + lambda[i];
    am[i] = alpha[i] + mu[i];
  }
  Phase lhs = c.eps_dual(alpha, lm) * intertwiner_phase(c, lambda, mu, mu0);
  Phase mid = c.eps_dual(alpha, lambda) * intertwiner_phase(c, al, mu, mu0);
  Phase rhs = Phase(L.ip(alpha, lambda)) * intertwiner_phase(c, lambda, am, mu0) * c.eps_dual(alpha, mu);
  return {lhs == mid, mid == rhs};
}

CocycleReport check_cocycle(const Cocycle& c, std::mt19937_64& rng, int triples, int bound) {
  const auto& L = c.lattice();
  const int n = L.rank();
  std::uniform_int_distribution<long> d(-bound, bound);
  auto draw = [&] {
    std::vector<long> v(n);
    for (auto& x : v) x = d(rng);
    return v;
  };
  auto add = [](std::vector<long> a, const std::vector<long>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  // random dual vectors: integer combinations of the dual basis
  auto dual = L.dual_basis();
  auto draw_dual = [&] {
    auto k = draw();
    QVec x(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) x[i] += k[j] * dual[j][i];
    for (auto& q : x) q.canonicalize();
    return x;
  };
  auto qadd = [](QVec a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  CocycleReport r;
  const std::vector<long> zero(n, 0);
  for (int t = 0; t < triples; ++t) {
    auto a = draw(), b = draw(), g = draw();
    ++r.triples;
    if (c.eps(a, add(b, g)) * c.eps(b, g) != c.eps(a, b) * c.eps(add(a, b), g)) ++r.cocycle_fail;
    if (c.eps(a, zero) != 1 || c.eps(zero, a) != 1) ++r.unit_fail;
    Q ab = L.ip(to_qvec(a), to_qvec(b));
    int sgn_ab = ab.get_num() % 2 == 0 ? 1 : -1;
    if (c.eps(a, b) != sgn_ab * c.eps(b, a)) ++r.commutator_fail;

    auto x = draw_dual(), y = draw_dual(), z = draw_dual();
    bool bad = c.eps_dual(x, qadd(y, z)) * c.eps_dual(y, z) != c.eps_dual(x, y) * c.eps_dual(qadd(x, y), z);
    bad |= c.eps_dual(x, y) != c.omega_dual(x, y) * c.eps_dual(y, x);
    bad |= c.eps_dual(x, QVec(n)) != Phase();
    bad |= c.omega_dual(to_qvec(a), to_qvec(b)) != Phase(ab);
    if (bad) ++r.dual_fail;
  }
  return r;
}

IntegralLattice root_lattice(const AlgebraId& id) {
  if (!id.simply_laced()) throw std::invalid_argument("root lattice needs a simply-laced type, got " + id.name());
  auto rs = root_system(id);
  std::vector<std::vector<long>> g(rs->rank(), std::vector<long>(rs->rank()));
  for (int i = 0; i < rs->rank(); ++i)
    for (int j = 0; j < rs->rank(); ++j) g[i][j] = rs->cartan(i, j);
  return IntegralLattice(g);
}

}  // namespace wzw
