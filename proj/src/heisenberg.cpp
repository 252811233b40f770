#include "wzw/heisenberg.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace wzw {

FockSpace::FockSpace(std::vector<Q> kk) : k(std::move(kk)) {
  if (k.empty()) throw std::invalid_argument("FockSpace: rank must be positive");
  for (auto& x : k)
    if (sgn(x) <= 0) throw std::invalid_argument("FockSpace: basis norms must be positive");
}

Q FockSpace::ip(const QVec& a, const QVec& b) const {
  if (int(a.size()) != rank() || int(b.size()) != rank()) throw std::invalid_argument("FockSpace: charge has wrong rank");
  Q s = 0;
  for (int i = 0; i < rank(); ++i) s += k[i] * a[i] * b[i];
  s.canonicalize();
  return s;
}

namespace {

void gen(int rank, int rem, int n, int i, Monomial& cur, std::vector<Monomial>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int nn = n; nn <= rem; ++nn)
    for (int ii = (nn == n ? i : 0); ii < rank; ++ii)
      for (int m = 1; m * nn <= rem; ++m) {
        cur.push_back({ii, nn, m});
        int ni = ii + 1, nn2 = nn;
        if (ni == rank) ni = 0, nn2 = nn + 1;
        gen(rank, rem - m * nn, nn2, ni, cur, out);
        cur.pop_back();
      }
}

Q factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Q(f);
}

Q qpow(const Q& x, int e) {
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Coefficient cache for one charge: c(k → t) for the variable h_i(−n).
class Coeffs {
 public:
  Coeffs(const FockSpace& F, const QVec& alpha) : F_(F), a_(alpha) {}
  const Q& get(int i, int n, int k, int t) {
    uint64_t key = (uint64_t(i) << 48) | (uint64_t(n) << 32) | (uint64_t(k) << 16) | uint64_t(t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, compute(i, n, k, t)).first->second;
  }

 private:
  // E^+ substitutes t ↦ t − a k_i x^{−n}; E^- multiplies by exp(a t x^n / n).
  Q compute(int i, int n, int k, int t) const {
    const Q& a = a_[i];
    if (sgn(a) == 0) return k == t ? Q(1) : Q(0);
    Q down = -a * F_.k[i], up = a / n;
    Q s = 0;
    mpz_class binom = 1;  // C(k, j)
    for (int j = 0; j <= k; ++j) {
      if (j > 0) {
        binom *= (k - j + 1);
        binom /= j;
      }
      int m = t - k + j;
      if (m < 0) continue;
      s += Q(binom) * qpow(down, j) * qpow(up, m) / factorial(m);
    }
    s.canonicalize();
    return s;
  }
  const FockSpace& F_;
  QVec a_;
  std::unordered_map<uint64_t, Q> memo_;
};

Q pair_coeff(Coeffs& C, const Monomial& src, const Monomial& tgt) {
  Q r = 1;
  size_t p = 0, q = 0;
  while (p < src.size() || q < tgt.size()) {
    int i, n, k = 0, t = 0;
    if (q == tgt.size() || (p < src.size() && std::make_pair(src[p].n, src[p].i) < std::make_pair(tgt[q].n, tgt[q].i))) {
      i = src[p].i, n = src[p].n, k = src[p].m;
      ++p;
    } else if (p == src.size() || std::make_pair(tgt[q].n, tgt[q].i) < std::make_pair(src[p].n, src[p].i)) {
      i = tgt[q].i, n = tgt[q].n, t = tgt[q].m;
      ++q;
    } else {
      i = src[p].i, n = src[p].n, k = src[p].m, t = tgt[q].m;
      ++p, ++q;
    }
    const Q& c = C.get(i, n, k, t);
    if (sgn(c) == 0) return 0;
    r *= c;
  }
  return r;
}

ModeBlock make_block(const FockSpace& F, Coeffs& C, int N, int Nt) {
  ModeBlock b;
  b.source_level = N;
  b.target_level = Nt;
  if (N < 0 || Nt < 0) return b;
  const auto& src = fock_level(F.rank(), N);
  const auto& tgt = fock_level(F.rank(), Nt);
  b.rows = int(tgt.size());
  b.cols = int(src.size());
  b.exact.resize(size_t(b.rows) * b.cols);
  b.on.resize(b.exact.size());
  std::vector<Q> ns(src.size()), nt(tgt.size());
  for (size_t j = 0; j < src.size(); ++j) ns[j] = monomial_norm2(F, src[j]);
  for (size_t r = 0; r < tgt.size(); ++r) nt[r] = monomial_norm2(F, tgt[r]);
  for (int r = 0; r < b.rows; ++r)
    for (int c = 0; c < b.cols; ++c) {
      Q v = pair_coeff(C, src[c], tgt[r]);
      size_t idx = size_t(r) * b.cols + c;
      if (sgn(v) != 0) {
        Q ratio = nt[r] / ns[c];
        b.on[idx] = v.get_d() * std::sqrt(ratio.get_d());
      }
      b.exact[idx] = std::move(v);
    }
  return b;
}

QVec neg(const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// c = a·b for dense row-major blocks
std::vector<double> matmul(const std::vector<double>& a, int ar, int ac, const std::vector<double>& b, int bc) {
  std::vector<double> c(size_t(ar) * bc, 0.0);
  for (int i = 0; i < ar; ++i)
    for (int k = 0; k < ac; ++k) {
      double x = a[size_t(i) * ac + k];
      if (x == 0) continue;
      for (int j = 0; j < bc; ++j) c[size_t(i) * bc + j] += x * b[size_t(k) * bc + j];
    }
  return c;
}

std::vector<double> transpose(const std::vector<double>& a, int r, int c) {
  std::vector<double> t(a.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) t[size_t(j) * r + i] = a[size_t(i) * c + j];
  return t;
}

}  // namespace

const std::vector<Monomial>& fock_level(int rank, int N) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
  if (rank < 1 || N < 0) throw std::invalid_argument("fock_level: bad rank or level");
  std::lock_guard<std::mutex> g(mu);
  auto key = std::make_pair(rank, N);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Monomial> out;
  Monomial cur;
  gen(rank, N, 1, 0, cur, out);
  return cache.emplace(key, std::move(out)).first->second;
}

Q monomial_norm2(const FockSpace& F, const Monomial& m) {
  Q r = 1;
  for (auto& o : m) r *= qpow(o.n * F.k[o.i], o.m) * factorial(o.m);
  return r;
}

FockBasis fock_basis(const FockSpace& F, const QVec& charge, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("fock_basis: cutoff must be >= 0");
  FockBasis b;
  b.charge = charge;
  b.cutoff = cutoff;
  b.offset = F.ip(charge, charge) / 2;
  for (int N = 0; N <= cutoff; ++N) b.levels.push_back(fock_level(F.rank(), N));
  return b;
}

ModeBlock raw_block(const FockSpace& F, const QVec& alpha, int N, int Nt) {
  if (int(alpha.size()) != F.rank()) throw std::invalid_argument("raw_block: charge has wrong rank");
  Coeffs C(F, alpha);
  return make_block(F, C, N, Nt);
}

int mode_shift(const FockSpace& F, const QVec& alpha, const QVec& mu, const Q& s) {
  Q d = -s - 1 - F.ip(alpha, mu);
  d.canonicalize();
  if (!is_integer(d)) throw std::invalid_argument("mode index " + qstr(s) + " is not in −1 − (α|μ) + Z");
  return int(d.get_num().get_si());
}

ModeMatrix heisenberg_mode(const FockSpace& F, const QVec& alpha, const QVec& mu, const Q& s, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("heisenberg_mode: cutoff must be >= 0");
  ModeMatrix M;
  M.alpha = alpha;
  M.source_charge = mu;
  M.target_charge = add(alpha, mu);
  M.s = s;
  M.cutoff = cutoff;
  M.shift = mode_shift(F, alpha, mu, s);
  Coeffs C(F, alpha);
  for (int N = 0; N <= cutoff; ++N) {
    int Nt = N + M.shift;
    if (Nt < 0) continue;
    if (Nt > cutoff) {
      M.boundary_levels.push_back(N);
      continue;
    }
    M.blocks.push_back(make_block(F, C, N, Nt));
  }
  return M;
}

double block_norm(const std::vector<double>& a, int rows, int cols) {
  if (rows == 0 || cols == 0) return 0;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<double> x(cols);
  for (auto& v : x) v = u(rng);
  auto apply = [&](const std::vector<double>& v) {
    std::vector<double> y(rows, 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) y[i] += a[size_t(i) * cols + j] * v[j];
    return y;
  };
  auto applyT = [&](const std::vector<double>& v) {
    std::vector<double> y(cols, 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) y[j] += a[size_t(i) * cols + j] * v[i];
    return y;
  };
  auto norm = [](const std::vector<double>& v) {
    double s = 0;
    for (double t : v) s += t * t;
    return std::sqrt(s);
  };
  double est = 0;
  for (int it = 0; it < 5000; ++it) {
    double nx = norm(x);
    if (nx == 0) return 0;
    auto y = apply(x);
    double e = norm(y) / nx;
    for (auto& v : x) v /= nx;
    for (auto& v : y) v /= nx;
    if (it > 0 && std::abs(e - est) <= 1e-8 * std::max(e, 1e-300)) return e;
    est = e;
    x = applyT(y);
  }
  return est;
}

AnticommutatorResult anticommutator_check(const FockSpace& F, const QVec& alpha, int cutoff) {
  if (F.ip(alpha, alpha) != 1) throw std::invalid_argument("anticommutator_check: requires (α|α) = 1");
  if (cutoff < 0) throw std::invalid_argument("anticommutator_check: cutoff must be >= 0");
  Coeffs C(F, alpha);
  std::map<std::pair<int, int>, ModeBlock> cache;
  auto blk = [&](int N, int Nt) -> const ModeBlock& {
    auto key = std::make_pair(N, Nt);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_block(F, C, N, Nt)).first;
    return it->second;
  };
  // Y(n): N → N+n as an orthonormal block; Y(n)† on level N is the transpose of Y(n) from N−n.
  auto Y = [&](int n, int N) { return blk(N, N + n); };
  auto Ydag = [&](int n, int N) {
    const auto& b = blk(N - n, N);
    ModeBlock t;
    t.source_level = N;
    t.target_level = N - n;
    t.rows = b.cols;
    t.cols = b.rows;
    t.on = transpose(b.on, b.rows, b.cols);
    return t;
  };
  AnticommutatorResult res;
  for (int n = -cutoff; n <= cutoff; ++n)
    for (int m = -cutoff; m <= cutoff; ++m)
      for (int N = 0; N <= cutoff; ++N) {
        int out = N + n - m;
        if (out < 0) continue;
        int mids[] = {N - m, N + n - 1, out};
        bool boundary = false;
        for (int x : mids) boundary |= x > cutoff;
        if (boundary) {
          ++res.boundary_blocks;
          continue;
        }
        const int dimN = int(fock_level(F.rank(), N).size()), dimO = int(fock_level(F.rank(), out).size());
        std::vector<double> acc(size_t(dimO) * dimN, 0.0);
        if (N - m >= 0) {
          auto a = Ydag(m, N);
          auto b = Y(n, N - m);
          auto p = matmul(b.on, b.rows, b.cols, a.on, a.cols);
          for (size_t t = 0; t < acc.size(); ++t) acc[t] += p[t];
        }
        if (N + n - 1 >= 0) {
          auto a = Y(n - 1, N);
          auto b = Ydag(m - 1, N + n - 1);
          auto p = matmul(b.on, b.rows, b.cols, a.on, a.cols);
          for (size_t t = 0; t < acc.size(); ++t) acc[t] += p[t];
        }
        if (n == m)
          for (int d = 0; d < dimN; ++d) acc[size_t(d) * dimN + d] -= 1.0;
        for (double v : acc) res.interior_max = std::max(res.interior_max, std::abs(v));
        if (n == m && N == 0) res.vacuum_max = std::max(res.vacuum_max, std::abs(acc[0]));
        ++res.interior_blocks;
      }
  return res;
}

EnergyProbe energy_bound_probe(const FockSpace& F, const QVec& alpha, const QVec& mu, int order,
                               std::vector<int> cutoffs, int smax, double slack, Exec exec) {
  if (cutoffs.empty()) throw std::invalid_argument("energy_bound_probe: no cutoffs");
  for (size_t i = 0; i < cutoffs.size(); ++i)
    if (cutoffs[i] < 0 || (i > 0 && cutoffs[i] <= cutoffs[i - 1]))
      throw std::invalid_argument("energy_bound_probe: cutoffs must be increasing and nonnegative");
  if (order < 0) throw std::invalid_argument("energy_bound_probe: order must be >= 0");
  EnergyProbe P;
  P.alpha = alpha;
  P.mu = mu;
  P.order = order;
  P.slack = slack;
  P.cutoffs = cutoffs;
  const int E = cutoffs.back();
  Q am = F.ip(alpha, mu);
  Q base = Q(1) + F.ip(mu, mu) / 2;
  // modes s ∈ −1 − (α|μ) + Z with |s| ≤ smax
  std::vector<Q> modes;
  {
    Q s0 = -1 - am;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), s0.get_num().get_mpz_t(), s0.get_den().get_mpz_t());
    Q frac = s0 - Q(fl);
    for (int j = -smax - 1; j <= smax + 1; ++j) {
      Q s = frac + j;
      s.canonicalize();
      if (abs(s) <= smax) modes.push_back(s);
    }
  }
  for (int N = 0; N <= E; ++N) fock_level(F.rank(), N);
  // per mode, per source level: weighted block norm (or −1 when the target is out of range)
  std::vector<std::vector<double>> val(modes.size(), std::vector<double>(E + 1, -1.0));
  std::vector<int> shift(modes.size());
  auto body = [&](int64_t j) {
    Coeffs C(F, alpha);
    int d = mode_shift(F, alpha, mu, modes[j]);
    shift[j] = d;
    for (int N = 0; N <= E; ++N) {
      int Nt = N + d;
      if (Nt < 0) {
        val[j][N] = 0;
        continue;
      }
      if (Nt > E) continue;
      auto b = make_block(F, C, N, Nt);
      double w = std::pow(Q(base + N).get_d(), double(order));
      val[j][N] = block_norm(b.on, b.rows, b.cols) / w;
    }
  };
  const int64_t J = int64_t(modes.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t j = 0; j < J; ++j) body(j);
  } else {
    for (int64_t j = 0; j < J; ++j) body(j);
  }
  for (int Ec : cutoffs) {
    double mx = 0;
    for (size_t j = 0; j < modes.size(); ++j) {
      double m = 0;
      for (int N = 0; N <= Ec; ++N)
        if (N + shift[j] <= Ec && val[j][N] > m) m = val[j][N];
      P.norms[Ec][modes[j]] = m;
      mx = std::max(mx, m);
    }
    P.maxima.push_back(mx);
  }
  P.pass = true;
  for (size_t i = 1; i < P.maxima.size(); ++i)
    if (P.maxima[i] > slack * P.maxima[i - 1]) P.pass = false;
  return P;
}

AdjointResult adjoint_phase_check(const FockSpace& F, const QVec& alpha, const QVec& beta, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("adjoint_phase_check: cutoff must be >= 0");
  AdjointResult R;
  Q delta = F.ip(alpha, alpha) / 2;
  R.phase = Phase(delta);
  const std::complex<double> ph = R.phase.value(), phc = Phase(-delta).value();
  const QVec ab = add(alpha, beta), na = neg(alpha);
  Coeffs Cp(F, alpha), Cm(F, na);
  Q ip_ab = F.ip(alpha, beta);
  for (int d = -cutoff; d <= cutoff; ++d) {
    Q s = -1 - ip_ab - d;
    Q sp = 2 * delta - 2 - s;
    // Y_{−α}(s') on L(α+β) must undo the shift of Y_α(s) on L(β)
    if (mode_shift(F, na, ab, sp) != -d || mode_shift(F, alpha, beta, s) != d) R.index_ok = false;
    for (int N = 0; N <= cutoff; ++N) {
      int Nt = N + d;
      if (Nt < 0 || Nt > cutoff) continue;
      auto A = make_block(F, Cp, N, Nt);   // L(β)_N → L(α+β)_{N'}
      auto B = make_block(F, Cm, Nt, N);   // L(α+β)_{N'} → L(β)_N
      for (int r = 0; r < B.rows; ++r)
        for (int c = 0; c < B.cols; ++c) {
          std::complex<double> lhs = ph * B.at(r, c);
          std::complex<double> rhs = std::conj(phc * A.at(c, r));
          R.deviation = std::max(R.deviation, std::abs(lhs - rhs));
        }
      ++R.blocks;
    }
  }
  return R;
}

std::vector<Q> braid_leading_coefficients(const FockSpace& F, const QVec& alpha, const QVec& beta,
                                          const QVec& gamma, int cutoff) {
  (void)gamma;  // c_γ and x^{α(0)} only contribute the prefactor
  Coeffs Ca(F, alpha), Cb(F, beta);
  const Monomial vac;
  std::vector<Q> P;
  for (int N = 0; N <= cutoff; ++N) {
    Q s = 0;
    for (auto& w : fock_level(F.rank(), N)) s += pair_coeff(Cb, vac, w) * pair_coeff(Ca, w, vac);
    s.canonicalize();
    P.push_back(s);
  }
  return P;
}

Q signed_binomial(const Q& p, int N) {
  Q r = 1;
  for (int j = 0; j < N; ++j) r *= (p - j) / (j + 1);
  if (N % 2) r = -r;
  r.canonicalize();
  return r;
}

std::vector<std::pair<double, double>> default_braid_samples() {
  return {{0.3, 0.1}, {1.0, -0.5}, {2.5, 0.2}, {3.0, -3.0}, {6.0, 0.0}, {0.7, -4.9}, {-1.0, -2.0}};
}

BraidResult braid_phase_check(const FockSpace& F, const QVec& alpha, const QVec& beta, const QVec& gamma, int cutoff,
                              const std::vector<std::pair<double, double>>& args) {
  BraidResult R;
  R.pairing = F.ip(alpha, beta);
  if (!is_integer(R.pairing) || sgn(R.pairing) < 0 || R.pairing > cutoff)
    throw std::invalid_argument("braid_phase_check: on |z1| = |z2| = 1 the truncated series converges only for (α|β) in {0,...,cutoff}; got " +
                                qstr(R.pairing));
  for (auto [t1, t2] : args)
    if (!(t2 < t1 && t1 < t2 + 2 * std::numbers::pi))
      throw std::invalid_argument("braid_phase_check: sample violates arg z2 < arg z1 < arg z2 + 2π");
  R.lhs = braid_leading_coefficients(F, alpha, beta, gamma, cutoff);
  R.rhs = braid_leading_coefficients(F, beta, alpha, gamma, cutoff);
  R.factorization_ok = true;
  for (int N = 0; N <= cutoff; ++N)
    if (R.lhs[N] != signed_binomial(R.pairing, N) || R.rhs[N] != signed_binomial(R.pairing, N))
      R.factorization_ok = false;
  const double pa_bg = F.ip(alpha, add(beta, gamma)).get_d(), pb_g = F.ip(beta, gamma).get_d();
  const double pb_ag = F.ip(beta, add(alpha, gamma)).get_d(), pa_g = F.ip(alpha, gamma).get_d();
  R.expected = Phase(R.pairing).value();
  using C = std::complex<double>;
  const C I(0, 1);
  for (auto [t1, t2] : args) {
    C q = std::exp(I * (t2 - t1)), qi = std::exp(I * (t1 - t2));
    C sl = 0, sr = 0, ql = 1, qr = 1;
    for (int N = 0; N <= cutoff; ++N) {
      sl += R.lhs[N].get_d() * ql;
      sr += R.rhs[N].get_d() * qr;
      ql *= q;
      qr *= qi;
    }
    C lhs = std::exp(I * (pa_bg * t1 + pb_g * t2)) * sl;
    C rhs = std::exp(I * (pb_ag * t2 + pa_g * t1)) * sr;
    C ratio = lhs / rhs;
    R.ratios.push_back(ratio);
    R.deviation = std::max(R.deviation, std::abs(ratio - R.expected));
  }
  return R;
}

}  // namespace wzw
