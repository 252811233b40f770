#include "wzw/chevalley.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wzw {

namespace {

std::vector<int> nonzeros(const Elem& x) {
  std::vector<int> nz;
  for (int i = 0; i < int(x.size()); ++i)
    if (sgn(x[i]) != 0) nz.push_back(i);
  return nz;
}

// y = λx for some λ; nullopt if not proportional or x = 0.
std::optional<Q> ratio(const Elem& y, const Elem& x) {
  int p = -1;
  for (int i = 0; i < int(x.size()); ++i)
    if (sgn(x[i]) != 0) {
      p = i;
      break;
    }
  if (p < 0) return std::nullopt;
  Q lam = y[p] / x[p];
  for (size_t i = 0; i < x.size(); ++i)
    if (y[i] != lam * x[i]) return std::nullopt;
  return lam;
}

Elem scaled(Elem x, const Q& c) {
  for (auto& v : x) v *= c;
  return x;
}

Elem add(Elem x, const Elem& y, const Q& c = 1) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------

StructureAlgebra::StructureAlgebra(const AlgebraId& id) : id_(id) {
  id.validate();
  if (!id.simply_laced()) throw std::invalid_argument("structure constants need a simply-laced type, got " + id.name());
  rs_ = root_system(id);
  r_ = rs_->rank();
  const auto& pos = rs_->positive_roots();
  npos_ = int(pos.size());
  for (auto& c : pos) root_.push_back(c);
  for (auto& c : pos) {
    auto m = c;
    for (auto& v : m) v = -v;
    root_.push_back(m);
  }
  const int R = int(root_.size());
  for (int k = 0; k < R; ++k) index_[root_[k]] = k;

  std::vector<std::vector<long>> gram(r_, std::vector<long>(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) gram[i][j] = rs_->cartan(i, j);
  cocycle_ = std::make_unique<Cocycle>(IntegralLattice(gram));

  pair_.assign(size_t(R) * r_, 0);
  for (int k = 0; k < R; ++k)
    for (int i = 0; i < r_; ++i) {
      int s = 0;
      for (int j = 0; j < r_; ++j) s += root_[k][j] * rs_->cartan(j, i);
      pair_[size_t(k) * r_ + i] = s;
    }

  sum_.assign(size_t(R) * R, -1);
  sg_.assign(size_t(R) * R, 0);
  eneg_.assign(R, 0);
  std::vector<long> a(r_), b(r_);
  for (int k = 0; k < R; ++k)
    for (int l = 0; l < R; ++l) {
      std::vector<int> s(r_);
      bool z = true;
      for (int i = 0; i < r_; ++i) {
        s[i] = root_[k][i] + root_[l][i];
        z = z && s[i] == 0;
      }
      int idx = z ? -2 : root_index(s);
      sum_[size_t(k) * R + l] = idx;
      if (idx == -1) continue;
      for (int i = 0; i < r_; ++i) {
        a[i] = root_[k][i];
        b[i] = root_[l][i];
      }
      sg_[size_t(k) * R + l] = static_cast<signed char>(cocycle_->eps(a, b));
      if (z) eneg_[k] = sg_[size_t(k) * R + l];
    }
}

int StructureAlgebra::root_index(const std::vector<int>& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int StructureAlgebra::epsilon(const std::vector<int>& a, const std::vector<int>& b) const {
  return cocycle_->eps(std::vector<long>(a.begin(), a.end()), std::vector<long>(b.begin(), b.end()));
}

Elem StructureAlgebra::basis(int b) const {
  if (b < 0 || b >= dim()) throw std::out_of_range("basis index " + std::to_string(b));
  Elem x = zero();
  x[b] = 1;
  return x;
}

std::vector<int> StructureAlgebra::weight(int b) const {
  if (b < r_) return std::vector<int>(r_, 0);
  return root_[b - r_];
}

void StructureAlgebra::add_bracket(int a, int b, const Q& c, Elem& out) const {
  const int R = num_roots();
  if (a < r_ && b < r_) return;
  if (a < r_) {
    int k = b - r_;
    out[b] += c * pair_[size_t(k) * r_ + a];
    return;
  }
  if (b < r_) {
    int k = a - r_;
    out[a] -= c * pair_[size_t(k) * r_ + b];
    return;
  }
  int k = a - r_, l = b - r_;
  int idx = sum_[size_t(k) * R + l];
  if (idx == -1) return;
  int s = sg_[size_t(k) * R + l];
  if (idx == -2) {
    for (int i = 0; i < r_; ++i)
      if (root_[k][i] != 0) out[i] += c * (s * root_[k][i]);
    return;
  }
  out[r_ + idx] += c * s;
}

Elem StructureAlgebra::bracket(const Elem& x, const Elem& y) const {
  Elem out = zero();
  auto nx = nonzeros(x), ny = nonzeros(y);
  Q c;
  for (int a : nx)
    for (int b : ny) {
      c = x[a] * y[b];
      add_bracket(a, b, c, out);
    }
  return out;
}

Elem StructureAlgebra::star(const Elem& x) const {
  Elem out = zero();
  for (int i = 0; i < r_; ++i) out[i] = x[i];
  for (int k = 0; k < num_roots(); ++k)
    if (sgn(x[r_ + k]) != 0) out[r_ + negative(k)] = x[r_ + k] * eneg_[k];
  return out;
}

Q StructureAlgebra::form_basis(int a, int b) const {
  if (a < r_ && b < r_) return rs_->cartan(a, b);
  if (a < r_ || b < r_) return 0;
  int k = a - r_;
  return negative(k) == b - r_ ? Q(eneg_[k]) : Q(0);
}

Q StructureAlgebra::form(const Elem& x, const Elem& y) const {
  Q s = 0;
  for (int i = 0; i < r_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < r_; ++j) s += x[i] * y[j] * rs_->cartan(i, j);
  }
  for (int k = 0; k < num_roots(); ++k)
    if (sgn(x[r_ + k]) != 0) s += x[r_ + k] * y[r_ + negative(k)] * eneg_[k];
  return s;
}

Elem StructureAlgebra::nested_bracket(const std::vector<int>& word) const {
  if (word.empty()) throw std::invalid_argument("empty bracket word");
  for (int w : word)
    if (w < 0 || w >= r_) throw std::out_of_range("simple index " + std::to_string(w) + " out of range");
  Elem acc = e(word.back());
  for (int i = int(word.size()) - 2; i >= 0; --i) acc = bracket(e(word[i]), acc);
  return acc;
}

std::shared_ptr<const StructureAlgebra> build_simply_laced(const AlgebraId& id) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const StructureAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[id.name()];
  if (!slot) slot = std::make_shared<const StructureAlgebra>(id);
  return slot;
}

// ---------------------------------------------------------------------------

namespace {

struct TripleFails {
  bool jacobi = false, invariance = false, star = false;
};

TripleFails check_triple(const StructureAlgebra& g, int a, int b, int c) {
  TripleFails f;
  Elem X = g.basis(a), Y = g.basis(b), Z = g.basis(c);
  Elem yz = g.bracket(Y, Z), zx = g.bracket(Z, X), xy = g.bracket(X, Y);
  Elem j = add(add(g.bracket(X, yz), g.bracket(Y, zx)), g.bracket(Z, xy));
  f.jacobi = !is_zero(j);
  f.invariance = g.inner(xy, Z) != g.inner(Y, g.bracket(g.star(X), Z));
  f.star = g.star(xy) != g.bracket(g.star(Y), g.star(X));
  return f;
}

StructureReport run_triples(const StructureAlgebra& g, const std::vector<std::array<int, 3>>& t, Exec exec) {
  int64_t jf = 0, inf = 0, sf = 0;
  const int64_t n = int64_t(t.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : jf, inf, sf) if (exec == Exec::Parallel)
  for (int64_t i = 0; i < n; ++i) {
    auto f = check_triple(g, t[i][0], t[i][1], t[i][2]);
    jf += f.jacobi;
    inf += f.invariance;
    sf += f.star;
  }
  StructureReport r;
  r.triples = n;
  r.jacobi_fail = jf;
  r.invariance_fail = inf;
  r.star_fail = sf;
  return r;
}

}  // namespace

StructureReport check_structure_exhaustive(const StructureAlgebra& g, Exec exec) {
  std::vector<std::array<int, 3>> t;
  const int d = g.dim();
  t.reserve(size_t(d) * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) t.push_back({a, b, c});
  return run_triples(g, t, exec);
}

StructureReport check_structure_sampled(const StructureAlgebra& g, std::mt19937_64& rng, int64_t triples, Exec exec) {
  std::uniform_int_distribution<int> pick(0, g.dim() - 1);
  std::vector<std::array<int, 3>> t(static_cast<size_t>(triples));
  for (auto& x : t) x = {pick(rng), pick(rng), pick(rng)};
  return run_triples(g, t, exec);
}

// ---------------------------------------------------------------------------

bool EmbeddedSubalgebra::contains(const Elem& x) const { return span && span->contains(x); }

Lbl EmbeddedSubalgebra::restrict_labels(const Lbl& lam) const {
  const int r = ambient->rank();
  Lbl out{};
  for (size_t j = 0; j < cartan_images.size(); ++j) {
    const Elem& H = cartan_images[j];
    for (int b = r; b < ambient->dim(); ++b)
      if (sgn(H[b]) != 0) throw VerificationFailed(name + ": coroot " + std::to_string(j + 1) + " leaves the Cartan");
    Q s = 0;
    for (int k = 0; k < r; ++k) s += H[k] * lam[k];
    if (!is_integer(s)) throw VerificationFailed(name + ": non-integral restricted label");
    out[j] = int(s.get_num().get_si());
  }
  return out;
}

std::optional<EmbeddedSubalgebra> try_generate_subalgebra(std::shared_ptr<const StructureAlgebra> amb,
                                                          std::vector<Elem> gens, const AlgebraId& expected,
                                                          std::string name, std::string* why) {
  auto fail = [&](const std::string& s) -> std::optional<EmbeddedSubalgebra> {
    if (why) *why = name + ": " + s;
    return std::nullopt;
  };
  const StructureAlgebra& g = *amb;
  auto srs = root_system(expected);
  const int n = int(gens.size());
  if (n != srs->rank()) return fail("expected " + std::to_string(srs->rank()) + " generators");

  std::vector<Elem> stars;
  for (auto& x : gens) {
    if (is_zero(x)) return fail("zero generator");
    stars.push_back(g.star(x));
  }

  auto span = std::make_shared<SpanBasis>(g.dim());
  std::vector<Elem> elems;
  for (int i = 0; i < n; ++i) {
    if (span->add(gens[i])) elems.push_back(gens[i]);
    if (span->add(stars[i])) elems.push_back(stars[i]);
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (int j = 0; j < n; ++j)
      for (const Elem* s : {&gens[j], &stars[j]}) {
        Elem z = g.bracket(*s, elems[i]);
        if (span->add(z)) elems.push_back(std::move(z));
      }
    if (int(elems.size()) > srs->dim()) return fail("closure exceeds dim " + std::to_string(srs->dim()));
  }
  if (int(elems.size()) != srs->dim())
    return fail("closure has dim " + std::to_string(elems.size()) + ", expected " + std::to_string(srs->dim()));

  std::vector<Elem> H(n);
  for (int j = 0; j < n; ++j) {
    Elem C = g.bracket(gens[j], stars[j]);
    auto lam = ratio(g.bracket(C, gens[j]), gens[j]);
    if (!lam || sgn(*lam) == 0) return fail("generator " + std::to_string(j + 1) + " is not an ad[X,X*] eigenvector");
    H[j] = scaled(C, Q(2) / *lam);
  }
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lam = ratio(g.bracket(H[j], gens[i]), gens[i]);
      if (!lam || !is_integer(*lam))
        return fail("[H_" + std::to_string(j + 1) + ", X_" + std::to_string(i + 1) + "] not an integer multiple");
      raw[i][j] = int(lam->get_num().get_si());
    }
  // [X_i, X_j*] = 0 for i ≠ j is part of the Chevalley relations.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !is_zero(g.bracket(gens[i], stars[j])))
        return fail("[X_" + std::to_string(i + 1) + ", X_" + std::to_string(j + 1) + "*] ≠ 0");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = raw[perm[i]][perm[j]] == srs->cartan(i, j);
    if (ok) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) {
    std::ostringstream os;
    os << "recovered Cartan matrix [";
    for (int i = 0; i < n; ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < n; ++j) os << (j ? " " : "") << raw[i][j];
    }
    os << "] does not match " << expected.name();
    return fail(os.str());
  }

  EmbeddedSubalgebra s;
  s.ambient = amb;
  s.name = std::move(name);
  s.type = expected;
  s.order = perm;
  s.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    s.generators.push_back(gens[perm[i]]);
    s.stars.push_back(stars[perm[i]]);
    s.cartan_images.push_back(H[perm[i]]);
    for (int j = 0; j < n; ++j) s.cartan[i][j] = raw[perm[i]][perm[j]];
  }
  s.span_basis = std::move(elems);
  s.span = span;
  return s;
}

EmbeddedSubalgebra generate_subalgebra(std::shared_ptr<const StructureAlgebra> amb, std::vector<Elem> gens,
                                       const AlgebraId& expected, std::string name) {
  std::string why;
  auto s = try_generate_subalgebra(std::move(amb), std::move(gens), expected, std::move(name), &why);
  if (!s) throw VerificationFailed(why);
  return std::move(*s);
}

int dynkin_index(const EmbeddedSubalgebra& sub) {
  auto srs = root_system(sub.type);
  std::optional<Q> k;
  for (size_t j = 0; j < sub.cartan_images.size(); ++j) {
    const Elem& H = sub.cartan_images[j];
    Q kj = sub.ambient->form(H, H) * srs->gram()(int(j), int(j)) / 4;
    if (k && *k != kj) throw VerificationFailed(sub.name + ": form ratio differs between simple roots");
    k = kj;
  }
  if (!k || !is_integer(*k) || sgn(*k) <= 0) throw VerificationFailed(sub.name + ": Dynkin index is not a positive integer");
  return int(k->get_num().get_si());
}

// ---------------------------------------------------------------------------

int64_t Branching::total() const {
  auto rs = root_system(sub);
  int64_t t = 0;
  for (auto& [w, m] : mult) t += m * rs->weyl_dimension(w);
  return t;
}

std::string Branching::str() const {
  auto rs = root_system(sub);
  std::ostringstream os;
  bool first = true;
  for (auto& [w, m] : mult) {
    os << (first ? "" : " + ") << m << "×(";
    for (int i = 0; i < rs->rank(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    first = false;
  }
  return os.str();
}

namespace {

Branching peel(const AlgebraId& sub, LblMap rem, int64_t dim) {
  auto rs = root_system(sub);
  Branching out;
  out.sub = sub;
  out.dim = dim;
  for (;;) {
    for (auto it = rem.begin(); it != rem.end();)
      it = it->second == 0 ? rem.erase(it) : std::next(it);
    if (rem.empty()) break;
    auto top = std::max_element(rem.begin(), rem.end(), [&](auto& a, auto& b) {
      auto ha = rs->height_scaled(a.first), hb = rs->height_scaled(b.first);
      return ha != hb ? ha < hb : a.first < b.first;
    });
    Lbl hw = top->first;
    int64_t m = top->second;
    if (!rs->dominant(hw) || m < 0) throw VerificationFailed("branching: restricted character is not a sum of characters");
    auto ch = all_weights(*rs, dominant_character(*rs, hw));
    for (auto& [w, c] : ch) {
      auto it = rem.find(w);
      if (it == rem.end() || it->second < m * c)
        throw VerificationFailed("branching: restricted character is not a sum of characters");
      it->second -= m * c;
    }
    out.mult[hw] += m;
  }
  return out;
}

}  // namespace

Branching branch(const EmbeddedSubalgebra& sub, const Lbl& hw, int64_t cap) {
  const RootSystem& rs = sub.ambient->roots();
  auto ch = dominant_character(rs, hw);
  if (ch.dim > cap) throw CapExceeded("branch", ch.dim, cap);
  LblMap rem;
  for (auto& [w, m] : all_weights(rs, ch)) rem[sub.restrict_labels(w)] += m;
  return peel(sub.type, std::move(rem), ch.dim);
}

Branching branch_adjoint(const EmbeddedSubalgebra& sub) {
  return branch(sub, sub.ambient->roots().theta_lbl(), int64_t(sub.ambient->dim()));
}

Branching adjoint_highest_vectors(const EmbeddedSubalgebra& sub) {
  const StructureAlgebra& g = *sub.ambient;
  const int r = g.rank(), d = g.dim(), n = int(sub.generators.size());
  // Sub weight of each ambient basis vector.
  std::map<Lbl, std::vector<int>> blocks;
  for (int b = 0; b < d; ++b) {
    auto w = g.weight(b);
    Lbl lam{};
    for (int k = 0; k < r; ++k) {
      int s = 0;
      for (int j = 0; j < r; ++j) s += w[j] * g.roots().cartan(j, k);
      lam[k] = s;
    }
    blocks[sub.restrict_labels(lam)].push_back(b);
  }
  std::vector<std::vector<Elem>> img(n, std::vector<Elem>(d));
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < d; ++b) img[j][b] = g.bracket(sub.generators[j], g.basis(b));

  auto srs = root_system(sub.type);
  Branching out;
  out.sub = sub.type;
  out.dim = d;
  for (auto& [lam, cols] : blocks) {
    if (!srs->dominant(lam)) continue;
    QMat M(n * d, int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < d; ++b) M(j * d + b, c) = img[j][cols[c]][b];
    int k = int(cols.size()) - rank(M);
    if (k > 0) out.mult[lam] = k;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::array<int, 8> e8_label_map() { return {7, 6, 5, 4, 3, 2, 0, 1}; }

Elem e8_word(const StructureAlgebra& e8, const std::string& word) {
  if (e8.id() != AlgebraId{'E', 8}) throw std::invalid_argument("e8_word needs E8");
  auto map = e8_label_map();
  std::vector<int> w;
  for (char ch : word) {
    if (ch < '1' || ch > '8') throw std::invalid_argument("bad E8 label in word " + word);
    w.push_back(map[ch - '1']);
  }
  std::reverse(w.begin(), w.end());
  Elem x = e8.nested_bracket(w);
  return w.size() % 2 == 0 ? scaled(x, -1) : x;
}

G2F4Embedding dynkin_embedding_g2_f4() {
  G2F4Embedding out;
  out.e8 = build_simply_laced(AlgebraId{'E', 8});
  const StructureAlgebra& g = *out.e8;
  auto P = [&](const std::string& w) { return e8_word(g, w); };

  const std::array<Elem, 3> words = {P("234568543"), P("234567854"), P("234567856")};
  out.a2 = P("1");
  out.b = {add(P("3"), P("7")), add(P("4"), P("6")), P("5"), P("8")};

  std::string why;
  auto f4 = try_generate_subalgebra(out.e8, {out.b.begin(), out.b.end()}, AlgebraId{'F', 4}, "f4", &why);
  if (!f4) throw VerificationFailed(why);
  out.f4 = std::move(*f4);

  const std::array<std::array<int, 3>, 4> variants = {{{1, -1, 1}, {1, 1, 1}, {1, 1, -1}, {1, -1, -1}}};
  for (auto& sg : variants) {
    Elem a1 = g.zero();
    for (int i = 0; i < 3; ++i) a1 = add(a1, words[i], sg[i]);
    std::string tag = "(" + std::to_string(sg[0]) + "," + std::to_string(sg[1]) + "," + std::to_string(sg[2]) + ")";
    auto g2 = try_generate_subalgebra(out.e8, {a1, out.a2}, AlgebraId{'G', 2}, "g2", &why);
    if (!g2) {
      out.rejected.push_back(tag + " " + why);
      continue;
    }
    if (g2->order != std::vector<int>{0, 1}) {
      out.rejected.push_back(tag + " A1 is not the short simple root vector");
      continue;
    }
    bool commute = true;
    for (const Elem* x : {&g2->generators[0], &g2->generators[1], &g2->stars[0], &g2->stars[1]})
      for (int j = 0; j < 4 && commute; ++j)
        commute = is_zero(g.bracket(*x, out.f4.generators[j])) && is_zero(g.bracket(*x, out.f4.stars[j]));
    SpanBasis joint(g.dim());
    for (auto& x : g2->span_basis) joint.add(x);
    for (auto& x : out.f4.span_basis) joint.add(x);
    if (!commute || joint.dim() != 66) {
      out.rejected.push_back(tag + (commute ? " joint span has dim " + std::to_string(joint.dim()) : " g2 and f4 do not commute"));
      continue;
    }
    out.a1 = a1;
    out.a1_signs = sg;
    out.g2 = std::move(*g2);
    out.commute = true;
    out.joint_dim = joint.dim();
    return out;
  }
  std::string msg = "no sign variant of A1 generates g2 commuting with f4:";
  for (auto& s : out.rejected) msg += "\n  " + s;
  throw VerificationFailed(msg);
}

// ---------------------------------------------------------------------------

Lemma30Result verify_lemma_lb30(const G2F4Embedding& emb) {
  const StructureAlgebra& g = *emb.e8;
  const int d = g.dim();
  // Rows: linear functionals X ↦ ⟨X|u⟩ for u spanning g2 ⊕ f4.
  std::vector<Elem> rows;
  for (auto* s : {&emb.g2, &emb.f4})
    for (auto& u : s->span_basis) {
      Elem v = g.star(u), row = g.zero();
      for (int a = 0; a < d; ++a) {
        int b = a < g.rank() ? -1 : g.rank() + g.negative(a - g.rank());
        if (b >= 0) {
          row[a] = v[b] * g.form_basis(a, b);
        } else {
          for (int j = 0; j < g.rank(); ++j) row[a] += v[j] * g.form_basis(a, j);
        }
      }
      rows.push_back(row);
    }
  QMat A(int(rows.size()), d);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = rows[i][j];
  auto in_m = [&](const Elem& x) {
    for (auto& row : rows) {
      Q s = 0;
      for (int j = 0; j < d; ++j)
        if (sgn(x[j]) != 0) s += row[j] * x[j];
      if (sgn(s) != 0) return false;
    }
    return true;
  };

  Lemma30Result r;
  r.m_dim = d - rank(A);
  auto P = [&](const std::string& w) { return e8_word(g, w); };
  r.x = P("2");
  r.y = add(P("4"), P("6"), -1);
  r.xy = g.bracket(r.x, r.y);
  r.x_in_m = in_m(r.x);
  r.y_in_m = in_m(r.y);
  r.xy_in_m = in_m(r.xy);
  r.xy_zero = is_zero(r.xy);
  r.literal_pairing = g.inner(r.xy, r.xy);

  struct Cand {
    std::string name;
    Elem v;
  };
  std::vector<Cand> cands;
  for (int i = 1; i <= 8; ++i) cands.push_back({"P" + std::to_string(i), P(std::to_string(i))});
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int s : {1, -1})
        cands.push_back({"P" + std::to_string(i) + (s > 0 ? "+" : "-") + "P" + std::to_string(j),
                         add(P(std::to_string(i)), P(std::to_string(j)), s)});
  std::vector<Cand> inm;
  for (auto& c : cands)
    if (in_m(c.v)) inm.push_back(c);
  for (auto& X : inm)
    for (auto& Y : inm) {
      Elem xy = g.bracket(X.v, Y.v);
      if (is_zero(xy) || !in_m(xy)) continue;
      r.witness = "X=" + X.name + ", Y=" + Y.name + ", Z=[X,Y]";
      r.wx = X.v;
      r.wy = Y.v;
      r.wz = xy;
      r.witness_pairing = g.inner(xy, xy);
      return r;
    }
  throw VerificationFailed("no triple in (g2+f4)^perp with nonzero ([X,Y]|Z) among P_i, P_i±P_j");
}

// ---------------------------------------------------------------------------

EmbeddedSubalgebra so_odd_in_so_even(int n) {
  if (n < 2) throw std::invalid_argument("so(2n+1) in so(2n+2) needs n >= 2");
  auto g = build_simply_laced(AlgebraId{'D', n + 1});
  std::vector<Elem> gens;
  for (int i = 0; i < n - 1; ++i) gens.push_back(g->e(i));
  gens.push_back(add(g->e(n - 1), g->e(n)));
  return generate_subalgebra(g, gens, AlgebraId{'B', n}, "so" + std::to_string(2 * n + 1));
}

EmbeddedSubalgebra sp_in_so(int n) {
  if (n < 2) throw std::invalid_argument("sp(2n) in so(4n) needs n >= 2");
  auto g = build_simply_laced(AlgebraId{'D', 2 * n});
  std::vector<Elem> gens;
  for (int i = 0; i < n - 1; ++i) gens.push_back(add(g->e(i), g->e(2 * n - 2 - i)));
  gens.push_back(g->e(n - 1));
  return generate_subalgebra(g, gens, AlgebraId{'C', n}, "sp" + std::to_string(2 * n));
}

// ---------------------------------------------------------------------------

bool PairingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass; });
}

namespace {

Lbl lbl_of(const RootSystem& rs, const QVec& simple_coords) { return rs.labels(Weight{rs.id(), simple_coords}); }

QVec orth_combo(const std::vector<Weight>& basis, const std::vector<Q>& c) {
  QVec x(basis[0].coords.size());
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t a = 0; a < x.size(); ++a) x[a] += c[i] * basis[i].coords[a];
  return x;
}

QVec unit(int dim, int b) {
  QVec x(size_t(dim), Q(0));
  x[b] = 1;
  return x;
}

int single(const ModuleRealization& R, const Lbl& w) {
  if (!R.has_weight(w) || R.block(w).size() != 1) throw VerificationFailed("expected a one-dimensional weight space");
  return R.block(w)[0];
}

// so(2n+1) ⊂ so(2n+2) on the vector representation.
void lemma19(int n, int64_t cap, std::vector<LemmaCheck>& out) {
  auto sub = so_odd_in_so_even(n);
  const StructureAlgebra& g = *sub.ambient;
  const RootSystem& rs = g.roots();
  auto R = realize_module(rs, Lbl{1}, cap);
  // Lowering operators of the subalgebra as combinations of the module F_k.
  std::vector<std::vector<std::pair<int, Q>>> low(sub.generators.size());
  for (size_t j = 0; j < sub.generators.size(); ++j)
    for (int k = 0; k < g.rank(); ++k)
      if (sgn(sub.generators[j][g.raising(k)]) != 0) low[j].push_back({k, sub.generators[j][g.raising(k)]});
  auto sub_weight = [&](int b) { return sub.restrict_labels(R.wt[b]); };

  // g·v_{θ1}, kept as homogeneous vectors per subalgebra weight.
  std::map<Lbl, SpanBasis> W;
  std::vector<std::pair<Lbl, QVec>> queue;
  int top = single(R, Lbl{1});
  queue.push_back({sub_weight(top), unit(R.dim, top)});
  W.emplace(queue[0].first, SpanBasis(R.dim)).first->second.add(queue[0].second);
  auto srs = root_system(sub.type);
  for (size_t q = 0; q < queue.size(); ++q) {
    for (size_t j = 0; j < low.size(); ++j) {
      QVec v(size_t(R.dim), Q(0));
      for (auto& [k, c] : low[j]) {
        QVec fv = R.F[k].apply(queue[q].second);
        for (int a = 0; a < R.dim; ++a) v[a] += c * fv[a];
      }
      if (is_zero(v)) continue;
      Lbl w = queue[q].first;
      for (int i = 0; i < srs->rank(); ++i) w[i] -= srs->cartan(j, i);
      auto it = W.emplace(w, SpanBasis(R.dim)).first;
      if (it->second.add(v)) queue.push_back({w, v});
    }
  }
  int total = 0;
  for (auto& [w, s] : W) total += s.dim();

  auto th = classical_basis(rs);
  auto vt = classical_basis(*srs);
  bool a_ok = total == 2 * n + 1;
  std::ostringstream det;
  det << "dim g v = " << total;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      std::vector<Q> c(n + 1, 0);
      c[i] = s;
      Lbl amb = lbl_of(rs, orth_combo(th, c));
      std::vector<Q> cv(n, 0);
      cv[i] = s;
      Lbl subw = lbl_of(*srs, orth_combo(vt, cv));
      int b = single(R, amb);
      auto it = W.find(subw);
      bool ok = sub.restrict_labels(amb) == subw && it != W.end() && it->second.dim() == 1 &&
                it->second.contains(unit(R.dim, b));
      a_ok = a_ok && ok;
    }
  out.push_back({"lb19", "B" + std::to_string(n) + " (a): weight spaces ±ϑ_i of g v equal the ±θ_i spaces",
                 det.str(), a_ok});

  std::vector<Q> c(n + 1, 0);
  c[n] = 1;
  int bp = single(R, lbl_of(rs, orth_combo(th, c)));
  c[n] = -1;
  int bm = single(R, lbl_of(rs, orth_combo(th, c)));
  auto it = W.find(Lbl{});
  bool b_ok = it != W.end() && it->second.dim() == 1;
  std::ostringstream d2;
  if (b_ok) {
    const QVec& u0 = it->second.rows()[0];
    bool rest = true;
    for (int a = 0; a < R.dim; ++a)
      if (a != bp && a != bm && sgn(u0[a]) != 0) rest = false;
    b_ok = rest && sgn(u0[bp]) != 0 && sgn(u0[bm]) != 0;
    d2 << "u0 = " << qstr(u0[bp]) << " u+ + " << qstr(u0[bm]) << " u-";
  } else {
    d2 << "zero weight space of g v is not one-dimensional";
  }
  out.push_back({"lb19", "B" + std::to_string(n) + " (b): u0 = u+ + u- with both parts nonzero", d2.str(), b_ok});
}

// Spin modules of so(4n): ⟨T(e_{3n+k} ⊗ w_{k−1}) | w_k⟩ ≠ 0.
void lemma22(int n, int64_t cap, std::vector<LemmaCheck>& out) {
  auto rs = root_system(AlgebraId{'D', 2 * n});
  auto th = classical_basis(*rs);
  Lbl vec{}, plus{}, minus{};
  vec[0] = 1;
  plus[2 * n - 1] = 1;   // contains (θ1+…+θ2n)/2
  minus[2 * n - 2] = 1;
  auto V = realize_module(*rs, vec, cap);
  auto Sp = realize_module(*rs, plus, cap);
  auto Sm = realize_module(*rs, minus, cap);
  // Weight with minus signs on θ_{n+1}..θ_{n+m}.
  auto spin_weight = [&](int m) {
    std::vector<Q> c(2 * n, Q(1, 2));
    for (int i = n; i < n + m; ++i) c[i] = Q(-1, 2);
    return lbl_of(*rs, orth_combo(th, c));
  };
  for (int k = 1; k <= n; ++k) {
    const ModuleRealization& Mu = (k % 2 == 1) ? Sp : Sm;
    const ModuleRealization& Nu = (k % 2 == 1) ? Sm : Sp;
    std::vector<Q> c(2 * n, 0);
    c[n + k - 1] = -1;
    int e = single(V, lbl_of(*rs, orth_combo(th, c)));
    int wm = single(Mu, spin_weight(k - 1));
    int wn = single(Nu, spin_weight(k));
    auto homs = hom_space_basis(V, Mu, Nu);
    LemmaCheck chk{"lb22", "so" + std::to_string(4 * n) + " k=" + std::to_string(k) + ": <T(e⊗w_{k-1})|w_k> ≠ 0", "",
                   false};
    if (homs.size() != 1) {
      chk.detail = "Hom space has dim " + std::to_string(homs.size());
    } else {
      Q p = Nu.pair(homs[0].apply(e, wm), unit(Nu.dim, wn));
      chk.detail = "pairing " + qstr(p);
      chk.pass = sgn(p) != 0;
    }
    out.push_back(chk);
  }
}

void lemma32(int64_t cap, std::vector<LemmaCheck>& out) {
  auto rs = root_system(AlgebraId{'G', 2});
  auto L = realize_module(*rs, Lbl{1, 0}, cap);
  Lbl m{};
  for (int i = 0; i < 2; ++i) m[i] = -rs->alpha_lbl(0)[i];
  int u1 = single(L, m);
  int u2 = single(L, Lbl{1, 0});
  auto homs = hom_space_basis(L, L, L);
  LemmaCheck chk{"lb32", "G2: T(u1⊗u2) ≠ 0 for u1 of weight -α1, u2 highest", "", false};
  QVec a1u1 = L.E[0].apply(unit(L.dim, u1));
  if (homs.size() != 1) {
    chk.detail = "Hom space has dim " + std::to_string(homs.size());
  } else {
    QVec t = homs[0].apply(u1, u2);
    chk.pass = !is_zero(t) && !is_zero(a1u1);
    chk.detail = std::string("A1 u1 ") + (is_zero(a1u1) ? "= 0" : "≠ 0") + ", T(u1⊗u2) " + (is_zero(t) ? "= 0" : "≠ 0");
  }
  out.push_back(chk);
}

}  // namespace

PairingReport verify_pairing_lemmas(int64_t cap) {
  PairingReport r;
  lemma19(2, cap, r.checks);
  lemma19(3, cap, r.checks);
  lemma22(2, cap, r.checks);
  lemma32(cap, r.checks);
  return r;
}

}  // namespace wzw
