#include "wzw/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace wzw {

std::string qstr(const Q& q) { return q.get_str(); }

Q parse_q(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + raw + "'"); };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  auto digits = [](const std::string& t, bool sign_ok) {
    size_t i = (sign_ok && !t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(s, true)) throw bad();
  } else {
    if (!digits(s.substr(0, slash), true) || !digits(s.substr(slash + 1), false)) throw bad();
    if (s.substr(slash + 1).find_first_not_of('0') == std::string::npos) throw bad();
  }
  Q q(s, 10);
  q.canonicalize();
  return q;
}

std::vector<Q> parse_qlist(const std::string& s) {
  std::vector<Q> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_q(tok));
  return out;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat operator*(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Q& a = x(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (sgn(y(k, j)) != 0) r(i, j) += a * y(k, j);
    }
  return r;
}

QMat operator-(const QMat& x, const QMat& y) {
  QMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

QMat operator+(const QMat& x, const QMat& y) {
  QMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

QVec mul(const QMat& m, const QVec& v) {
  QVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) r[i] += m(i, j) * v[j];
  return r;
}

bool is_zero(const QMat& m) { return is_zero(m.a); }

std::vector<int> rref(QMat& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Q f = m(i, c);
      for (int j = c; j < m.cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(QMat m) { return int(rref(m).size()); }

std::vector<QVec> nullspace(const QMat& m) {
  QMat r = m;
  auto piv = rref(r);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<QVec> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    QVec v(m.cols);
    v[f] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(int(k), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  QMat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  QVec x(m.cols);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(int(k), m.cols);
  return x;
}

QVec SpanBasis::reduce(QVec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Q& f = v[piv_[k]];
    if (sgn(f) == 0) continue;
    Q c = f;
    const QVec& r = rows_[k];
    for (int j = 0; j < n_; ++j)
      if (sgn(r[j]) != 0) v[j] -= c * r[j];
  }
  return v;
}

bool SpanBasis::add(const QVec& v0) {
  QVec v = reduce(v0);
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (sgn(v[j]) != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Q inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& r : rows_) {
    if (sgn(r[p]) == 0) continue;
    Q f = r[p];
    for (int j = 0; j < n_; ++j)
      if (sgn(v[j]) != 0) r[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  piv_.push_back(p);
  return true;
}

QVec SpMat::apply(const QVec& v) const {
  QVec r(rows);
  for (int j = 0; j < cols; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (const auto& [i, x] : col[j]) r[i] += x * v[j];
  }
  return r;
}

QMat SpMat::dense() const {
  QMat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, x] : col[j]) m(i, j) = x;
  return m;
}

SpMat SpMat::from_dense(const QMat& m) {
  SpMat s(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i)
      if (sgn(m(i, j)) != 0) s.col[j].emplace_back(i, m(i, j));
  return s;
}

}  // namespace wzw
