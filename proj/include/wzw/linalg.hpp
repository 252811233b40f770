#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wzw {

using Q = mpq_class;
using QVec = std::vector<Q>;

std::string qstr(const Q& q);
// Accepts "3", "-1/2", "+4". Throws std::invalid_argument otherwise.
Q parse_q(const std::string& s);
std::vector<Q> parse_qlist(const std::string& s);

bool is_zero(const QVec& v);
bool is_integer(const Q& q);

struct QMat {
  int rows = 0, cols = 0;
  std::vector<Q> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  Q& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Q& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  static QMat identity(int n);
  bool operator==(const QMat& o) const = default;
};

QMat operator*(const QMat& x, const QMat& y);
QMat operator-(const QMat& x, const QMat& y);
QMat operator+(const QMat& x, const QMat& y);
QMat transpose(const QMat& m);
QVec mul(const QMat& m, const QVec& v);
bool is_zero(const QMat& m);

// Row-reduces in place to reduced echelon form; returns pivot columns.
std::vector<int> rref(QMat& m);
int rank(QMat m);
// Basis of {x : m x = 0}.
std::vector<QVec> nullspace(const QMat& m);
std::optional<QMat> inverse(const QMat& m);
// Some x with m x = b, if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b);

// Incrementally maintained row space, kept fully reduced.
class SpanBasis {
 public:
  explicit SpanBasis(int n) : n_(n) {}
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const { return is_zero(reduce(v)); }
  // Returns true when v was independent of the current span.
  bool add(const QVec& v);
  int dim() const { return int(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<QVec>& rows() const { return rows_; }

 private:
  int n_;
  std::vector<QVec> rows_;
  std::vector<int> piv_;
};

using SpVec = std::vector<std::pair<int, Q>>;

// Column-sparse matrix; col[j] lists the nonzero (row, value) pairs of column j.
struct SpMat {
  int rows = 0, cols = 0;
  std::vector<SpVec> col;

  SpMat() = default;
  SpMat(int r, int c) : rows(r), cols(c), col(size_t(c)) {}

  QVec apply(const QVec& v) const;
  QMat dense() const;
  static SpMat from_dense(const QMat& m);
};

}  // namespace wzw
