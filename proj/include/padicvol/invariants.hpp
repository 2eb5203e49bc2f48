#pragma once

// The symmetric space GL_2n / (GL_n x GL_n) on explicit rational matrices:
// x = gamma eps gamma^{-1} with eps = diag(I_n, -I_n), blocks
//
//   x = [ A  B ]
//       [ C  D ]
//
// on which (g, h) acts by (gAg^{-1}, gBh^{-1}, hCg^{-1}, hDh^{-1}).
// Characters of matrices are characters of their determinants.

#include <string>
#include <utility>
#include <vector>

#include "padicvol/errors.hpp"
#include "padicvol/qring.hpp"
#include "padicvol/rational.hpp"

namespace padicvol {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw DomainError("matrix: negative dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw DomainError("matrix: ragged rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw DomainError("matrix: ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  /// Block diagonal diag(a, b).
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix sum: shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }

  Matrix scaled(const Rational& s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Rank by Gaussian elimination.
  int rank() const {
    Matrix m = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = r;
      while (piv < rows_ && m(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(piv, r);
      for (int i = r + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        const Rational f = m(i, c) / m(r, c);
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      ++r;
    }
    return r;
  }

  Rational det() const {
    if (!square()) throw DomainError("determinant of a non-square matrix");
    Matrix m = *this;
    Rational d = 1;
    for (int c = 0; c < rows_; ++c) {
      int piv = c;
      while (piv < rows_ && m(piv, c) == 0) ++piv;
      if (piv == rows_) return 0;
      if (piv != c) {
        m.swap_rows(piv, c);
        d = -d;
      }
      d *= m(c, c);
      for (int i = c + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        const Rational f = m(i, c) / m(c, c);
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  Matrix inverse() const {
    if (!square()) throw DomainError("inverse of a non-square matrix");
    const int n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (piv < n && m(piv, c) == 0) ++piv;
      if (piv == n) throw DomainError("matrix is singular");
      m.swap_rows(piv, c);
      inv.swap_rows(piv, c);
      const Rational s = 1 / m(c, c);
      for (int j = 0; j < n; ++j) {
        m(c, j) *= s;
        inv(c, j) *= s;
      }
      for (int i = 0; i < n; ++i) {
        if (i == c || m(i, c) == 0) continue;
        const Rational f = m(i, c);
        for (int j = 0; j < n; ++j) {
          m(i, j) -= f * m(c, j);
          inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  /// Coefficients of det(t I - M), constant term first, monic.
  std::vector<Rational> char_poly() const {
    if (!square()) throw DomainError("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier: M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    const int n = rows_;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    Matrix mk(n, n);
    for (int k = 1; k <= n; ++k) {
      Matrix t = mk;
      for (int i = 0; i < n; ++i) t(i, i) += c[static_cast<std::size_t>(n - k + 1)];
      mk = *this * t;
      Rational tr = 0;
      for (int i = 0; i < n; ++i) tr += mk(i, i);
      c[static_cast<std::size_t>(n - k)] = -tr / k;
    }
    return c;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
      s += "]";
    }
    return s + "]";
  }

 private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// A nonzero rational viewed in Q_p.
class PAdicScalar {
 public:
  PAdicScalar(Rational value, long p) : value_(std::move(value)), p_(p) {
    if (value_ == 0) throw DomainError("p-adic scalar must be nonzero");
    if (!is_prime(p)) throw DomainError("p must be prime");
  }
  const Rational& value() const { return value_; }
  long valuation() const { return padicvol::valuation(value_, static_cast<unsigned long>(p_)); }
  /// Unramified quadratic character: (-1)^v.
  int eta() const { return valuation() % 2 == 0 ? 1 : -1; }
  /// |value|_p = p^{-v}.
  Rational abs() const { return pow(Rational(p_), -valuation()); }

 private:
  Rational value_;
  long p_;
};

struct SymmetricSpacePoint {
  Matrix A, B, C, D;
  long p = 3;

  int n() const { return A.rows(); }
  Matrix full() const {
    const int k = n();
    Matrix m(2 * k, 2 * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        m(i, j) = A(i, j);
        m(i, k + j) = B(i, j);
        m(k + i, j) = C(i, j);
        m(k + i, k + j) = D(i, j);
      }
    return m;
  }

  /// (g, h) . x
  SymmetricSpacePoint acted(const Matrix& g, const Matrix& h) const {
    const Matrix gi = g.inverse(), hi = h.inverse();
    return {g * A * gi, g * B * hi, h * C * gi, h * D * hi, p};
  }

  friend bool operator==(const SymmetricSpacePoint&, const SymmetricSpacePoint&) = default;
};

/// s(gamma) = gamma eps gamma^{-1}, eps = diag(I_n, -I_n).
inline SymmetricSpacePoint project_sym(const Matrix& gamma, long p) {
  if (!gamma.square() || gamma.rows() % 2 != 0 || gamma.rows() == 0)
    throw DomainError("project_sym: gamma must be square of even size");
  if (!is_prime(p)) throw DomainError("project_sym: p must be prime");
  if (gamma.det() == 0) throw DomainError("project_sym: gamma is singular");
  const int n = gamma.rows() / 2;
  const Matrix eps = Matrix::block_diag(Matrix::identity(n), Matrix::identity(n).scaled(-1));
  const Matrix x = gamma * eps * gamma.inverse();
  return {x.block(0, 0, n, n), x.block(0, n, n, n), x.block(n, 0, n, n), x.block(n, n, n, n), p};
}

/// Coefficients of det(t I - A) below the leading 1, highest degree first.
inline std::vector<Rational> car_lin(const SymmetricSpacePoint& x) {
  const std::vector<Rational> c = x.A.char_poly();
  return std::vector<Rational>(c.rbegin() + 1, c.rend());
}

/// Rows w, wD, ..., wD^{n-1}.
inline Matrix krylov(const SymmetricSpacePoint& x, const std::vector<Rational>& w) {
  const int n = x.n();
  if (static_cast<int>(w.size()) != n) throw DomainError("w must have length n");
  Matrix row(1, n);
  for (int j = 0; j < n; ++j) row(0, j) = w[static_cast<std::size_t>(j)];
  Matrix k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) k(i, j) = row(0, j);
    row = row * x.D;
  }
  return k;
}

/// Krylov span of w under D is everything, det(B) det(C) != 0 and the
/// characteristic polynomial of A is squarefree.
inline bool is_strongly_regular(const SymmetricSpacePoint& x, const std::vector<Rational>& w) {
  if (krylov(x, w).rank() != x.n()) return false;
  if (x.B.det() == 0 || x.C.det() == 0) return false;
  const detail::Coeffs f = x.A.char_poly();
  return detail::degree(detail::gcd(f, detail::derivative(f))) == 0;
}

enum class CharacterKind { Trivial, UnramifiedQuadratic };

inline CharacterKind parse_character(const std::string& s) {
  if (s == "1") return CharacterKind::Trivial;
  if (s == "q") return CharacterKind::UnramifiedQuadratic;
  throw DomainError("character must be '1' (trivial) or 'q' (unramified quadratic), got '" + s + "'");
}

/// (eta_0, eta_1, eta_2)
struct TransferSigns {
  CharacterKind eta0 = CharacterKind::Trivial;
  CharacterKind eta1 = CharacterKind::Trivial;
  CharacterKind eta2 = CharacterKind::Trivial;
};

inline int apply_character(CharacterKind k, const Rational& value, long p) {
  if (value == 0) throw DegenerateInputError("character evaluated at zero");
  if (k == CharacterKind::Trivial) return 1;
  return PAdicScalar(value, p).eta();
}

/// Omega(gamma, w) = eta2^n(BC) (eta1 eta2)(C) eta0(det(w|wD|...|wD^{n-1})) eta2(det gamma).
inline int transfer_factor(const Matrix& gamma, const std::vector<Rational>& w, const TransferSigns& s, long p) {
  const SymmetricSpacePoint x = project_sym(gamma, p);
  const int n = x.n();
  const Rational det_bc = (x.B * x.C).det();
  const Rational det_c = x.C.det();
  const Rational det_k = krylov(x, w).det();
  const Rational det_g = gamma.det();
  if (det_bc == 0 || det_c == 0 || det_k == 0)
    throw DegenerateInputError("transfer factor: (gamma, w) is not strongly regular");
  int omega = 1;
  if (n % 2 == 1) omega *= apply_character(s.eta2, det_bc, p);
  omega *= apply_character(s.eta1, det_c, p) * apply_character(s.eta2, det_c, p);
  omega *= apply_character(s.eta0, det_k, p);
  omega *= apply_character(s.eta2, det_g, p);
  return omega;
}

/// (h^{(1)}, h^{(2)}) in GL_n x GL_n.
struct BlockPair {
  Matrix first, second;
  Matrix full() const { return Matrix::block_diag(first, second); }
};

/// chi(h) = chi(det h^{(1)} / det h^{(2)}).
inline int character_of_pair(CharacterKind k, const BlockPair& h, long p) {
  const Rational d2 = h.second.det();
  if (d2 == 0 || h.first.det() == 0) throw DegenerateInputError("block pair is not invertible");
  return apply_character(k, h.first.det() / d2, p);
}

/// Omega(h1^{-1} gamma h2, w h1^{(2)}) eta0(det h1^{(2)}) eta1(h1) eta2(h2) == Omega(gamma, w).
inline bool check_equivariance(const Matrix& gamma, const std::vector<Rational>& w, const BlockPair& h1,
                               const BlockPair& h2, const TransferSigns& s, long p) {
  const Matrix moved = h1.full().inverse() * gamma * h2.full();
  const int n = gamma.rows() / 2;
  Matrix row(1, n);
  for (int j = 0; j < n; ++j) row(0, j) = w.at(static_cast<std::size_t>(j));
  row = row * h1.second;
  std::vector<Rational> w2(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w2[static_cast<std::size_t>(j)] = row(0, j);
  const int lhs = transfer_factor(moved, w2, s, p) * apply_character(s.eta0, h1.second.det(), p) *
                  character_of_pair(s.eta1, h1, p) * character_of_pair(s.eta2, h2, p);
  return lhs == transfer_factor(gamma, w, s, p);
}

}  // namespace padicvol
