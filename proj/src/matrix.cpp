#include <algorithm>
#include <cctype>

#include "normbasis/exact.hpp"

namespace normbasis {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t.front() == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  const std::string num = strip_plus(s.substr(0, slash));
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  return make_rational(Integer(num), Integer(strip_plus(den)));
}

Integer common_denominator(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector row_times(std::span<const Rational> v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::BadParameter, "vector/matrix shape mismatch");
  RatVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Integer det_integer(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det_exact(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer l = common_denominator(m.row(i));
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = m(i, j) * l;
      a(i, j) = t.get_num();
    }
  }
  return make_rational(det_integer(a), scale);
}

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& t = res.transform;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();

  // Replace (row r, row i) by (s*r + u*i, -v*r + w*i) with determinant one.
  auto combine = [&](IntMatrix& a, std::size_t r, std::size_t i, const Integer& s, const Integer& u,
                     const Integer& v, const Integer& w) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Integer x = a(r, j), y = a(i, j);
      a(r, j) = s * x + u * y;
      a(i, j) = w * y - v * x;
    }
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h(i, col) == 0) continue;
      Integer g, s, u;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), h(r, col).get_mpz_t(), h(i, col).get_mpz_t());
      Integer a = h(r, col) / g;
      Integer b = h(i, col) / g;
      combine(h, r, i, s, u, b, a);
      combine(t, r, i, s, u, b, a);
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      for (std::size_t j = 0; j < cols; ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < rows; ++j) t(r, j) = -t(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) h(i, j) -= q * h(r, j);
      for (std::size_t j = 0; j < rows; ++j) t(i, j) -= q * t(r, j);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

namespace {

// Gauss-Jordan on the augmented matrix; returns false when singular.
bool gauss_jordan(RatMatrix& a, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return false;
    a.swap_rows(c, p);
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(c, j);
    }
  }
  return true;
}

}  // namespace

RatVector solve_linear(const RatMatrix& m, std::span<const Rational> b) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "solve_linear needs a square matrix");
  const std::size_t n = m.rows();
  if (b.size() != n) throw Error(ErrorCode::BadParameter, "right-hand side length mismatch");
  RatMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = b[i];
  }
  if (!gauss_jordan(a, n)) throw Error(ErrorCode::Singular, "matrix is singular");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a(i, n);
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  if (!gauss_jordan(a, n)) throw Error(ErrorCode::Singular, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

std::size_t rank(const RatMatrix& m) {
  RationalEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

RatVector RationalEchelon::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::BadParameter, "echelon vector length mismatch");
  RatVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[k][j] != 0) w[j] -= f * rows_[k][j];
  }
  return w;
}

bool RationalEchelon::is_independent(std::span<const Rational> v) const {
  const RatVector w = reduce(v);
  return std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
}

bool RationalEchelon::insert(std::span<const Rational> v) {
  RatVector w = reduce(v);
  const auto it = std::find_if(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
  if (it == w.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - w.begin());
  const Rational inv = 1 / w[p];
  for (auto& q : w) q *= inv;
  // keep stored rows fully reduced at the new pivot
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace normbasis
