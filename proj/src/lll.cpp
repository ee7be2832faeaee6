// All-integer LLL: the Gram-Schmidt data is kept as the integers
//   d_i = det(Gram(b_1..b_i)),  lambda_{k,j} = d_j * mu_{k,j},
// so reduction decisions are exact. Indices below are 1-based.

#include "normbasis/exact.hpp"

namespace normbasis {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer round_div(const Integer& num, const Integer& den) {
  // nearest integer to num/den, den > 0
  Integer t = 2 * num + den, q;
  Integer d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
  return q;
}

struct IntegralLll {
  std::size_t n;
  std::vector<IntVector> b;  // b[1..n]
  std::vector<IntVector> h;  // transform rows
  std::vector<Integer> d;    // d[0..n]
  std::vector<IntVector> lam;
  Rational delta;

  void red(std::size_t k, std::size_t l) {
    Integer two_abs = 2 * abs(lam[k][l]);
    if (two_abs <= d[l]) return;
    const Integer q = round_div(lam[k][l], d[l]);
    for (std::size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
    for (std::size_t j = 0; j < h[k].size(); ++j) h[k][j] -= q * h[l][j];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  }

  void swap(std::size_t k, std::size_t k_max) {
    std::swap(b[k], b[k - 1]);
    std::swap(h[k], h[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    Integer big_b = (d[k - 2] * d[k] + l * l);
    mpz_divexact(big_b.get_mpz_t(), big_b.get_mpz_t(), d[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= k_max; ++i) {
      const Integer t = lam[i][k];
      Integer a = d[k] * lam[i][k - 1] - l * t;
      mpz_divexact(lam[i][k].get_mpz_t(), a.get_mpz_t(), d[k - 1].get_mpz_t());
      Integer c = big_b * t + l * lam[i][k];
      mpz_divexact(lam[i][k - 1].get_mpz_t(), c.get_mpz_t(), d[k].get_mpz_t());
    }
    d[k - 1] = big_b;
  }

  // swap when d_k d_{k-2} < delta d_{k-1}^2 - lambda_{k,k-1}^2
  bool lovasz_fails(std::size_t k) const {
    const Integer& p = delta.get_num();
    const Integer& q = delta.get_den();
    return q * d[k] * d[k - 2] < p * d[k - 1] * d[k - 1] - q * lam[k][k - 1] * lam[k][k - 1];
  }

  void run() {
    d[0] = 1;
    d[1] = dot(b[1], b[1]);
    if (d[1] == 0) throw Error(ErrorCode::Singular, "LLL input has a zero vector");
    std::size_t k = 2, k_max = 1;
    while (k <= n) {
      if (k > k_max) {
        k_max = k;
        for (std::size_t j = 1; j <= k; ++j) {
          Integer u = dot(b[k], b[j]);
          for (std::size_t i = 1; i < j; ++i) {
            Integer t = d[i] * u - lam[k][i] * lam[j][i];
            mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), d[i - 1].get_mpz_t());
          }
          if (j < k) {
            lam[k][j] = u;
          } else {
            if (u == 0) throw Error(ErrorCode::Singular, "LLL input rows are dependent");
            d[k] = u;
          }
        }
      }
      red(k, k - 1);
      if (lovasz_fails(k)) {
        swap(k, k_max);
        if (k > 2) --k;
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
};

}  // namespace

LllResult lll_reduce_integer(const IntMatrix& basis, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) throw Error(ErrorCode::BadParameter, "LLL delta must lie in (1/4, 1)");
  const std::size_t n = basis.rows();
  LllResult out{basis, IntMatrix::identity(n)};
  if (n == 0) return out;
  IntegralLll st{n, {}, {}, std::vector<Integer>(n + 1), std::vector<IntVector>(n + 1, IntVector(n + 1)), delta};
  st.b.resize(n + 1);
  st.h.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    st.b[i + 1].assign(basis.row(i).begin(), basis.row(i).end());
    st.h[i + 1] = IntVector(n);
    st.h[i + 1][i] = 1;
  }
  if (n >= 2) {
    st.run();
  } else if (dot(st.b[1], st.b[1]) == 0) {
    throw Error(ErrorCode::Singular, "LLL input has a zero vector");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) out.basis(i, j) = st.b[i + 1][j];
    for (std::size_t j = 0; j < n; ++j) out.transform(i, j) = st.h[i + 1][j];
  }
  return out;
}

}  // namespace normbasis
