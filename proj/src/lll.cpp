#include "cubify/lll.hpp"

#include <stdexcept>

#include "cubify/tracked_basis.hpp"

namespace cubify {

GramSchmidtState gram_schmidt(const Basis& b) {
  const std::size_t n = b.dim();
  GramSchmidtState gs;
  gs.orthogonal.resize(n);
  gs.mu.resize(n);
  gs.squared_norms.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector v(b[k].begin(), b[k].end());
    gs.mu[k].resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational num = 0;
      for (std::size_t c = 0; c < n; ++c) num += b[k][c] * gs.orthogonal[i][c];
      gs.mu[k][i] = num / gs.squared_norms[i];
      for (std::size_t c = 0; c < n; ++c) v[c] -= gs.mu[k][i] * gs.orthogonal[i][c];
    }
    Rational sq = 0;
    for (const auto& x : v) sq += x * x;
    if (sq == 0) throw SingularBasisError("gram_schmidt: rows are linearly dependent");
    gs.orthogonal[k] = std::move(v);
    gs.squared_norms[k] = sq;
  }
  return gs;
}

namespace {

// Cohen, "A Course in Computational Algebraic Number Theory", Alg. 2.6.7,
// indices shifted so vector k (0-based) pairs with d[k + 1].
class IntegralLll {
 public:
  IntegralLll(const Basis& b, const Rational& alpha)
      : list_(b), n_(b.dim()), d_(n_ + 1), lambda_(n_, IntVector(n_)), p_(alpha.get_num()), q_(alpha.get_den()) {}

  std::size_t run() {
    if (n_ == 0) return 0;
    d_[0] = 1;
    d_[1] = list_.norm(0);
    std::size_t k = 1, kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        extend(k);
      }
      reduce(k, k - 1);
      // Lovasz fails: q d_k d_{k-2} < p d_{k-1}^2 - q lambda^2
      const Integer& lam = lambda_[k][k - 1];
      if (q_ * d_[k + 1] * d_[k - 1] < p_ * d_[k] * d_[k] - q_ * lam * lam) {
        swap(k, kmax);
        k = k > 1 ? k - 1 : 1;
      } else {
        for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
        ++k;
      }
    }
    return swaps_;
  }

  const TrackedBasis& list() const { return list_; }

 private:
  void extend(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer u = list_.gram(k, j);
      for (std::size_t i = 0; i < j; ++i) {
        Integer t = d_[i + 1] * u - lambda_[k][i] * lambda_[j][i];
        mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), d_[i].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = std::move(u);
      } else {
        if (u == 0) throw SingularBasisError("lll_reduce: rows are linearly dependent");
        d_[k + 1] = std::move(u);
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    Integer& lam = lambda_[k][l];
    if (cmp(2 * abs(lam), d_[l + 1]) <= 0) return;
    const Integer r = nearest_int(lam, d_[l + 1]);
    list_.add_multiple(k, -r, l);
    lam -= r * d_[l + 1];
    for (std::size_t i = 0; i < l; ++i) lambda_[k][i] -= r * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    list_.swap_positions(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Integer lam = lambda_[k][k - 1];
    Integer b = d_[k - 1] * d_[k + 1] + lam * lam;
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lambda_[i][k];
      Integer x = d_[k + 1] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(lambda_[i][k].get_mpz_t(), x.get_mpz_t(), d_[k].get_mpz_t());
      Integer y = b * t + lam * lambda_[i][k];
      mpz_divexact(lambda_[i][k - 1].get_mpz_t(), y.get_mpz_t(), d_[k + 1].get_mpz_t());
    }
    d_[k] = std::move(b);
    ++swaps_;
  }

  TrackedBasis list_;
  std::size_t n_;
  std::vector<Integer> d_;
  IntMatrix lambda_;
  Integer p_, q_;
  std::size_t swaps_ = 0;
};

}  // namespace

LllResult lll_reduce_tracked(const Basis& b, const Rational& alpha) {
  if (!(alpha > Rational(1, 4) && alpha <= 1)) {
    throw std::invalid_argument("lll_reduce: alpha must satisfy 1/4 < alpha <= 1, got " + alpha.get_str());
  }
  Rational a = alpha;
  a.canonicalize();
  IntegralLll lll(b, a);
  LllResult result;
  result.swaps = lll.run();
  result.basis = lll.list().basis();
  result.transform = lll.list().transform();
  return result;
}

}  // namespace cubify
