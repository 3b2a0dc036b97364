#include "twistlab/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <tuple>
#include <utility>

#include "twistlab/errors.hpp"

namespace twistlab {

__extension__ typedef __int128 i128;

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in exact linear algebra");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in exact linear algebra");
  return r;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// s*a + t*b = g, g >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, cur_s) = std::pair{cur_s, old_s - q * cur_s};
    std::tie(old_t, cur_t) = std::pair{cur_t, old_t - q * cur_t};
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

// Two-sided unimodular reduction of a matrix, over Z (modulus 0) or Z/m.
class Reducer {
 public:
  Reducer(IntMatrix m, std::int64_t modulus, bool track_u, bool track_u_inv, bool track_v, bool track_v_inv)
      : M(std::move(m)), mod_(modulus) {
    if (track_u) U = IntMatrix::identity(M.rows());
    if (track_u_inv) U_inv = IntMatrix::identity(M.rows());
    if (track_v) V = IntMatrix::identity(M.cols());
    if (track_v_inv) V_inv = IntMatrix::identity(M.cols());
    track_u_ = track_u;
    track_u_inv_ = track_u_inv;
    track_v_ = track_v;
    track_v_inv_ = track_v_inv;
    if (mod_ > 0)
      for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) M(r, c) = floor_mod(M(r, c), mod_);
  }

  void diagonalize() {
    const std::size_t n = std::min(M.rows(), M.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_pivot(t)) break;
      reduce_at(t);
    }
  }

  // Enforce d_i | d_{i+1} (integer mode only).
  void fix_divisibility() {
    const std::size_t n = std::min(M.rows(), M.cols());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n && !changed; ++i) {
        if (M(i, i) == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (M(j, j) == 0) continue;
          if (M(j, j) % M(i, i) != 0) {
            col_combine(i, j, 1, 1, 0, 1);
            reduce_at(i);
            changed = true;
            break;
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (M(i, i) < 0) negate_row(i);
  }

  std::int64_t& rhs_at(std::size_t r) { return rhs[r]; }

  IntMatrix M;
  IntMatrix U, U_inv, V, V_inv;
  std::vector<std::int64_t> rhs;

 private:
  std::int64_t norm(std::int64_t x) const { return mod_ > 0 ? floor_mod(x, mod_) : x; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (mod_ > 0) return static_cast<std::int64_t>((static_cast<i128>(a) * b) % mod_);
    return checked_mul(a, b);
  }
  std::int64_t lin(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) const {
    if (mod_ > 0) {
      const i128 v = static_cast<i128>(a) * x + static_cast<i128>(b) * y;
      return floor_mod(static_cast<std::int64_t>(v % mod_), mod_);
    }
    return checked_add(checked_mul(a, x), checked_mul(b, y));
  }
  std::int64_t magnitude(std::int64_t v) const { return v < 0 ? -v : v; }

  bool move_pivot(std::size_t t) {
    std::size_t br = 0, bc = 0;
    std::int64_t best = 0;
    for (std::size_t r = t; r < M.rows(); ++r)
      for (std::size_t c = t; c < M.cols(); ++c) {
        const std::int64_t v = M(r, c);
        if (v == 0) continue;
        const std::int64_t key = mod_ > 0 ? std::gcd(v, mod_) : magnitude(v);
        if (best == 0 || key < best) {
          best = key;
          br = r;
          bc = c;
          if (best == 1) goto found;
        }
      }
    if (best == 0) return false;
  found:
    if (br != t) swap_rows(br, t);
    if (bc != t) swap_cols(bc, t);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      for (std::size_t r = t + 1; r < M.rows(); ++r)
        if (M(r, t) != 0) eliminate_row(t, r);
      for (std::size_t c = t + 1; c < M.cols(); ++c)
        if (M(t, c) != 0) eliminate_col(t, c);
      bool clean = true;
      for (std::size_t r = t + 1; r < M.rows() && clean; ++r) clean = M(r, t) == 0;
      if (clean) return;
    }
  }

  void eliminate_row(std::size_t t, std::size_t r) {
    const std::int64_t a = M(t, t), b = M(r, t);
    if (a != 0 && b % a == 0) {
      row_combine(t, r, 1, 0, norm(-(b / a)), 1);
      return;
    }
    std::int64_t s, u;
    const std::int64_t g = ext_gcd(a, b, s, u);
    row_combine(t, r, norm(s), norm(u), norm(-(b / g)), norm(a / g));
  }

  void eliminate_col(std::size_t t, std::size_t c) {
    const std::int64_t a = M(t, t), b = M(t, c);
    if (a != 0 && b % a == 0) {
      col_combine(t, c, 1, 0, norm(-(b / a)), 1);
      return;
    }
    std::int64_t s, u;
    const std::int64_t g = ext_gcd(a, b, s, u);
    col_combine(t, c, norm(s), norm(u), norm(-(b / g)), norm(a / g));
  }

  // rows (r1, r2) <- [[a, b], [c, d]] (rows r1, r2), ad - bc = 1
  void row_combine(std::size_t r1, std::size_t r2, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    auto rows_op = [&](IntMatrix& X) {
      for (std::size_t k = 0; k < X.cols(); ++k) {
        const std::int64_t x = X(r1, k), y = X(r2, k);
        if (x == 0 && y == 0) continue;
        X(r1, k) = lin(a, x, b, y);
        X(r2, k) = lin(c, x, d, y);
      }
    };
    rows_op(M);
    if (track_u_) rows_op(U);
    if (!rhs.empty()) {
      const std::int64_t x = rhs[r1], y = rhs[r2];
      rhs[r1] = lin(a, x, b, y);
      rhs[r2] = lin(c, x, d, y);
    }
    if (track_u_inv_) {
      // U_inv <- U_inv * [[d, -b], [-c, a]] on columns r1, r2
      for (std::size_t k = 0; k < U_inv.rows(); ++k) {
        const std::int64_t x = U_inv(k, r1), y = U_inv(k, r2);
        if (x == 0 && y == 0) continue;
        U_inv(k, r1) = lin(d, x, norm(-c), y);
        U_inv(k, r2) = lin(norm(-b), x, a, y);
      }
    }
  }

  // col c1 <- a col c1 + b col c2, col c2 <- c col c1 + d col c2, ad - bc = 1
  void col_combine(std::size_t c1, std::size_t c2, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    auto cols_op = [&](IntMatrix& X) {
      for (std::size_t k = 0; k < X.rows(); ++k) {
        const std::int64_t x = X(k, c1), y = X(k, c2);
        if (x == 0 && y == 0) continue;
        X(k, c1) = lin(a, x, b, y);
        X(k, c2) = lin(c, x, d, y);
      }
    };
    cols_op(M);
    if (track_v_) cols_op(V);
    if (track_v_inv_) {
      for (std::size_t k = 0; k < V_inv.cols(); ++k) {
        const std::int64_t x = V_inv(c1, k), y = V_inv(c2, k);
        if (x == 0 && y == 0) continue;
        V_inv(c1, k) = lin(d, x, norm(-c), y);
        V_inv(c2, k) = lin(norm(-b), x, a, y);
      }
    }
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    auto sw = [&](IntMatrix& X) {
      for (std::size_t k = 0; k < X.cols(); ++k) std::swap(X(r1, k), X(r2, k));
    };
    sw(M);
    if (track_u_) sw(U);
    if (!rhs.empty()) std::swap(rhs[r1], rhs[r2]);
    if (track_u_inv_)
      for (std::size_t k = 0; k < U_inv.rows(); ++k) std::swap(U_inv(k, r1), U_inv(k, r2));
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    auto sw = [&](IntMatrix& X) {
      for (std::size_t k = 0; k < X.rows(); ++k) std::swap(X(k, c1), X(k, c2));
    };
    sw(M);
    if (track_v_) sw(V);
    if (track_v_inv_)
      for (std::size_t k = 0; k < V_inv.cols(); ++k) std::swap(V_inv(c1, k), V_inv(c2, k));
  }

  void negate_row(std::size_t r) {
    for (std::size_t k = 0; k < M.cols(); ++k) M(r, k) = -M(r, k);
    if (track_u_)
      for (std::size_t k = 0; k < U.cols(); ++k) U(r, k) = -U(r, k);
    if (track_u_inv_)
      for (std::size_t k = 0; k < U_inv.rows(); ++k) U_inv(k, r) = -U_inv(k, r);
  }

  std::int64_t mod_;
  bool track_u_ = false, track_u_inv_ = false, track_v_ = false, track_v_inv_ = false;
};

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw InputError("matrix-vector size mismatch");
  std::vector<std::int64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && x[c] != 0) y[r] = checked_add(y[r], checked_mul((*this)(r, c), x[c]));
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product size mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (o(k, c) != 0) out(r, c) = checked_add(out(r, c), checked_mul(a, o(k, c)));
    }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  Reducer red(a, 0, true, true, true, true);
  red.diagonalize();
  red.fix_divisibility();
  SmithForm out;
  const std::size_t n = std::min(a.rows(), a.cols());
  out.diagonal.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.diagonal[k] = red.M(k, k);
    if (out.diagonal[k] != 0) ++out.rank;
  }
  out.U = std::move(red.U);
  out.U_inv = std::move(red.U_inv);
  out.V = std::move(red.V);
  out.V_inv = std::move(red.V_inv);
  return out;
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, std::span<const std::int64_t> b, std::int64_t n) {
  if (n < 1) throw InputError("modulus must be positive");
  if (b.size() != a.rows()) throw InputError("right-hand side has the wrong length");
  std::vector<std::int64_t> x(a.cols(), 0);
  if (n == 1) return x;
  Reducer red(a, n, false, false, true, false);
  red.rhs.assign(b.begin(), b.end());
  for (auto& v : red.rhs) v = floor_mod(v, n);
  if (red.rhs.empty()) red.rhs.push_back(0);  // keep the vector non-empty so row ops track it
  red.diagonalize();
  const std::size_t k = std::min(a.rows(), a.cols());
  std::vector<std::int64_t> y(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::int64_t rhs = red.rhs[r];
    const std::int64_t d = r < k ? red.M(r, r) : 0;
    if (d == 0) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    const std::int64_t g = std::gcd(d, n);
    if (rhs % g != 0) return std::nullopt;
    const std::int64_t m = n / g;
    std::int64_t inv, unused;
    ext_gcd(floor_mod(d / g, m), m, inv, unused);
    y[r] = m == 1 ? 0 : static_cast<std::int64_t>((static_cast<i128>(rhs / g) * floor_mod(inv, m)) % m);
  }
  for (std::size_t r = 0; r < a.cols(); ++r) {
    i128 acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += static_cast<i128>(red.V(r, c)) * y[c];
    x[r] = floor_mod(static_cast<std::int64_t>(acc % n), n);
  }
  // the reduction is exact; a mismatch here means a bug, not an unsolvable system
  for (std::size_t r = 0; r < a.rows(); ++r) {
    i128 acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += static_cast<i128>(floor_mod(a(r, c), n)) * x[c];
    if (floor_mod(static_cast<std::int64_t>(acc % n), n) != floor_mod(b[r], n))
      throw InternalError("modular solver produced a non-solution");
  }
  return x;
}

std::size_t rank_mod_prime(const IntMatrix& a, std::int64_t p) {
  Reducer red(a, p, false, false, false, false);
  red.diagonalize();
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k)
    if (red.M(k, k) != 0) ++rank;
  return rank;
}

}  // namespace twistlab
