#include "afflat/linalg.hpp"

#include <utility>

#include "afflat/errors.hpp"

namespace afflat {

IntMat identity_int(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat to_rat_mat(const IntMat& m) {
  RatMat out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rat_vec(row));
  return out;
}

template <typename T>
static std::vector<std::vector<T>> transpose_impl(
    const std::vector<std::vector<T>>& m) {
  if (m.empty()) return {};
  std::vector<std::vector<T>> t(m[0].size(), std::vector<T>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMat transpose(const IntMat& m) { return transpose_impl(m); }
RatMat transpose(const RatMat& m) { return transpose_impl(m); }

template <typename T>
static std::vector<std::vector<T>> mul_impl(const std::vector<std::vector<T>>& a,
                                            const std::vector<std::vector<T>>& b) {
  if (a.empty()) return {};
  size_t inner = b.size();
  size_t cols = inner ? b[0].size() : 0;
  std::vector<std::vector<T>> c(a.size(), std::vector<T>(cols, T(0)));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvalidInput("matrix shape mismatch");
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) { return mul_impl(a, b); }
RatMat mat_mul(const RatMat& a, const RatMat& b) { return mul_impl(a, b); }

template <typename T>
static std::vector<T> mat_vec_impl(const std::vector<std::vector<T>>& a,
                                   const std::vector<T>& x) {
  std::vector<T> y(a.size(), T(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw InvalidInput("matrix shape mismatch");
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) { return mat_vec_impl(a, x); }
IntVec mat_vec(const IntMat& a, const IntVec& x) { return mat_vec_impl(a, x); }

Int det(const IntMat& input) {
  size_t n = input.size();
  if (n == 0) return 1;
  IntMat m = input;
  Int prev = 1;
  int s = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      s = -s;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return s * m[n - 1][n - 1];
}

// Reduced row echelon form in place, pivoting only within the first `cols`
// columns; returns the pivot columns.
static std::vector<size_t> rref(RatMat& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    size_t width = m[r].size();
    for (size_t j = c; j < width; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < width; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rat det(const RatMat& input) {
  size_t n = input.size();
  RatMat m = input;
  Rat d = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[k], m[p]);
      d = -d;
    }
    d *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

size_t rank(const RatMat& m) {
  if (m.empty()) return 0;
  RatMat copy = m;
  return rref(copy, m[0].size()).size();
}

std::optional<RatMat> inverse(const RatMat& m) {
  size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<RatVec> rational_kernel(const RatMat& m, size_t cols) {
  RatMat r = m;
  auto pivots = rref(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(cols, 0);
    x[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> rational_solve(const RatMat& m, const RatVec& b) {
  if (m.size() != b.size()) throw InvalidInput("right-hand side size mismatch");
  size_t cols = m.empty() ? 0 : m[0].size();
  RatMat aug = m;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

namespace {

struct HermiteWork {
  IntMat& h;
  IntMat& v;
  IntMat& v_inv;

  // [col_p col_j] <- [col_p col_j] * [[s, -b/g], [t, a/g]]
  void combine(size_t p, size_t j, size_t row) {
    const Int a = h[row][p];
    const Int b = h[row][j];
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    auto mix = [&](IntMat& m) {
      for (auto& r : m) {
        Int cp = r[p], cj = r[j];
        r[p] = s * cp + t * cj;
        r[j] = -bg * cp + ag * cj;
      }
    };
    mix(h);
    mix(v);
    IntVec rp = v_inv[p], rj = v_inv[j];
    for (size_t k = 0; k < rp.size(); ++k) {
      v_inv[p][k] = ag * rp[k] + bg * rj[k];
      v_inv[j][k] = -t * rp[k] + s * rj[k];
    }
  }

  // col_j <- col_j - q col_p
  void subtract(size_t j, size_t p, const Int& q) {
    if (q == 0) return;
    for (auto& r : h) r[j] -= q * r[p];
    for (auto& r : v) r[j] -= q * r[p];
    for (size_t k = 0; k < v_inv[p].size(); ++k) v_inv[p][k] += q * v_inv[j][k];
  }

  void negate(size_t p) {
    for (auto& r : h) r[p] = -r[p];
    for (auto& r : v) r[p] = -r[p];
    for (auto& x : v_inv[p]) x = -x;
  }
};

}  // namespace

ColumnHermite column_hermite(const IntMat& a, size_t cols) {
  ColumnHermite out;
  out.h = a;
  for (const auto& row : a)
    if (row.size() != cols) throw InvalidInput("matrix shape mismatch");
  out.v = identity_int(cols);
  out.v_inv = identity_int(cols);
  HermiteWork w{out.h, out.v, out.v_inv};
  size_t p = 0;
  for (size_t i = 0; i < a.size() && p < cols; ++i) {
    for (size_t j = p + 1; j < cols; ++j)
      if (out.h[i][j] != 0) w.combine(p, j, i);
    if (out.h[i][p] == 0) continue;
    if (out.h[i][p] < 0) w.negate(p);
    for (size_t j = 0; j < p; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), out.h[i][j].get_mpz_t(),
                 out.h[i][p].get_mpz_t());
      w.subtract(j, p, q);
    }
    out.pivot_row.push_back(i);
    ++p;
  }
  out.rank = p;
  return out;
}

std::vector<IntVec> integer_kernel(const IntMat& a, size_t cols) {
  auto ch = column_hermite(a, cols);
  std::vector<IntVec> basis;
  for (size_t j = ch.rank; j < cols; ++j) {
    IntVec x(cols);
    for (size_t i = 0; i < cols; ++i) x[i] = ch.v[i][j];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b,
                                    size_t cols) {
  if (a.size() != b.size()) throw InvalidInput("right-hand side size mismatch");
  auto ch = column_hermite(a, cols);
  IntVec y(cols, 0);
  size_t p = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Int acc = b[i];
    for (size_t j = 0; j < p; ++j) acc -= ch.h[i][j] * y[j];
    if (p < ch.rank && ch.pivot_row[p] == i) {
      if (!mpz_divisible_p(acc.get_mpz_t(), ch.h[i][p].get_mpz_t()))
        return std::nullopt;
      y[p] = acc / ch.h[i][p];
      ++p;
    } else if (acc != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(ch.v, y);
}

std::vector<IntVec> saturated_basis(const std::vector<IntVec>& gens, size_t m) {
  RatMat rows;
  for (const auto& g : gens) rows.push_back(to_rat_vec(g));
  auto normals = rational_kernel(rows, m);
  IntMat normal_rows;
  for (const auto& nv : normals) normal_rows.push_back(primitive_direction(nv));
  if (normal_rows.empty()) return identity_int(m);
  return integer_kernel(normal_rows, m);
}

std::optional<IntVec> lattice_coords(const std::vector<IntVec>& basis,
                                     const IntVec& x) {
  if (basis.empty()) {
    if (is_zero(x)) return IntVec{};
    return std::nullopt;
  }
  return solve_integer(transpose(basis), x, basis.size());
}

Int maximal_minor_gcd(const std::vector<IntVec>& vs) {
  if (vs.empty()) return 1;
  size_t m = vs[0].size();
  if (vs.size() > m) throw InvalidInput("more vectors than the dimension");
  auto ch = column_hermite(vs, m);
  if (ch.rank < vs.size()) throw InvalidInput("linearly dependent vectors");
  Int g = 1;
  for (size_t i = 0; i < vs.size(); ++i) g *= ch.h[i][i];
  return abs(g);
}

bool extends_to_basis(const std::vector<IntVec>& vs) {
  return maximal_minor_gcd(vs) == 1;
}

std::vector<IntVec> complete_to_lattice_basis(const std::vector<IntVec>& vs) {
  if (vs.empty()) throw InvalidInput("empty vector list");
  size_t m = vs[0].size();
  auto ch = column_hermite(vs, m);
  if (ch.rank < vs.size()) throw InvalidInput("linearly dependent vectors");
  Int g = 1;
  for (size_t i = 0; i < vs.size(); ++i) g *= ch.h[i][i];
  if (abs(g) != 1) throw InvalidInput("vectors do not extend to a lattice basis");
  std::vector<IntVec> out = vs;
  for (size_t i = vs.size(); i < m; ++i) out.push_back(ch.v_inv[i]);
  return out;
}

}  // namespace afflat
