/*
  linalg.cpp — exact linear algebra over Z and Q.
*/

#include "torb/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace torb {

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << m.at(i, j) << (j + 1 < m.cols() ? ", " : "");
    os << "]" << (i + 1 < m.rows() ? "\n" : "");
  }
  return os << "]";
}

std::ostream& operator<<(std::ostream& os, const RatMat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << m.at(i, j) << (j + 1 < m.cols() ? ", " : "");
    os << "]" << (i + 1 < m.rows() ? "\n" : "");
  }
  return os << "]";
}

Int determinant(const IntMat& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        m.at(i, j) = num / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

RatMat rational_inverse(const IntMat& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(a.at(i, j));
    m.at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("singular matrix (det = 0)");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m.at(c, j), m.at(p, j));
    Rat inv = m.at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) m.at(c, j) /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  RatMat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.at(i, j) = m.at(i, n + j);
      r.at(i, j).canonicalize();
    }
  return r;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    out.push_back(d.at(i, i));
  return out;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
  std::vector<Int> out;
  for (const Int& x : diagonal())
    if (x > 1) out.push_back(x);
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const Int& x : diagonal())
    if (x != 0) ++r;
  return r;
}

namespace {

struct SnfWork {
  IntMat a, u, v;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < n; ++c) a.at(dst, c) += k * a.at(src, c);
    for (std::size_t c = 0; c < m; ++c) u.at(dst, c) += k * u.at(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m; ++r) a.at(r, dst) += k * a.at(r, src);
    for (std::size_t r = 0; r < n; ++r) v.at(r, dst) += k * v.at(r, src);
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) a.at(r, j) = -a.at(r, j);
    for (std::size_t r = 0; r < n; ++r) v.at(r, j) = -v.at(r, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& a0) {
  SnfWork w{a0, IntMat::identity(a0.rows()), IntMat::identity(a0.cols()),
            a0.rows(), a0.cols()};
  const std::size_t mn = std::min(w.m, w.n);
  for (std::size_t t = 0; t < mn; ++t) {
    // pivot: minimum |entry| != 0 in the trailing submatrix, lowest (row,col)
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < w.m; ++i)
      for (std::size_t j = t; j < w.n; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < abs(w.a.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      const Int p = w.a.at(t, t);
      // clear below; a nonzero remainder becomes the new, smaller pivot
      bool dirty = false;
      for (std::size_t i = t + 1; i < w.m; ++i) {
        if (w.a.at(i, t) == 0) continue;
        w.add_row(i, t, -ndiv_q(w.a.at(i, t), p));
        if (w.a.at(i, t) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t i = t; i < w.m; ++i)
          if (w.a.at(i, t) != 0 &&
              (w.a.at(best, t) == 0 || abs(w.a.at(i, t)) < abs(w.a.at(best, t))))
            best = i;
        w.swap_rows(t, best);
        continue;
      }
      // column below t is clear, so clearing the row causes no fill-in
      dirty = false;
      for (std::size_t j = t + 1; j < w.n; ++j) {
        if (w.a.at(t, j) == 0) continue;
        w.add_col(j, t, -ndiv_q(w.a.at(t, j), p));
        if (w.a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t j = t; j < w.n; ++j)
          if (w.a.at(t, j) != 0 &&
              (w.a.at(t, best) == 0 || abs(w.a.at(t, j)) < abs(w.a.at(t, best))))
            best = j;
        w.swap_cols(t, best);
        continue;
      }
      // force pivot | submatrix so invariant factors chain up
      bool pulled = false;
      for (std::size_t i = t + 1; i < w.m && !pulled; ++i)
        for (std::size_t j = t + 1; j < w.n && !pulled; ++j)
          if (w.a.at(i, j) % p != 0) {
            w.add_row(t, i, 1);
            pulled = true;
          }
      if (!pulled) break;
    }
    if (w.a.at(t, t) < 0) w.negate_col(t);
  }
  return SmithDecomposition{std::move(w.u), std::move(w.a), std::move(w.v)};
}

namespace {

struct HermWork {
  IntMat a, w;
  std::size_t m, n;

  void combine_cols(std::size_t c1, std::size_t c2, const Int& x, const Int& y,
                    const Int& u, const Int& v) {
    // (col c1, col c2) <- (x c1 + y c2, u c1 + v c2); x v - y u = ±1
    for (std::size_t r = 0; r < m; ++r) {
      Int p = a.at(r, c1), q = a.at(r, c2);
      a.at(r, c1) = x * p + y * q;
      a.at(r, c2) = u * p + v * q;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Int p = w.at(r, c1), q = w.at(r, c2);
      w.at(r, c1) = x * p + y * q;
      w.at(r, c2) = u * p + v * q;
    }
  }
  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m; ++r) a.at(r, dst) += k * a.at(r, src);
    for (std::size_t r = 0; r < n; ++r) w.at(r, dst) += k * w.at(r, src);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(w.at(r, i), w.at(r, j));
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) a.at(r, j) = -a.at(r, j);
    for (std::size_t r = 0; r < n; ++r) w.at(r, j) = -w.at(r, j);
  }
};

}  // namespace

ColHermite hermite_cols(const IntMat& a0) {
  HermWork h{a0, IntMat::identity(a0.cols()), a0.rows(), a0.cols()};
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t pc = 0;
  for (std::size_t row = 0; row < h.m && pc < h.n; ++row) {
    std::size_t c0 = pc;
    while (c0 < h.n && h.a.at(row, c0) == 0) ++c0;
    if (c0 == h.n) continue;
    for (std::size_t c = c0 + 1; c < h.n; ++c) {
      if (h.a.at(row, c) == 0) continue;
      const Int p = h.a.at(row, c0), q = h.a.at(row, c);
      Int x, y;
      Int g = ext_gcd(p, q, x, y);
      h.combine_cols(c0, c, x, y, -(q / g), p / g);
    }
    h.swap_cols(pc, c0);
    if (h.a.at(row, pc) < 0) h.negate_col(pc);
    const Int p = h.a.at(row, pc);
    for (std::size_t c = 0; c < pc; ++c) h.add_col(c, pc, -fdiv_q(h.a.at(row, c), p));
    pivots.emplace_back(row, pc);
    ++pc;
  }
  return ColHermite{std::move(h.a), std::move(h.w), std::move(pivots)};
}

IntMat hnf_rows(const IntMat& a) {
  if (a.rows() == 0 || a.cols() == 0) return IntMat(0, a.cols());
  ColHermite ch = hermite_cols(a.transpose());
  std::vector<std::vector<Int>> rows;
  for (std::size_t j = 0; j < ch.rank(); ++j) rows.push_back(ch.h.col(j));
  IntMat out(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
  return out;
}

IntMat integer_kernel(const IntMat& a) {
  ColHermite ch = hermite_cols(a);
  const std::size_t r = ch.rank();
  std::vector<std::size_t> free_cols;
  for (std::size_t j = r; j < a.cols(); ++j) free_cols.push_back(j);
  return ch.w.select_cols(free_cols);
}

IntMat saturate_columns(const IntMat& b) {
  const std::size_t n = b.rows(), k = b.cols();
  if (rank_rational(b) != k) throw RankError("saturate_columns: dependent columns");
  SmithDecomposition s = smith_normal_form(b);
  // b = u^{-1} d v^{-1}; image over R is spanned by the first k columns of
  // u^{-1}, whose Z-span is saturated because u is unimodular.
  RatMat uinv = rational_inverse(s.u);
  IntMat out(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& x = uinv.at(i, j);
      if (x.get_den() != 1) throw RankError("saturate_columns: internal");
      out.at(i, j) = x.get_num();
    }
  return out;
}

Int lcm_of_denominators(const std::vector<Rat>& row) {
  Int l = 1;
  for (const Rat& x : row) l = lcm(l, Int(x.get_den()));
  return l;
}

namespace {

// g = x*a + y*b, normalized so the weight sits on the first coefficient:
// among the solution family (x + κ b/g, y − κ a/g), κ minimizes |y|.
Int pair_ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g = ext_gcd(a, b, x, y);
  if (g != 0 && a != 0) {
    Int step = a / g;
    Int kq = ndiv_q(y, step);
    y -= kq * step;
    x += kq * (b / g);
  }
  return g;
}

}  // namespace

std::vector<Int> solve_diophantine(const std::vector<Int>& chi, const Int& t) {
  const std::size_t k = chi.size();
  if (k == 0) {
    if (t != 0) throw NoSolutionError("empty chi with nonzero t");
    return {};
  }
  // prefix gcds g_i = gcd(chi_0..chi_i) with Bezout pairs, left to right
  std::vector<Int> g(k);
  std::vector<std::pair<Int, Int>> bez(k);
  g[0] = chi[0];
  for (std::size_t i = 1; i < k; ++i) {
    Int x, y;
    g[i] = pair_ext_gcd(g[i - 1], chi[i], x, y);
    bez[i] = {x, y};
  }
  if (g[k - 1] == 0) {
    if (t != 0) throw NoSolutionError("gcd(chi) = 0 does not divide t");
    return std::vector<Int>(k, Int(0));
  }
  // unwind: coef with coef·chi = g_{k-1} (g_{k-1} > 0 for k >= 2)
  std::vector<Int> coef(k, Int(0));
  Int acc = 1;
  for (std::size_t i = k - 1; i >= 1; --i) {
    coef[i] = acc * bez[i].second;
    acc *= bez[i].first;
  }
  coef[0] = acc;
  Int gfin = g[k - 1];
  if (k == 1) {
    coef[0] = chi[0] > 0 ? 1 : -1;
    gfin = abs(chi[0]);
  }
  if (t % gfin != 0) throw NoSolutionError("gcd(chi) does not divide t");
  Int scale = t / gfin;
  std::vector<Int> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = coef[i] * scale;
  // reduce b_0 modulo |chi_1|/gcd(chi_0, chi_1) along the kernel direction
  // (chi_1/g01, -chi_0/g01, 0, ...), minimizing |b_0|
  if (k >= 2 && chi[1] != 0) {
    Int g01 = gcd(chi[0], chi[1]);
    Int step = chi[1] / g01;
    if (abs(step) > 1) {
      Int kq = ndiv_q(b[0], step);
      b[0] -= kq * step;
      b[1] += kq * (chi[0] / g01);
    }
  }
  return b;
}

std::optional<std::vector<Int>> coords_in_row_lattice(const IntMat& basis_rows,
                                                      const std::vector<Int>& target) {
  const std::size_t r = basis_rows.rows(), n = basis_rows.cols();
  if (target.size() != n) throw DimensionError("coords_in_row_lattice shape");
  // solve x * basis = target over Q by eliminating on basis^T | target
  RatMat m(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) m.at(i, j) = Rat(basis_rows.at(j, i));
    m.at(i, r) = Rat(target[i]);
  }
  std::size_t prow = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < r && prow < n; ++c) {
    std::size_t p = prow;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != prow)
      for (std::size_t j = 0; j <= r; ++j) std::swap(m.at(prow, j), m.at(p, j));
    Rat inv = m.at(prow, c);
    for (std::size_t j = 0; j <= r; ++j) m.at(prow, j) /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == prow || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = 0; j <= r; ++j) m.at(i, j) -= f * m.at(prow, j);
    }
    pivcol.push_back(c);
    ++prow;
  }
  for (std::size_t i = prow; i < n; ++i)
    if (m.at(i, r) != 0) return std::nullopt;
  std::vector<Int> x(r, Int(0));
  for (std::size_t k = 0; k < pivcol.size(); ++k) {
    Rat v = m.at(k, r);
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    x[pivcol[k]] = v.get_num();
  }
  return x;
}

bool same_row_lattice(const IntMat& a, const IntMat& b) {
  IntMat ha = hnf_rows(a), hb = hnf_rows(b);
  return ha == hb;
}

std::size_t rank_rational(const IntMat& a) {
  RatMat m(a);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

bool is_unimodular(const IntMat& a) {
  if (a.rows() != a.cols()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

bool is_primitive(const std::vector<Int>& v) {
  return gcd_all(v) == 1;
}

Int make_primitive(std::vector<Int>& v) {
  Int g = gcd_all(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return g == 0 ? Int(1) : g;
}

}  // namespace torb
