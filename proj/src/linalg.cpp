#include "ringlab/linalg.hpp"

#include <cassert>
#include <cstdlib>

#include "ringlab/errors.hpp"

namespace ringlab {

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

int64_t exgcd64(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return std::abs(a);
  }
  int64_t x1, y1;
  int64_t g = exgcd64(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

int64_t mod_floor(int64_t a, int64_t m) {
  assert(m > 0);
  int64_t r = a % m;
  return (r < 0) ? r + m : r;
}

Mat hnf_with_moduli(const Mat& rows, const Vec& moduli) {
  const size_t r = moduli.size();
  Mat work;
  work.reserve(rows.size() + r);
  for (const Vec& v : rows) {
    require(v.size() == r, errc::bad_shape, "row length does not match rank");
    work.push_back(v);
  }
  for (size_t i = 0; i < r; ++i) {
    Vec row(r, 0);
    row[i] = moduli[i];
    work.push_back(row);
  }

  // Column-by-column gcd elimination. The moduli rows guarantee a nonzero
  // pivot in every column, so the result is square upper triangular.
  Mat out;
  size_t top = 0; // rows below `top` in `work` are still unprocessed
  for (size_t col = 0; col < r; ++col) {
    // Reduce all rows so only one has a nonzero entry in `col`.
    while (true) {
      size_t pivot = work.size();
      for (size_t i = top; i < work.size(); ++i) {
        if (work[i][col] != 0 &&
            (pivot == work.size() ||
             std::abs(work[i][col]) < std::abs(work[pivot][col])))
          pivot = i;
      }
      assert(pivot < work.size());
      std::swap(work[top], work[pivot]);
      bool clean = true;
      for (size_t i = top + 1; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        int64_t q = work[i][col] / work[top][col];
        if (q != 0)
          for (size_t j = col; j < r; ++j) work[i][j] -= q * work[top][j];
        if (work[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (work[top][col] < 0)
      for (size_t j = col; j < r; ++j) work[top][j] = -work[top][j];
    out.push_back(work[top]);
    ++top;
  }

  // Reduce entries above each pivot into [0, pivot).
  for (size_t col = 1; col < r; ++col) {
    int64_t p = out[col][col];
    for (size_t i = 0; i < col; ++i) {
      int64_t q = out[i][col] - mod_floor(out[i][col], p);
      q /= p;
      if (q != 0)
        for (size_t j = col; j < r; ++j) out[i][j] -= q * out[col][j];
    }
  }
  return out;
}

bool hnf_lattice_contains(const Mat& hnf, const Vec& v) {
  const size_t r = hnf.size();
  Vec x = v;
  for (size_t i = 0; i < r; ++i) {
    if (x[i] % hnf[i][i] != 0) return false;
    int64_t q = x[i] / hnf[i][i];
    if (q != 0)
      for (size_t j = i; j < r; ++j) x[j] -= q * hnf[i][j];
  }
  for (size_t i = 0; i < r; ++i)
    if (x[i] != 0) return false;
  return true;
}

namespace {

void swap_rows_tracked(Mat& a, Mat& u, Mat& u_inv, size_t i, size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  std::swap(u[i], u[j]);
  // inverse gets the corresponding column swap
  for (size_t k = 0; k < u_inv.size(); ++k) std::swap(u_inv[k][i], u_inv[k][j]);
}

// a.row(i) -= q * a.row(j), keeping u, u_inv in sync
void add_row_tracked(Mat& a, Mat& u, Mat& u_inv, size_t i, size_t j, int64_t q) {
  if (q == 0) return;
  const size_t n = a[i].size();
  for (size_t k = 0; k < n; ++k) a[i][k] -= q * a[j][k];
  for (size_t k = 0; k < u[i].size(); ++k) u[i][k] -= q * u[j][k];
  for (size_t k = 0; k < u_inv.size(); ++k) u_inv[k][j] += q * u_inv[k][i];
}

void negate_row_tracked(Mat& a, Mat& u, Mat& u_inv, size_t i) {
  for (auto& x : a[i]) x = -x;
  for (auto& x : u[i]) x = -x;
  for (size_t k = 0; k < u_inv.size(); ++k) u_inv[k][i] = -u_inv[k][i];
}

} // namespace

SmithU smith_left_transform(Mat a) {
  const size_t n = a.size();
  Mat u(n, Vec(n, 0)), u_inv(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = u_inv[i][i] = 1;

  for (size_t s = 0; s < n; ++s) {
    // Clear row and column s below/right of the diagonal.
    while (true) {
      size_t pi = n, pj = n;
      int64_t best = 0;
      for (size_t i = s; i < n; ++i)
        for (size_t j = s; j < n; ++j)
          if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
            best = std::abs(a[i][j]);
            pi = i;
            pj = j;
          }
      require(pi < n, errc::internal_check_failed, "singular lattice matrix in SNF");
      swap_rows_tracked(a, u, u_inv, s, pi);
      if (pj != s) // plain column swap, V is not tracked
        for (size_t i = 0; i < n; ++i) std::swap(a[i][s], a[i][pj]);

      bool clean = true;
      for (size_t i = s + 1; i < n; ++i) {
        int64_t q = a[i][s] / a[s][s];
        add_row_tracked(a, u, u_inv, i, s, q);
        if (a[i][s] != 0) clean = false;
      }
      for (size_t j = s + 1; j < n; ++j) {
        int64_t q = a[s][j] / a[s][s];
        if (q != 0)
          for (size_t i = 0; i < n; ++i) a[i][j] -= q * a[i][s];
        if (a[s][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility pass: a[s][s] must divide everything below-right.
      bool divides = true;
      for (size_t i = s + 1; i < n && divides; ++i)
        for (size_t j = s + 1; j < n && divides; ++j)
          if (a[i][j] % a[s][s] != 0) {
            add_row_tracked(a, u, u_inv, s, i, -1); // row s += row i
            divides = false;
          }
      if (divides) break;
    }
    if (a[s][s] < 0) negate_row_tracked(a, u, u_inv, s);
  }

  SmithU out;
  out.diag.resize(n);
  for (size_t i = 0; i < n; ++i) out.diag[i] = a[i][i];
  out.u = std::move(u);
  out.u_inv = std::move(u_inv);
  return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    int64_t acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

} // namespace ringlab
