#include "ringlab/wedderburn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"
#include "ringlab/radical.hpp"

namespace ringlab {

Ring matrix_ring(int64_t k, int64_t q) {
  require(k >= 1, errc::bad_shape, "matrix size must be at least 1");
  int64_t p, e;
  require(prime_power(q, p, e), errc::not_prime_power,
          std::to_string(q) + " is not a prime power");
  GF f(q);
  const size_t r = size_t(k) * size_t(k) * size_t(e);
  auto idx = [&](int64_t a, int64_t b, int64_t t) {
    return size_t((a * k + b) * e + t);
  };

  Vec moduli(r, p);
  std::vector<Mat> sc(r, Mat(r, Vec(r, 0)));
  int64_t theta = (e == 1) ? 1 : p; // encoding of x in gf.hpp (1 when e = 1)
  for (int64_t a = 0; a < k; ++a)
    for (int64_t b = 0; b < k; ++b)
      for (int64_t s = 0; s < e; ++s)
        for (int64_t c = 0; c < k; ++c)
          for (int64_t d = 0; d < k; ++d)
            for (int64_t t = 0; t < e; ++t) {
              if (b != c) continue; // E_ab E_cd = 0 unless b = c
              int64_t val = f.mul(f.pow(theta, s), f.pow(theta, t));
              for (int64_t u = 0; u < e; ++u)
                sc[idx(a, b, s)][idx(c, d, t)][idx(a, d, u)] = f.digit(val, u);
            }

  std::ostringstream name;
  name << "M" << k << "(F" << q << ")";
  return FiniteRing::make(std::move(moduli), std::move(sc), name.str());
}

namespace {

using PVec = std::vector<int64_t>;
using PMat = std::vector<PVec>;

int64_t inv_mod_p(int64_t a, int64_t p) {
  int64_t x, y;
  exgcd64(a, p, x, y);
  return mod_floor(x, p);
}

// Basis of { v : m v = 0 } over F_p (v as column of length cols).
std::vector<PVec> nullspace_mod_p(PMat m, int64_t p, size_t cols) {
  size_t rows = m.size();
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rows;
    for (size_t i = rank; i < rows; ++i)
      if (m[i][col] % p != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    int64_t inv = inv_mod_p(mod_floor(m[rank][col], p), p);
    for (size_t j = 0; j < cols; ++j) m[rank][j] = mod_floor(m[rank][j] * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      int64_t c = mod_floor(m[i][col], p);
      if (c != 0)
        for (size_t j = 0; j < cols; ++j)
          m[i][j] = mod_floor(m[i][j] - c * m[rank][j], p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<PVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    PVec v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < rank; ++i)
      v[pivot_col[i]] = mod_floor(-m[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = b over F_p; m square and invertible for our callers.
PVec solve_mod_p(PMat m, PVec b, int64_t p) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t sel = n;
    for (size_t i = col; i < n; ++i)
      if (m[i][col] % p != 0) {
        sel = i;
        break;
      }
    require(sel < n, errc::internal_check_failed, "singular system over F_p");
    std::swap(m[col], m[sel]);
    std::swap(b[col], b[sel]);
    int64_t inv = inv_mod_p(mod_floor(m[col][col], p), p);
    for (size_t j = 0; j < n; ++j) m[col][j] = mod_floor(m[col][j] * inv, p);
    b[col] = mod_floor(b[col] * inv, p);
    for (size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      int64_t c = mod_floor(m[i][col], p);
      if (c != 0) {
        for (size_t j = 0; j < n; ++j) m[i][j] = mod_floor(m[i][j] - c * m[col][j], p);
        b[i] = mod_floor(b[i] - c * b[col], p);
      }
    }
  }
  return b;
}

PMat pmat_mul(const PMat& a, const PMat& b, int64_t p) {
  size_t n = a.size();
  PMat out(n, PVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < n; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        out[i][j] = mod_floor(out[i][j] + a[i][t] * b[t][j], p);
    }
  return out;
}

PVec pmat_apply(const PMat& a, const PVec& v, int64_t p) {
  size_t n = a.size();
  PVec out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    int64_t acc = 0;
    for (size_t j = 0; j < n; ++j) acc += a[i][j] * v[j];
    out[i] = mod_floor(acc, p);
  }
  return out;
}

bool pmat_is_zero(const PMat& a) {
  for (const PVec& row : a)
    for (int64_t x : row)
      if (x != 0) return false;
  return true;
}

size_t pmat_rank(PMat m, int64_t p) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rows;
    for (size_t i = rank; i < rows; ++i)
      if (m[i][col] % p != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    int64_t inv = inv_mod_p(mod_floor(m[rank][col], p), p);
    for (size_t j = 0; j < cols; ++j) m[rank][j] = mod_floor(m[rank][j] * inv, p);
    for (size_t i = rank + 1; i < rows; ++i) {
      int64_t c = mod_floor(m[i][col], p);
      if (c != 0)
        for (size_t j = 0; j < cols; ++j)
          m[i][j] = mod_floor(m[i][j] - c * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

// coordinates of v in the echelon basis rows (pivot entries are 1)
PVec coords_in_echelon(const std::vector<Vec>& basis_rows, const std::vector<size_t>& pivots,
                       Vec v, int64_t p) {
  PVec coords(basis_rows.size(), 0);
  for (size_t i = 0; i < basis_rows.size(); ++i) {
    int64_t c = mod_floor(v[pivots[i]], p);
    coords[i] = c;
    if (c != 0)
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = mod_floor(v[j] - c * basis_rows[i][j], p);
  }
  for (int64_t x : v)
    require(x == 0, errc::internal_check_failed, "vector outside claimed span");
  return coords;
}

} // namespace

std::vector<SimpleQuotient> maximal_two_sided_quotients(const Ring& r) {
  require(r->is_unital(), errc::not_unital, "maximal-quotient analysis needs a unital ring");

  AdditiveSubgroup rad = jacobson_radical(r);
  Quotient semi = quotient(r, rad);
  const Ring& q = semi.ring;

  if (q->order() == 1) return {}; // radical ring: no maximal two-sided ideals here

  // distinct principal two-sided ideals of the semisimple part
  std::map<Mat, AdditiveSubgroup> principal;
  for (uint64_t i = 1; i < q->order(); ++i) {
    AdditiveSubgroup gen = ideal_generated(q, {q->element_at(i)}, Sided::two);
    principal.emplace(gen.key(), gen);
  }
  // minimal ones: containing no other nonzero principal ideal strictly
  std::vector<AdditiveSubgroup> minimal;
  for (const auto& [key, cand] : principal) {
    bool ok = true;
    for (const auto& [key2, other] : principal) {
      if (key2 == key) continue;
      if (other.order() < cand.order() && cand.contains_subgroup(other)) {
        ok = false;
        break;
      }
    }
    if (ok) minimal.push_back(cand);
  }

  // the minimal ideals must fill the semisimple part with no overlap
  uint64_t prod = 1;
  std::vector<Vec> all_gens;
  for (const AdditiveSubgroup& m : minimal) {
    prod *= m.order();
    for (const Vec& b : m.basis()) all_gens.push_back(b);
  }
  require(prod == q->order() &&
              AdditiveSubgroup::span(q, all_gens).order() == q->order(),
          errc::internal_check_failed,
          "semisimple part is not the direct sum of its minimal ideals");

  std::vector<SimpleQuotient> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec> gens;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        for (const Vec& b : minimal[j].basis()) gens.push_back(b);
    AdditiveSubgroup max_in_q =
        AdditiveSubgroup::span(q, gens).with_kind(SubgroupKind::two_sided_ideal);

    // pull back through the projection: kernel generators plus lifted basis
    std::vector<Vec> pull = rad.basis();
    for (const Vec& b : max_in_q.basis()) pull.push_back(semi.lift(b));
    AdditiveSubgroup m =
        AdditiveSubgroup::span(r, pull).with_kind(SubgroupKind::two_sided_ideal);

    Quotient qq = quotient(r, m);
    require(qq.ring->order() == minimal[i].order(), errc::internal_check_failed,
            "simple quotient order mismatch");
    out.push_back(SimpleQuotient{std::move(m), std::move(qq.ring), std::move(qq.proj)});
  }
  std::sort(out.begin(), out.end(), [](const SimpleQuotient& a, const SimpleQuotient& b) {
    return a.maximal_ideal.key() < b.maximal_ideal.key();
  });
  return out;
}

MatrixRecognition recognize_matrix_ring(const Ring& s) {
  require(s->order() > 1, errc::not_simple, "the trivial ring is not simple");
  require(s->is_unital(), errc::not_unital, "recognition needs a unital ring");
  const uint64_t cap = uint64_t(1) << 12;
  require(s->order() <= cap, errc::budget_exceeded, "ring too large for recognition scan");

  for (uint64_t i = 1; i < s->order(); ++i)
    require(ideal_generated(s, {s->element_at(i)}, Sided::two).is_whole_ring(),
            errc::not_simple,
            "nonzero element generates a proper two-sided ideal");

  int64_t p = characteristic(s);
  require(is_prime(p), errc::internal_check_failed, "simple finite ring with composite characteristic");

  // minimal left ideal: smallest nonzero principal left ideal, first found
  AdditiveSubgroup min_left = AdditiveSubgroup::whole(s);
  for (uint64_t i = 1; i < s->order(); ++i) {
    AdditiveSubgroup l = ideal_generated(s, {s->element_at(i)}, Sided::left);
    if (l.order() > 1 && l.order() < min_left.order()) min_left = l;
  }

  // L as an F_p-space
  std::vector<Vec> lbasis = min_left.basis();
  std::vector<size_t> pivots;
  for (size_t i = 0; i < min_left.hnf().size(); ++i)
    if (min_left.hnf()[i][i] < s->moduli()[i]) pivots.push_back(i);
  const size_t t = lbasis.size();

  // left multiplication by each ring generator, as a t x t matrix over F_p
  std::vector<PMat> actions;
  for (size_t g = 0; g < s->rank(); ++g) {
    PMat a(t, PVec(t, 0));
    for (size_t j = 0; j < t; ++j) {
      PVec col = coords_in_echelon(lbasis, pivots, s->mul(s->gen(g), lbasis[j]), p);
      for (size_t i = 0; i < t; ++i) a[i][j] = col[i];
    }
    actions.push_back(std::move(a));
  }

  // commutant: X with X A_g = A_g X for every generator action
  PMat system;
  for (const PMat& a : actions)
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j) {
        // row expresses (X a - a X)[i][j] = 0 in the t^2 unknowns X[u][v]
        PVec row(t * t, 0);
        for (size_t u = 0; u < t; ++u) {
          row[i * t + u] = mod_floor(row[i * t + u] + a[u][j], p);
          row[u * t + j] = mod_floor(row[u * t + j] - a[i][u], p);
        }
        system.push_back(std::move(row));
      }
  std::vector<PVec> comm_basis_flat = nullspace_mod_p(std::move(system), p, t * t);
  const size_t e = comm_basis_flat.size();
  require(e >= 1 && t % e == 0, errc::internal_check_failed,
          "endomorphism algebra dimension does not divide the module dimension");
  const int64_t k = int64_t(t / e);
  int64_t q = 1;
  for (size_t i = 0; i < e; ++i) q *= p;
  require(s->rank() == size_t(k) * size_t(k) * e, errc::internal_check_failed,
          "order is not q^(k^2)");

  std::vector<PMat> comm_basis;
  for (const PVec& flat : comm_basis_flat) {
    PMat m(t, PVec(t, 0));
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j) m[i][j] = flat[i * t + j];
    comm_basis.push_back(std::move(m));
  }

  // verify the commutant really is a field: commutative with every nonzero
  // element invertible
  {
    std::vector<PMat> elems;
    std::vector<int64_t> digits(e, 0);
    while (true) {
      PMat m(t, PVec(t, 0));
      for (size_t b = 0; b < e; ++b) {
        if (digits[b] == 0) continue;
        for (size_t i = 0; i < t; ++i)
          for (size_t j = 0; j < t; ++j)
            m[i][j] = mod_floor(m[i][j] + digits[b] * comm_basis[b][i][j], p);
      }
      elems.push_back(std::move(m));
      size_t pos = 0;
      while (pos < e && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == e) break;
    }
    for (const PMat& m : elems) {
      if (!pmat_is_zero(m))
        require(pmat_rank(m, p) == t, errc::internal_check_failed,
                "noninvertible nonzero endomorphism; commutant is not a field");
    }
    for (size_t i = 0; i < e; ++i)
      for (size_t j = i + 1; j < e; ++j)
        require(pmat_mul(comm_basis[i], comm_basis[j], p) ==
                    pmat_mul(comm_basis[j], comm_basis[i], p),
                errc::internal_check_failed, "noncommutative endomorphism ring");
  }

  // locate a commutant element whose minimal polynomial is the standard
  // modulus of GF(q); its powers give the dictionary between the abstract
  // field and the table field
  GF gq(q);
  PMat psi;
  {
    const std::vector<int64_t>& f = gq.modulus();
    std::vector<int64_t> digits(e, 0);
    bool found = false;
    while (!found) {
      PMat cand(t, PVec(t, 0));
      for (size_t b = 0; b < e; ++b)
        if (digits[b] != 0)
          for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j)
              cand[i][j] = mod_floor(cand[i][j] + digits[b] * comm_basis[b][i][j], p);
      // evaluate the modulus polynomial at cand
      PMat acc(t, PVec(t, 0));
      PMat power(t, PVec(t, 0));
      for (size_t i = 0; i < t; ++i) power[i][i] = 1;
      for (size_t d = 0; d < f.size(); ++d) {
        if (f[d] != 0)
          for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j)
              acc[i][j] = mod_floor(acc[i][j] + f[d] * power[i][j], p);
        if (d + 1 < f.size()) power = pmat_mul(power, cand, p);
      }
      if (pmat_is_zero(acc)) {
        psi = cand;
        found = true;
        break;
      }
      size_t pos = 0;
      while (pos < e && ++digits[pos] == p) digits[pos++] = 0;
      require(pos < e, errc::internal_check_failed, "no generator matching the field modulus");
    }
  }

  // basis of L over the endomorphism field: greedily extend by vectors
  // outside the span of { psi^u(l_i) }
  std::vector<PVec> l_coords; // chosen vectors, as F_p coordinate columns
  std::vector<PMat> psi_pow(e);
  {
    PMat id(t, PVec(t, 0));
    for (size_t i = 0; i < t; ++i) id[i][i] = 1;
    psi_pow[0] = id;
    for (size_t u = 1; u < e; ++u) psi_pow[u] = pmat_mul(psi_pow[u - 1], psi, p);
  }
  PMat accumulated; // spanned F_p vectors so far (rows)
  auto in_span = [&](const PVec& v) {
    PMat m = accumulated;
    m.push_back(v);
    return pmat_rank(m, p) == pmat_rank(accumulated, p);
  };
  for (size_t j = 0; j < t && l_coords.size() < size_t(k); ++j) {
    PVec cand(t, 0);
    cand[j] = 1; // j-th basis vector of L in its own coordinates
    if (in_span(cand)) continue;
    l_coords.push_back(cand);
    for (size_t u = 0; u < e; ++u) accumulated.push_back(pmat_apply(psi_pow[u], cand, p));
  }
  require(l_coords.size() == size_t(k) && pmat_rank(accumulated, p) == t,
          errc::internal_check_failed, "could not build a module basis over the field");

  // change of basis: columns psi^u(l_i) indexed by (i, u)
  PMat basis_cols(t, PVec(t, 0));
  for (size_t i = 0; i < size_t(k); ++i)
    for (size_t u = 0; u < e; ++u) {
      PVec v = pmat_apply(psi_pow[u], l_coords[i], p);
      for (size_t row = 0; row < t; ++row) basis_cols[row][i * e + u] = v[row];
    }

  Ring target = matrix_ring(k, q);
  std::vector<Vec> images;
  for (size_t g = 0; g < s->rank(); ++g) {
    Vec img = target->zero();
    for (size_t j = 0; j < size_t(k); ++j) {
      // image of l_j under left multiplication by gen(g), in (i,u) coords
      Vec moved = s->zero();
      {
        // l_j in ambient coordinates
        Vec lj = s->zero();
        for (size_t b = 0; b < t; ++b)
          if (l_coords[j][b] != 0)
            lj = s->add(lj, s->scale(l_coords[j][b], lbasis[b]));
        moved = s->mul(s->gen(g), lj);
      }
      PVec rhs = coords_in_echelon(lbasis, pivots, moved, p);
      PVec a = solve_mod_p(basis_cols, rhs, p); // coefficients a[(i,u)]
      for (size_t i = 0; i < size_t(k); ++i) {
        // entry (i, j) of the matrix is sum_u a[(i,u)] x^u in GF(q)
        for (size_t u = 0; u < e; ++u) {
          size_t gen_index = (i * size_t(k) + j) * e + u;
          img[gen_index] = mod_floor(img[gen_index] + a[i * e + u], p);
        }
      }
    }
    images.push_back(std::move(img));
  }

  MatrixRecognition rec;
  rec.k = k;
  rec.q = q;
  rec.iso = RingHom(s, target, std::move(images));
  HomFlags flags = rec.iso.validate();
  require(flags.isomorphism(), errc::internal_check_failed,
          "assembled matrix recognition map failed certification");
  return rec;
}

namespace {

Decomposition decompose_unital(const Ring& r) {
  std::vector<SimpleQuotient> quots = maximal_two_sided_quotients(r);
  // recognize each simple quotient, then order factors canonically
  struct Piece {
    MatrixRecognition rec;
    RingHom proj;
  };
  std::vector<Piece> pieces;
  for (SimpleQuotient& sq : quots)
    pieces.push_back({recognize_matrix_ring(sq.ring), sq.proj});
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return std::pair(a.rec.q, a.rec.k) < std::pair(b.rec.q, b.rec.k);
  });

  Decomposition d;
  std::vector<Ring> factor_rings;
  for (const Piece& p : pieces) {
    factor_rings.push_back(p.rec.iso.target());
    if (!d.factors.empty() && d.factors.back().k == p.rec.k && d.factors.back().q == p.rec.q)
      d.factors.back().multiplicity++;
    else
      d.factors.push_back({p.rec.k, p.rec.q, 1});
  }
  ProductRing prod = product(factor_rings);
  d.rebuilt = prod.ring;

  // diagonal of the per-quotient maps, composed with the recognitions
  std::vector<Vec> images;
  for (size_t g = 0; g < r->rank(); ++g) {
    Vec img = d.rebuilt->zero();
    for (size_t f = 0; f < pieces.size(); ++f) {
      Vec part = pieces[f].rec.iso.apply(pieces[f].proj.apply(r->gen(g)));
      img = d.rebuilt->add(img, prod.injections[f].apply(part));
    }
    images.push_back(std::move(img));
  }
  d.iso = RingHom(r, d.rebuilt, std::move(images));
  HomFlags flags = d.iso.validate();
  require(flags.isomorphism(), errc::internal_check_failed,
          "diagonal map failed to certify as an isomorphism");
  return d;
}

} // namespace

Decomposition decompose_semisimple(const Ring& r) {
  AdditiveSubgroup rad = jacobson_radical(r);
  if (!rad.is_zero_group()) {
    Vec witness;
    for (const Vec& v : rad.elements())
      if (!r->is_zero(v)) {
        witness = v;
        break;
      }
    std::ostringstream os;
    os << "radical contains nonzero element (";
    for (size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
    fail(errc::not_semisimple, os.str());
  }
  if (r->order() == 1) {
    Decomposition d;
    d.rebuilt = product({}).ring;
    d.iso = RingHom(r, d.rebuilt, std::vector<Vec>(r->rank(), Vec{}));
    return d;
  }
  if (r->is_unital()) return decompose_unital(r);
  return decompose_via_unitalization(r);
}

Decomposition decompose_via_unitalization(const Ring& r) {
  int64_t c = std::max<int64_t>(2, characteristic(r));
  Unitalization u = unitalize(r, c);
  Decomposition big = decompose_semisimple(u.ring);

  // The image of r in the decomposed unitalization is an ideal of a product
  // of simple unital rings, so it is exactly the subproduct of the factors
  // where it has nonzero support; keep those.
  struct Block {
    int64_t k, q;
    size_t begin, end;
  };
  std::vector<Block> blocks;
  size_t pos = 0;
  for (const DecompositionFactor& f : big.factors) {
    int64_t p, e;
    prime_power(f.q, p, e);
    size_t width = size_t(f.k) * size_t(f.k) * size_t(e);
    for (size_t m = 0; m < f.multiplicity; ++m) {
      blocks.push_back({f.k, f.q, pos, pos + width});
      pos += width;
    }
  }

  std::vector<Vec> images_in_big;
  for (size_t g = 0; g < r->rank(); ++g)
    images_in_big.push_back(big.iso.apply(u.embed.apply(r->gen(g))));

  std::vector<size_t> kept;
  for (size_t b = 0; b < blocks.size(); ++b) {
    bool nonzero = false;
    for (const Vec& img : images_in_big) {
      for (size_t i = blocks[b].begin; i < blocks[b].end; ++i)
        if (img[i] != 0) {
          nonzero = true;
          break;
        }
      if (nonzero) break;
    }
    if (nonzero) kept.push_back(b);
  }

  Decomposition d;
  std::vector<Ring> kept_rings;
  for (size_t b : kept) {
    kept_rings.push_back(matrix_ring(blocks[b].k, blocks[b].q));
    if (!d.factors.empty() && d.factors.back().k == blocks[b].k &&
        d.factors.back().q == blocks[b].q)
      d.factors.back().multiplicity++;
    else
      d.factors.push_back({blocks[b].k, blocks[b].q, 1});
  }
  ProductRing prod = product(kept_rings);
  d.rebuilt = prod.ring;
  std::vector<Vec> images;
  for (size_t g = 0; g < r->rank(); ++g) {
    Vec img = d.rebuilt->zero();
    size_t out_pos = 0;
    for (size_t b : kept)
      for (size_t i = blocks[b].begin; i < blocks[b].end; ++i, ++out_pos)
        img[out_pos] = images_in_big[g][i];
    images.push_back(std::move(img));
  }
  d.iso = RingHom(r, d.rebuilt, std::move(images));
  require(d.iso.validate().isomorphism(), errc::internal_check_failed,
          "support projection of the unitalized decomposition is not an isomorphism");
  return d;
}

Ring rebuild(const std::vector<DecompositionFactor>& factors) {
  std::vector<Ring> rings;
  for (const DecompositionFactor& f : factors)
    for (size_t m = 0; m < f.multiplicity; ++m) rings.push_back(matrix_ring(f.k, f.q));
  return product(rings).ring;
}

std::string factors_to_string(const std::vector<DecompositionFactor>& factors) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ", ";
    os << "(" << factors[i].k << "," << factors[i].q << ")^" << factors[i].multiplicity;
  }
  os << "]";
  return os.str();
}

Vec power_difference_eval(const Ring& r, size_t m, const Vec& x) {
  require(m >= 2, errc::bad_shape, "parameter m must be at least 2");
  std::vector<Vec> powers(m + 1);
  powers[1] = r->reduce(x);
  for (size_t i = 2; i <= m; ++i) powers[i] = r->mul(powers[i - 1], powers[1]);
  Vec acc;
  bool first = true;
  for (size_t i = 1; i < m; ++i)
    for (size_t j = i + 1; j <= m; ++j) {
      Vec factor = r->sub(powers[i], powers[j]);
      acc = first ? factor : r->mul(acc, factor);
      first = false;
    }
  return acc;
}

uint64_t power_difference_degree(size_t m) {
  require(m >= 2, errc::bad_shape, "parameter m must be at least 2");
  uint64_t deg = 0;
  for (size_t i = 1; i < m; ++i)
    for (size_t j = i + 1; j <= m; ++j) deg += std::max(i, j);
  return deg;
}

bool power_difference_vanishes_everywhere(const Ring& r, size_t m) {
  const uint64_t cap = uint64_t(1) << 16;
  require(r->order() <= cap, errc::budget_exceeded, "vanishing scan too large");
  for (uint64_t i = 0; i < r->order(); ++i)
    if (!r->is_zero(power_difference_eval(r, m, r->element_at(i)))) return false;
  return true;
}

BoundReport size_bounds(size_t m, uint64_t s) {
  require(m >= 2, errc::bad_shape, "parameter m must be at least 2");
  require(s >= 1, errc::bad_shape, "ideal index must be at least 1");
  BoundReport rep;
  rep.m = m;
  rep.s = s;
  rep.w_degree = power_difference_degree(m);

  uint64_t log2s = 0;
  for (uint64_t v = s; v > 1; v >>= 1) ++log2s; // floor(log2 s)
  uint64_t root = 0;
  while ((root + 1) * (root + 1) <= log2s) ++root; // floor(sqrt(.))
  uint64_t cubic = uint64_t(m) * (uint64_t(m) - 1) * (uint64_t(m) + 1) / 6;
  rep.k_bound = std::max(root, cubic);
  rep.f_bound = std::max(s, rep.w_degree);
  return rep;
}

bool jordan_witness_nonzero(size_t m, size_t k, int64_t q) {
  require(m >= 2, errc::bad_shape, "parameter m must be at least 2");
  require(k >= 1, errc::bad_shape, "matrix size must be at least 1");
  GF f(q);
  GFMatrix n = GFMatrix::jordan_nilpotent(&f, k);
  GFMatrix acc = GFMatrix::identity(&f, k);
  for (size_t i = 1; i < m; ++i)
    for (size_t j = i + 1; j <= m; ++j) acc = acc.mul(n.pow(i).sub(n.pow(j)));
  return !acc.is_zero();
}

} // namespace ringlab
