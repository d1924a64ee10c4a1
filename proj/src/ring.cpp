#include "ringlab/ring.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

} // namespace

Ring FiniteRing::make(Vec moduli, std::vector<Mat> sc, std::string name) {
  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  const size_t r = moduli.size();
  for (int64_t d : moduli)
    require(d >= 2, errc::bad_shape, "modulus must be at least 2");
  // Keeps every intermediate product of two coefficients and a structure
  // constant inside int64.
  for (int64_t d : moduli)
    require(d <= (int64_t(1) << 20), errc::bad_shape, "modulus too large");
  require(sc.size() == r, errc::bad_shape, "structure constants must be r x r x r");
  for (const Mat& row : sc) {
    require(row.size() == r, errc::bad_shape, "structure constants must be r x r x r");
    for (const Vec& c : row)
      require(c.size() == r, errc::bad_shape, "structure constants must be r x r x r");
  }

  uint64_t order = 1;
  std::vector<uint64_t> strides(r, 1);
  for (size_t i = 0; i < r; ++i) {
    strides[i] = order;
    require(order <= (uint64_t(1) << 61) / uint64_t(moduli[i]), errc::bad_shape,
            "ring order too large");
    order *= uint64_t(moduli[i]);
  }

  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) {
        int64_t c = sc[i][j][k];
        require(c >= 0 && c < moduli[k], errc::unreduced_constant,
                "sc[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                    std::to_string(k) + "] not reduced mod " + std::to_string(moduli[k]));
        // d_i * (e_i e_j) = (d_i e_i) e_j = 0 and likewise in j; without this
        // the product is not well defined on the presented additive group.
        require((c * moduli[i]) % moduli[k] == 0 && (c * moduli[j]) % moduli[k] == 0,
                errc::unreduced_constant,
                "sc[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] incompatible with generator orders");
      }

  ring->moduli_ = std::move(moduli);
  ring->sc_ = std::move(sc);
  ring->name_ = std::move(name);
  ring->order_ = order;
  ring->strides_ = std::move(strides);

  ring->sparse_.resize(r * r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      auto& lst = ring->sparse_[i * r + j];
      for (size_t k = 0; k < r; ++k)
        if (ring->sc_[i][j][k] != 0) lst.emplace_back(uint32_t(k), ring->sc_[i][j][k]);
    }

  ring->commutative_ = true;
  for (size_t i = 0; i < r && ring->commutative_; ++i)
    for (size_t j = 0; j < r; ++j)
      if (ring->sc_[i][j] != ring->sc_[j][i]) {
        ring->commutative_ = false;
        break;
      }

  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const Vec ij = ring->sc_[i][j];
      for (size_t k = 0; k < r; ++k) {
        Vec lhs = ring->mul(ij, ring->gen(k));
        Vec rhs = ring->mul(ring->gen(i), ring->sc_[j][k]);
        if (lhs != rhs)
          fail(errc::non_associative,
               "generator triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + "): (ei*ej)*ek = " + vec_str(lhs) +
                   " but ei*(ej*ek) = " + vec_str(rhs));
      }
    }

  return ring;
}

Vec FiniteRing::gen(size_t i) const {
  Vec v(rank(), 0);
  v[i] = 1;
  return v;
}

Vec FiniteRing::reduce(Vec v) const {
  require(v.size() == rank(), errc::bad_shape, "coefficient vector has wrong length");
  for (size_t i = 0; i < v.size(); ++i) v[i] = mod_floor(v[i], moduli_[i]);
  return v;
}

bool FiniteRing::is_zero(const Vec& v) const {
  for (int64_t x : v)
    if (x != 0) return false;
  return true;
}

Vec FiniteRing::add(const Vec& a, const Vec& b) const {
  Vec out(rank());
  for (size_t i = 0; i < out.size(); ++i) {
    int64_t s = a[i] + b[i];
    out[i] = (s >= moduli_[i]) ? s - moduli_[i] : s;
  }
  return out;
}

Vec FiniteRing::sub(const Vec& a, const Vec& b) const {
  Vec out(rank());
  for (size_t i = 0; i < out.size(); ++i) {
    int64_t s = a[i] - b[i];
    out[i] = (s < 0) ? s + moduli_[i] : s;
  }
  return out;
}

Vec FiniteRing::neg(const Vec& a) const {
  Vec out(rank());
  for (size_t i = 0; i < out.size(); ++i) out[i] = (a[i] == 0) ? 0 : moduli_[i] - a[i];
  return out;
}

Vec FiniteRing::scale(int64_t n, const Vec& a) const {
  Vec out(rank());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = mod_floor(mod_floor(n, moduli_[i]) * a[i], moduli_[i]);
  return out;
}

Vec FiniteRing::mul(const Vec& a, const Vec& b) const {
  const size_t r = rank();
  Vec out(r, 0);
  for (size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      int64_t coef = a[i] * b[j];
      for (const auto& [k, c] : sp(i, j))
        out[k] = (out[k] + (coef % moduli_[k]) * c) % moduli_[k];
    }
  }
  return out;
}

Vec FiniteRing::pow(const Vec& a, uint64_t n) const {
  require(n >= 1, errc::bad_shape, "power exponent must be >= 1");
  Vec acc = a;
  for (uint64_t i = 1; i < n; ++i) acc = mul(acc, a);
  return acc;
}

int64_t FiniteRing::additive_order(const Vec& a) const {
  int64_t ord = 1;
  for (size_t i = 0; i < rank(); ++i)
    if (a[i] != 0) ord = lcm64(ord, moduli_[i] / gcd64(moduli_[i], a[i]));
  return ord;
}

uint64_t FiniteRing::index_of(const Vec& v) const {
  uint64_t idx = 0;
  for (size_t i = 0; i < rank(); ++i) idx += uint64_t(v[i]) * strides_[i];
  return idx;
}

Vec FiniteRing::element_at(uint64_t idx) const {
  Vec v(rank());
  for (size_t i = 0; i < rank(); ++i) {
    v[i] = int64_t(idx % uint64_t(moduli_[i]));
    idx /= uint64_t(moduli_[i]);
  }
  return v;
}

void FiniteRing::ensure_tables() const {
  require(tables_ok(), errc::budget_exceeded,
          "ring of order " + std::to_string(order_) + " too large for op tables");
  std::call_once(tab_once_, [this] {
    const uint64_t n = order_;
    mul_tab_.resize(n * n);
    add_tab_.resize(n * n);
    neg_tab_.resize(n);
    std::vector<Vec> elems(n);
    for (uint64_t i = 0; i < n; ++i) elems[i] = element_at(i);
    for (uint64_t i = 0; i < n; ++i) {
      neg_tab_[i] = uint32_t(index_of(neg(elems[i])));
      for (uint64_t j = 0; j < n; ++j) {
        add_tab_[i * n + j] = uint32_t(index_of(add(elems[i], elems[j])));
        mul_tab_[i * n + j] = uint32_t(index_of(mul(elems[i], elems[j])));
      }
    }
  });
}

std::optional<Vec> FiniteRing::unit() const {
  require(order_ <= (uint64_t(1) << 21), errc::budget_exceeded,
          "ring too large for the unit scan");
  std::call_once(unit_once_, [this] {
    for (uint64_t i = 0; i < order_; ++i) {
      Vec e = element_at(i);
      bool ok = true;
      for (size_t g = 0; g < rank() && ok; ++g) {
        Vec eg = gen(g);
        if (mul(e, eg) != eg || mul(eg, e) != eg) ok = false;
      }
      if (ok) {
        unit_ = e;
        return;
      }
    }
  });
  return unit_;
}

int64_t characteristic(const Ring& r) {
  int64_t c = 1;
  for (int64_t d : r->moduli()) c = lcm64(c, d);
  return c;
}

RingElement::RingElement(Ring ring, Vec coeffs) : ring_(std::move(ring)) {
  v_ = ring_->reduce(std::move(coeffs));
}

static void check_same_ring(const Ring& a, const Ring& b) {
  require(a.get() == b.get(), errc::ring_mismatch,
          "elements of '" + a->name() + "' and '" + b->name() + "' cannot be combined");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, ring_->add(v_, o.v_));
}
RingElement RingElement::operator-(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, ring_->sub(v_, o.v_));
}
RingElement RingElement::operator-() const { return RingElement(ring_, ring_->neg(v_)); }
RingElement RingElement::operator*(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, ring_->mul(v_, o.v_));
}
RingElement RingElement::scaled(int64_t n) const {
  return RingElement(ring_, ring_->scale(n, v_));
}
RingElement RingElement::pow(uint64_t n) const { return RingElement(ring_, ring_->pow(v_, n)); }
bool RingElement::operator==(const RingElement& o) const {
  return ring_.get() == o.ring_.get() && v_ == o.v_;
}

const char* kind_name(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::subgroup: return "subgroup";
    case SubgroupKind::left_ideal: return "left-ideal";
    case SubgroupKind::right_ideal: return "right-ideal";
    case SubgroupKind::two_sided_ideal: return "two-sided-ideal";
    case SubgroupKind::subring: return "subring";
  }
  return "?";
}

AdditiveSubgroup::AdditiveSubgroup(Ring ring, Mat hnf, SubgroupKind kind)
    : ring_(std::move(ring)), hnf_(std::move(hnf)), kind_(kind) {
  order_ = 1;
  for (size_t i = 0; i < hnf_.size(); ++i)
    order_ *= uint64_t(ring_->moduli()[i] / hnf_[i][i]);
}

AdditiveSubgroup AdditiveSubgroup::span(Ring ring, const std::vector<Vec>& gens,
                                        SubgroupKind kind) {
  Mat rows;
  rows.reserve(gens.size());
  for (const Vec& g : gens) rows.push_back(ring->reduce(g));
  Mat hnf = hnf_with_moduli(rows, ring->moduli());
  return AdditiveSubgroup(std::move(ring), std::move(hnf), kind);
}

AdditiveSubgroup AdditiveSubgroup::zero(Ring ring) {
  return span(std::move(ring), {}, SubgroupKind::two_sided_ideal);
}

AdditiveSubgroup AdditiveSubgroup::whole(Ring ring) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < ring->rank(); ++i) gens.push_back(ring->gen(i));
  return span(std::move(ring), gens, SubgroupKind::two_sided_ideal);
}

bool AdditiveSubgroup::contains(const Vec& v) const {
  return hnf_lattice_contains(hnf_, ring_->reduce(v));
}

bool AdditiveSubgroup::contains_subgroup(const AdditiveSubgroup& other) const {
  for (const Vec& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

std::vector<Vec> AdditiveSubgroup::basis() const {
  std::vector<Vec> out;
  for (size_t i = 0; i < hnf_.size(); ++i)
    if (hnf_[i][i] < ring_->moduli()[i]) out.push_back(ring_->reduce(hnf_[i]));
  return out;
}

std::vector<Vec> AdditiveSubgroup::elements(uint64_t cap) const {
  require(order_ <= cap, errc::budget_exceeded, "subgroup too large to enumerate");
  const size_t r = hnf_.size();
  Vec counts(r);
  for (size_t i = 0; i < r; ++i) counts[i] = ring_->moduli()[i] / hnf_[i][i];
  std::vector<Vec> out;
  out.reserve(order_);
  Vec t(r, 0);
  while (true) {
    Vec v = ring_->zero();
    for (size_t i = 0; i < r; ++i)
      if (t[i] != 0) v = ring_->add(v, ring_->reduce(ring_->scale(t[i], hnf_[i])));
    out.push_back(v);
    size_t pos = 0;
    while (pos < r && ++t[pos] == counts[pos]) t[pos++] = 0;
    if (pos == r) break;
  }
  return out;
}

bool AdditiveSubgroup::check_kind(SubgroupKind k) const {
  std::vector<Vec> bas = basis();
  auto left_ok = [&] {
    for (const Vec& b : bas)
      for (size_t i = 0; i < ring_->rank(); ++i)
        if (!contains(ring_->mul(ring_->gen(i), b))) return false;
    return true;
  };
  auto right_ok = [&] {
    for (const Vec& b : bas)
      for (size_t i = 0; i < ring_->rank(); ++i)
        if (!contains(ring_->mul(b, ring_->gen(i)))) return false;
    return true;
  };
  switch (k) {
    case SubgroupKind::subgroup: return true;
    case SubgroupKind::left_ideal: return left_ok();
    case SubgroupKind::right_ideal: return right_ok();
    case SubgroupKind::two_sided_ideal: return left_ok() && right_ok();
    case SubgroupKind::subring:
      for (const Vec& a : bas)
        for (const Vec& b : bas)
          if (!contains(ring_->mul(a, b))) return false;
      return true;
  }
  return false;
}

AdditiveSubgroup AdditiveSubgroup::with_kind(SubgroupKind k) const {
  require(check_kind(k), errc::internal_check_failed,
          std::string("subgroup does not satisfy kind ") + kind_name(k));
  AdditiveSubgroup out = *this;
  out.kind_ = k;
  return out;
}

bool AdditiveSubgroup::operator==(const AdditiveSubgroup& o) const {
  return ring_.get() == o.ring_.get() && hnf_ == o.hnf_;
}

AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Vec> gens = a.basis();
  for (const Vec& v : b.basis()) gens.push_back(v);
  return AdditiveSubgroup::span(a.ring(), gens);
}

AdditiveSubgroup subgroup_intersection(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  check_same_ring(a.ring(), b.ring());
  const AdditiveSubgroup& small = (a.order() <= b.order()) ? a : b;
  const AdditiveSubgroup& big = (a.order() <= b.order()) ? b : a;
  std::vector<Vec> gens;
  for (const Vec& v : small.elements(1 << 22))
    if (big.contains(v)) gens.push_back(v);
  return AdditiveSubgroup::span(a.ring(), gens);
}

namespace {

// Fixed-point span closure: repeatedly absorb the images of the current
// basis under `absorb` until nothing new appears. Terminates because the
// subgroup strictly grows.
AdditiveSubgroup close_span(
    const Ring& r, std::vector<Vec> seed,
    const std::function<std::vector<Vec>(const Vec&)>& absorb, SubgroupKind kind) {
  AdditiveSubgroup h = AdditiveSubgroup::span(r, seed, kind);
  while (true) {
    std::vector<Vec> extra;
    for (const Vec& b : h.basis())
      for (Vec v : absorb(b))
        if (!h.contains(v)) extra.push_back(std::move(v));
    if (extra.empty()) break;
    std::vector<Vec> gens = h.basis();
    for (Vec& v : extra) gens.push_back(std::move(v));
    h = AdditiveSubgroup::span(r, gens, kind);
  }
  return h;
}

} // namespace

AdditiveSubgroup subring_generated(const Ring& r, const std::vector<Vec>& gens) {
  require(!gens.empty(), errc::bad_shape, "generating set must be nonempty");
  // products of basis elements suffice: multiplication is bilinear
  AdditiveSubgroup h = AdditiveSubgroup::span(r, gens, SubgroupKind::subring);
  while (true) {
    std::vector<Vec> bas = h.basis();
    std::vector<Vec> extra;
    for (const Vec& a : bas)
      for (const Vec& b : bas) {
        Vec p = r->mul(a, b);
        if (!h.contains(p)) extra.push_back(std::move(p));
      }
    if (extra.empty()) break;
    for (Vec& v : extra) bas.push_back(std::move(v));
    h = AdditiveSubgroup::span(r, bas, SubgroupKind::subring);
  }
  return h;
}

AdditiveSubgroup ideal_generated(const Ring& r, const std::vector<Vec>& gens, Sided sided) {
  require(!gens.empty(), errc::bad_shape, "generating set must be nonempty");
  SubgroupKind kind = sided == Sided::left    ? SubgroupKind::left_ideal
                      : sided == Sided::right ? SubgroupKind::right_ideal
                                              : SubgroupKind::two_sided_ideal;
  auto absorb = [&, sided](const Vec& b) {
    std::vector<Vec> out;
    for (size_t i = 0; i < r->rank(); ++i) {
      if (sided != Sided::right) out.push_back(r->mul(r->gen(i), b));
      if (sided != Sided::left) out.push_back(r->mul(b, r->gen(i)));
      if (sided == Sided::two)
        for (size_t j = 0; j < r->rank(); ++j)
          out.push_back(r->mul(r->mul(r->gen(i), b), r->gen(j)));
    }
    return out;
  };
  return close_span(r, gens, absorb, kind);
}

AdditiveSubgroup annihilator(const Ring& r, const Vec& x) {
  const uint64_t cap = uint64_t(1) << 21;
  require(r->order() <= cap, errc::budget_exceeded, "ring too large for annihilator scan");
  Vec xr = r->reduce(x);
  std::vector<Vec> found;
  for (uint64_t i = 0; i < r->order(); ++i) {
    Vec a = r->element_at(i);
    if (r->is_zero(r->mul(a, xr)) && r->is_zero(r->mul(xr, a))) found.push_back(std::move(a));
  }
  SubgroupKind kind =
      r->is_commutative() ? SubgroupKind::two_sided_ideal : SubgroupKind::subgroup;
  AdditiveSubgroup h = AdditiveSubgroup::span(r, found, SubgroupKind::subgroup);
  require(h.order() == found.size(), errc::internal_check_failed,
          "annihilator scan did not produce a subgroup");
  return kind == SubgroupKind::subgroup ? h : h.with_kind(kind);
}

RingHom::RingHom(Ring source, Ring target, std::vector<Vec> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  require(images_.size() == source_->rank(), errc::bad_shape,
          "need one image per source generator");
  for (Vec& v : images_) v = target_->reduce(std::move(v));
}

RingHom RingHom::identity(Ring r) {
  std::vector<Vec> images;
  for (size_t i = 0; i < r->rank(); ++i) images.push_back(r->gen(i));
  return RingHom(r, r, std::move(images));
}

Vec RingHom::apply(const Vec& v) const {
  Vec out = target_->zero();
  for (size_t i = 0; i < source_->rank(); ++i)
    if (v[i] != 0) out = target_->add(out, target_->scale(v[i], images_[i]));
  return out;
}

RingElement RingHom::operator()(const RingElement& x) const {
  check_same_ring(x.ring(), source_);
  return RingElement(target_, apply(x.coeffs()));
}

HomFlags RingHom::validate() const {
  HomFlags f;
  f.additive = true;
  for (size_t i = 0; i < source_->rank(); ++i)
    if (!target_->is_zero(target_->scale(source_->moduli()[i], images_[i]))) {
      f.additive = false;
      break;
    }
  f.multiplicative = true;
  for (size_t i = 0; i < source_->rank() && f.multiplicative; ++i)
    for (size_t j = 0; j < source_->rank(); ++j)
      if (target_->mul(images_[i], images_[j]) != apply(source_->sc(i, j))) {
        f.multiplicative = false;
        break;
      }
  uint64_t image_order = image_subgroup().order();
  f.injective = (image_order == source_->order());
  f.surjective = (image_order == target_->order());
  return f;
}

AdditiveSubgroup RingHom::image_subgroup() const {
  return AdditiveSubgroup::span(target_, images_);
}

AdditiveSubgroup RingHom::preimage(const AdditiveSubgroup& h) const {
  check_same_ring(h.ring(), target_);
  const uint64_t cap = uint64_t(1) << 21;
  require(source_->order() <= cap, errc::budget_exceeded, "source too large for preimage scan");
  std::vector<Vec> found;
  for (uint64_t i = 0; i < source_->order(); ++i) {
    Vec v = source_->element_at(i);
    if (h.contains(apply(v))) found.push_back(std::move(v));
  }
  AdditiveSubgroup out = AdditiveSubgroup::span(source_, found);
  require(out.order() == found.size(), errc::internal_check_failed,
          "preimage scan did not produce a subgroup");
  return out;
}

RingHom RingHom::compose_after(const RingHom& first) const {
  check_same_ring(first.target_, source_);
  std::vector<Vec> images;
  for (size_t i = 0; i < first.source_->rank(); ++i) images.push_back(apply(first.images_[i]));
  return RingHom(first.source_, target_, std::move(images));
}

RingHom RingHom::inverse() const {
  // Match each target generator against the image of some source element.
  // The hom must be bijective; we invert by solving on a spanning set.
  require(source_->order() == target_->order(), errc::internal_check_failed,
          "inverse of non-bijective hom");
  const uint64_t cap = uint64_t(1) << 21;
  require(source_->order() <= cap, errc::budget_exceeded, "hom too large to invert by scan");
  std::vector<Vec> inv_images(target_->rank());
  std::vector<bool> done(target_->rank(), false);
  size_t remaining = target_->rank();
  for (uint64_t i = 0; i < source_->order() && remaining > 0; ++i) {
    Vec v = source_->element_at(i);
    Vec w = apply(v);
    for (size_t g = 0; g < target_->rank(); ++g)
      if (!done[g] && w == target_->gen(g)) {
        inv_images[g] = v;
        done[g] = true;
        --remaining;
      }
  }
  require(remaining == 0, errc::internal_check_failed, "hom is not surjective");
  return RingHom(target_, source_, std::move(inv_images));
}

Vec Quotient::lift(const Vec& q) const {
  Vec full(u.size(), 0);
  for (size_t t = 0; t < kept.size(); ++t) full[kept[t]] = q[t];
  Vec x = mat_apply(u_inv, full);
  return src->reduce(std::move(x));
}

Quotient quotient(const Ring& r, const AdditiveSubgroup& ideal) {
  check_same_ring(ideal.ring(), r);
  require(ideal.check_kind(SubgroupKind::two_sided_ideal), errc::not_two_sided_ideal,
          "quotient requires a two-sided ideal");
  const size_t n = r->rank();

  // Columns of `a` generate the ideal's lattice (moduli rows included).
  Mat a(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = ideal.hnf()[j][i];
  SmithU s = smith_left_transform(std::move(a));

  Quotient q;
  q.src = r;
  q.u = s.u;
  q.u_inv = s.u_inv;
  for (size_t i = 0; i < n; ++i)
    if (s.diag[i] >= 2) {
      q.kept.push_back(i);
      q.kept_moduli.push_back(s.diag[i]);
    }
  const size_t m = q.kept.size();

  auto project = [&](const Vec& x) {
    Vec y = mat_apply(q.u, x);
    Vec out(m);
    for (size_t t = 0; t < m; ++t) out[t] = mod_floor(y[q.kept[t]], q.kept_moduli[t]);
    return out;
  };

  std::vector<Mat> sc(m, Mat(m, Vec(m, 0)));
  {
    // representatives of the quotient generators, multiplied in r
    std::vector<Vec> reps(m);
    for (size_t t = 0; t < m; ++t) {
      Vec full(n, 0);
      full[q.kept[t]] = 1;
      reps[t] = r->reduce(mat_apply(q.u_inv, full));
    }
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) sc[i][j] = project(r->mul(reps[i], reps[j]));
  }
  q.ring = FiniteRing::make(q.kept_moduli, std::move(sc),
                            r->name().empty() ? "quotient" : r->name() + "/I");

  require(q.ring->order() * ideal.order() == r->order(), errc::internal_check_failed,
          "quotient order mismatch");

  std::vector<Vec> proj_images;
  for (size_t i = 0; i < n; ++i) proj_images.push_back(project(r->gen(i)));
  q.proj = RingHom(r, q.ring, std::move(proj_images));
  return q;
}

ProductRing product(const std::vector<Ring>& factors, std::string name) {
  size_t total_rank = 0;
  for (const Ring& f : factors) total_rank += f->rank();

  Vec moduli;
  moduli.reserve(total_rank);
  std::vector<std::pair<size_t, size_t>> blocks;
  for (const Ring& f : factors) {
    size_t begin = moduli.size();
    for (int64_t d : f->moduli()) moduli.push_back(d);
    blocks.emplace_back(begin, moduli.size());
  }

  std::vector<Mat> sc(total_rank, Mat(total_rank, Vec(total_rank, 0)));
  for (size_t f = 0; f < factors.size(); ++f) {
    auto [b, e] = blocks[f];
    for (size_t i = b; i < e; ++i)
      for (size_t j = b; j < e; ++j) {
        const Vec& c = factors[f]->sc(i - b, j - b);
        for (size_t k = 0; k < c.size(); ++k) sc[i][j][b + k] = c[k];
      }
  }
  if (name.empty()) {
    for (size_t f = 0; f < factors.size(); ++f)
      name += (f ? " x " : "") + (factors[f]->name().empty() ? "?" : factors[f]->name());
    if (factors.empty()) name = "empty-product";
  }

  ProductRing out;
  out.ring = FiniteRing::make(std::move(moduli), std::move(sc), std::move(name));
  out.factors = factors;
  out.blocks = std::move(blocks);
  for (size_t f = 0; f < factors.size(); ++f) {
    auto [b, e] = out.blocks[f];
    std::vector<Vec> inj;
    for (size_t i = b; i < e; ++i) inj.push_back(out.ring->gen(i));
    out.injections.emplace_back(factors[f], out.ring, std::move(inj));
    std::vector<Vec> proj;
    for (size_t i = 0; i < out.ring->rank(); ++i)
      proj.push_back(i >= b && i < e ? factors[f]->gen(i - b) : factors[f]->zero());
    out.projections.emplace_back(out.ring, factors[f], std::move(proj));
  }
  return out;
}

Unitalization unitalize(const Ring& r, int64_t c) {
  require(c >= 2, errc::bad_characteristic, "unitalization modulus must be at least 2");
  require(c % characteristic(r) == 0, errc::bad_characteristic,
          "unitalization modulus must be a multiple of the characteristic");
  const size_t n = r->rank();
  Vec moduli = r->moduli();
  moduli.push_back(c);
  std::vector<Mat> sc(n + 1, Mat(n + 1, Vec(n + 1, 0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Vec& v = r->sc(i, j);
      for (size_t k = 0; k < n; ++k) sc[i][j][k] = v[k];
    }
  // (a,0)*(0,1) = a and (0,1)*(a,0) = a; (0,1)^2 = (0,1)
  for (size_t i = 0; i < n; ++i) {
    sc[i][n][i] = 1;
    sc[n][i][i] = 1;
  }
  sc[n][n][n] = 1;

  Unitalization out;
  out.ring = FiniteRing::make(std::move(moduli), std::move(sc),
                              (r->name().empty() ? "R" : r->name()) + "^1");
  std::vector<Vec> embed;
  for (size_t i = 0; i < n; ++i) embed.push_back(out.ring->gen(i));
  out.embed = RingHom(r, out.ring, std::move(embed));
  out.unit = out.ring->gen(n);
  return out;
}

std::vector<AdditiveSubgroup> all_ideals(const Ring& r, Sided sided, size_t cap) {
  std::vector<AdditiveSubgroup> found;
  std::set<Mat> seen;
  std::vector<size_t> todo;
  AdditiveSubgroup z = AdditiveSubgroup::zero(r);
  seen.insert(z.key());
  found.push_back(z);
  todo.push_back(0);
  const uint64_t enum_cap = uint64_t(1) << 21;
  require(r->order() <= enum_cap, errc::budget_exceeded, "ring too large for ideal walk");

  while (!todo.empty()) {
    size_t cur = todo.back();
    todo.pop_back();
    AdditiveSubgroup h = found[cur];
    if (h.is_whole_ring()) continue;
    for (uint64_t i = 0; i < r->order(); ++i) {
      Vec x = r->element_at(i);
      if (h.contains(x)) continue;
      std::vector<Vec> gens = h.basis();
      gens.push_back(std::move(x));
      AdditiveSubgroup bigger = ideal_generated(r, gens, sided);
      if (seen.insert(bigger.key()).second) {
        require(found.size() < cap, errc::budget_exceeded, "ideal lattice walk exceeded cap");
        found.push_back(bigger);
        todo.push_back(found.size() - 1);
      }
    }
  }
  return found;
}

} // namespace ringlab
