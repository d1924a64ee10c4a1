#ifndef RINGLAB_RING_HPP
#define RINGLAB_RING_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/linalg.hpp"

namespace ringlab {

class FiniteRing;
using Ring = std::shared_ptr<const FiniteRing>;

// A finite associative ring, presented by the moduli of its additive
// cyclic factors and by structure constants: gen(i) * gen(j) equals
// sum_k sc(i,j)[k] * gen(k). Validation at construction checks shape,
// reduction, bilinear consistency with the moduli, and associativity on
// all generator triples (bilinearity then gives full associativity).
//
// Instances are immutable after make(); concurrent readers may share them
// freely. An empty moduli list is the ring of order 1.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
  static Ring make(Vec moduli, std::vector<Mat> sc, std::string name = "");

  size_t rank() const { return moduli_.size(); }
  const Vec& moduli() const { return moduli_; }
  uint64_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const Vec& sc(size_t i, size_t j) const { return sc_[i][j]; }
  bool is_commutative() const { return commutative_; }

  Vec zero() const { return Vec(rank(), 0); }
  Vec gen(size_t i) const;
  Vec reduce(Vec v) const;
  bool is_zero(const Vec& v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(int64_t n, const Vec& a) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, uint64_t n) const; // n >= 1
  int64_t additive_order(const Vec& a) const;

  // Mixed-radix element indexing; total order always fits uint64 by the
  // construction-time size guard.
  uint64_t index_of(const Vec& v) const;
  Vec element_at(uint64_t idx) const;

  // Index-based operation tables, built lazily for rings small enough to
  // afford order^2 words. Hot loops (radical scans, searches) use these.
  static constexpr uint64_t kTableLimit = 1024;
  bool tables_ok() const { return order_ <= kTableLimit; }
  void ensure_tables() const;
  uint32_t mul_idx(uint32_t a, uint32_t b) const { return mul_tab_[a * order_ + b]; }
  uint32_t add_idx(uint32_t a, uint32_t b) const { return add_tab_[a * order_ + b]; }
  uint32_t neg_idx(uint32_t a) const { return neg_tab_[a]; }

  // Multiplicative identity, if one exists (found by scan, cached).
  std::optional<Vec> unit() const;
  bool is_unital() const { return unit().has_value(); }

private:
  FiniteRing() = default;

  Vec moduli_;
  std::vector<Mat> sc_;
  // nonzero entries of sc_[i][j] as (k, c) pairs; multiplication walks these
  std::vector<std::vector<std::pair<uint32_t, int64_t>>> sparse_;
  std::string name_;
  uint64_t order_ = 1;
  std::vector<uint64_t> strides_;
  bool commutative_ = true;

  mutable std::once_flag tab_once_;
  mutable std::vector<uint32_t> mul_tab_, add_tab_, neg_tab_;
  mutable std::once_flag unit_once_;
  mutable std::optional<Vec> unit_;

  const std::vector<std::pair<uint32_t, int64_t>>& sp(size_t i, size_t j) const {
    return sparse_[i * rank() + j];
  }
};

int64_t characteristic(const Ring& r); // lcm of moduli; 1 for the zero ring

// Value-semantics element for user-facing code; hot paths work on raw
// coefficient vectors or indices instead.
class RingElement {
public:
  RingElement(Ring ring, Vec coeffs);
  const Ring& ring() const { return ring_; }
  const Vec& coeffs() const { return v_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled(int64_t n) const;
  RingElement pow(uint64_t n) const;
  bool operator==(const RingElement& o) const;
  bool is_zero() const { return ring_->is_zero(v_); }

private:
  Ring ring_;
  Vec v_;
};

enum class SubgroupKind { subgroup, left_ideal, right_ideal, two_sided_ideal, subring };

const char* kind_name(SubgroupKind k);

// Subgroup of the additive group, canonically presented: the Hermite form
// of its lattice (together with the moduli relations). Equal subgroups
// have equal matrices, so equality and membership are deterministic.
class AdditiveSubgroup {
public:
  static AdditiveSubgroup span(Ring ring, const std::vector<Vec>& gens,
                               SubgroupKind kind = SubgroupKind::subgroup);
  static AdditiveSubgroup zero(Ring ring);
  static AdditiveSubgroup whole(Ring ring);

  const Ring& ring() const { return ring_; }
  const Mat& hnf() const { return hnf_; }
  SubgroupKind kind() const { return kind_; }
  uint64_t order() const { return order_; }
  bool contains(const Vec& v) const;
  bool contains_subgroup(const AdditiveSubgroup& other) const;
  bool is_zero_group() const { return order_ == 1; }
  bool is_whole_ring() const { return order_ == ring_->order(); }

  // Rows that contribute nontrivially, reduced to ring elements; spanning set.
  std::vector<Vec> basis() const;
  std::vector<Vec> elements(uint64_t cap = UINT64_MAX) const;

  // Verifies the claimed closure property against the ring's generators.
  bool check_kind(SubgroupKind k) const;
  AdditiveSubgroup with_kind(SubgroupKind k) const; // checked relabel

  bool operator==(const AdditiveSubgroup& o) const;
  bool operator!=(const AdditiveSubgroup& o) const { return !(*this == o); }

  // Canonical comparison key (ring-internal use: dedup in lattice walks).
  const Mat& key() const { return hnf_; }

private:
  AdditiveSubgroup(Ring ring, Mat hnf, SubgroupKind kind);
  Ring ring_;
  Mat hnf_;
  SubgroupKind kind_;
  uint64_t order_;
};

AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b);
AdditiveSubgroup subgroup_intersection(const AdditiveSubgroup& a, const AdditiveSubgroup& b);

// Smallest subring containing the given elements (closed under +, -, *;
// integer multiples come with additive closure).
AdditiveSubgroup subring_generated(const Ring& r, const std::vector<Vec>& gens);

enum class Sided { left, right, two };

// Smallest ideal of the requested sidedness containing the generators.
// Closure works in the unitalized ring, so the generators themselves are
// always included even when the ring has no unit.
AdditiveSubgroup ideal_generated(const Ring& r, const std::vector<Vec>& gens, Sided sided);

// Two-sided annihilator { a : a*x = 0 and x*a = 0 }. Always a subgroup;
// flagged as a two-sided ideal when the ring is commutative.
AdditiveSubgroup annihilator(const Ring& r, const Vec& x);

// Ring homomorphism, stored as the images of the source's additive
// generators. validate() computes the certificate flags from scratch.
struct HomFlags {
  bool additive = false;
  bool multiplicative = false;
  bool injective = false;
  bool surjective = false;
  bool homomorphism() const { return additive && multiplicative; }
  bool isomorphism() const { return homomorphism() && injective && surjective; }
};

class RingHom {
public:
  RingHom() = default; // empty placeholder; only assigned-over, never applied
  RingHom(Ring source, Ring target, std::vector<Vec> images);
  static RingHom identity(Ring r);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<Vec>& images() const { return images_; }

  Vec apply(const Vec& v) const;
  RingElement operator()(const RingElement& x) const;

  HomFlags validate() const;
  AdditiveSubgroup image_subgroup() const;
  AdditiveSubgroup preimage(const AdditiveSubgroup& h) const; // by source enumeration

  RingHom compose_after(const RingHom& first) const; // this(first(x))
  RingHom inverse() const;                           // requires isomorphism

private:
  Ring source_, target_;
  std::vector<Vec> images_;
};

// R/I together with the projection and an explicit lift of representatives.
struct Quotient {
  Ring ring;
  RingHom proj;
  Vec lift(const Vec& q) const;

  // internals of the Smith-form coordinate change
  Ring src;
  Mat u, u_inv;
  std::vector<size_t> kept;
  Vec kept_moduli;
};

Quotient quotient(const Ring& r, const AdditiveSubgroup& ideal);

struct ProductRing {
  Ring ring;
  std::vector<Ring> factors;
  std::vector<RingHom> injections;
  std::vector<RingHom> projections;
  std::vector<std::pair<size_t, size_t>> blocks; // generator index ranges
};

ProductRing product(const std::vector<Ring>& factors, std::string name = "");

// R x Z/c with unit (0,1); multiplication
// (a,k)*(b,l) = (ab + l*a + k*b, kl). c must be a positive multiple of the
// characteristic (and at least 2), otherwise the result would not even be
// bilinear over the additive presentation.
struct Unitalization {
  Ring ring;
  RingHom embed; // a -> (a, 0); image is a two-sided ideal of index c
  Vec unit;      // (0, 1)
};

Unitalization unitalize(const Ring& r, int64_t c);

// All left/right/two-sided ideals, found by closing upward from {0}.
// Throws budget_exceeded if more than `cap` ideals are visited.
std::vector<AdditiveSubgroup> all_ideals(const Ring& r, Sided sided, size_t cap = 200000);

} // namespace ringlab

#endif
