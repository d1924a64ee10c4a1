#ifndef RINGLAB_RADICAL_HPP
#define RINGLAB_RADICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Nil/nilpotent/null diagnostics for a ring or an additive subgroup viewed
// as a ring in its own right.
//
//   nilexponent  n: every x has x^n = 0, witnessed by some x with
//                   x^(n-1) != 0 (absent when some element is not nilpotent)
//   class        n: every n-fold product is 0, some (n-1)-fold is not
//   null          : x*y = 0 for all x, y
//
// The order-1 ring counts as null, nil of nilexponent 1 and nilpotent of
// class 1.
struct NilReport {
  bool is_nil = false;
  std::optional<uint64_t> nilexponent;
  bool is_nilpotent = false;
  std::optional<uint64_t> nilpotency_class;
  bool is_null = false;
  std::optional<Vec> witness; // attains the nilexponent, in ambient coordinates
};

NilReport nil_report(const Ring& r);
NilReport nil_report(const AdditiveSubgroup& s);

// Some z with x + z + z*x = 0, if one exists.
std::optional<Vec> quasi_regular_witness(const Ring& r, const Vec& x);

// { x : for all y there is z with yx + z + zyx = 0 }, by exhaustive scan.
// Certified two-sided ideal.
AdditiveSubgroup jacobson_radical(const Ring& r);

bool is_semisimple(const Ring& r);

// The maximal-regular-left-ideal picture of the radical. `core` of a left
// ideal I is the largest two-sided ideal of R contained in I. Intersections
// over the empty family default to the whole ring, which matches radical
// rings where no regular maximal left ideal exists.
struct MaximalLeftAnalysis {
  std::vector<AdditiveSubgroup> maximal_regular_left;
  std::vector<AdditiveSubgroup> cores;
  AdditiveSubgroup ideal_intersection;
  AdditiveSubgroup core_intersection;
};

MaximalLeftAnalysis analyze_maximal_regular_left_ideals(const Ring& r);

// Core m_I of a left ideal, computed by the closed-form membership test
// over the unitalized ring rather than by summing ideals inside I.
AdditiveSubgroup ideal_core(const Ring& r, const AdditiveSubgroup& left_ideal);

// Returns the radical computed from the maximal-regular-left-ideal family
// after asserting that both intersections and the quasi-regularity radical
// agree.
AdditiveSubgroup jacobson_radical_via_maximal_ideals(const Ring& r);

// The largest nilpotent two-sided ideal, by exhaustive walk of the ideal
// lattice; asserts it contains every nilpotent ideal found.
AdditiveSubgroup largest_nilpotent_ideal(const Ring& r, size_t cap = 200000);

// For every x in J(R) and a with xa + a = 0, a must be 0.
Verdict check_radical_fixed_points(const Ring& r);

// Ascending chain of two-sided ideals: level(-1) = {0} and
// level(i+1) = { r : IrI / (level(i) meet IrI) is nilpotent }.
// levels[k] stores level(k-1), so levels.size() == depth + 1.
struct NilpotencyTower {
  Ring ring;
  AdditiveSubgroup ideal;
  std::vector<AdditiveSubgroup> levels;
  const AdditiveSubgroup& level(int i) const { return levels[size_t(i + 1)]; }
};

NilpotencyTower nilpotency_tower(const Ring& r, const AdditiveSubgroup& ideal, size_t depth);

// For all k in {0..n-1}, y in I and x in the coset rep+I:
// x^(n-k) * y * x^(n-k) lies in tower level k-1. Requires x^n = 0 on the
// whole coset.
Verdict check_sandwich_descent(const Ring& r, const AdditiveSubgroup& ideal, const Vec& rep,
                               size_t n);

// (i1,...,i2m) * x = i1 x i2 i3 x i4 ... i(2m-1) x i(2m).
Vec alternating_sandwich_product(const Ring& r, const std::vector<Vec>& tuple, const Vec& x);

// Nil rings of nilexponent below a prime characteristic are nilpotent.
enum class ShadowOutcome { pass, counterexample, not_applicable };
struct ShadowVerdict {
  ShadowOutcome outcome;
  std::string detail;
};
ShadowVerdict check_low_exponent_nilpotency(const Ring& r);

} // namespace ringlab

#endif
