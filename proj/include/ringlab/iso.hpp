#ifndef RINGLAB_ISO_HPP
#define RINGLAB_ISO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Isomorphism-invariant profile of a single element; candidate images in a
// search must match the profile of their preimage.
struct ElementFingerprint {
  int64_t additive_order = 0;
  int64_t nilexponent = 0; // 0 when the element is not nilpotent
  bool idempotent = false;
  uint32_t annihilator_size = 0;
  uint32_t centralizer_size = 0;
  uint32_t generated_subring_size = 0;
  auto operator<=>(const ElementFingerprint&) const = default;
};

std::vector<ElementFingerprint> element_fingerprints(const Ring& r);

// A small ring-generating set (element indices), chosen greedily by
// closure size; deterministic.
std::vector<uint32_t> ring_generating_set(const Ring& r);

// Backtracking over generator images with invariant pruning and deductive
// closure. Throws search_budget_exceeded when the node budget runs out,
// which is distinct from a completed search that found nothing.
std::optional<RingHom> find_isomorphism(const Ring& a, const Ring& b,
                                        uint64_t node_budget = 20'000'000);

// Every automorphism, in a canonical order (lexicographic in the chosen
// generator images). Each returned hom is a certified bijective
// endomorphism.
std::vector<RingHom> all_automorphisms(const Ring& r, uint64_t node_budget = 50'000'000);

} // namespace ringlab

#endif
