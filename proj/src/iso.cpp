#include "ringlab/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

constexpr uint64_t kSearchOrderCap = FiniteRing::kTableLimit;

// subring closure of a set of element indices, via the op tables
std::vector<uint32_t> closure_indices(const Ring& r, std::vector<uint32_t> seed) {
  const uint32_t n = uint32_t(r->order());
  std::vector<bool> in(n, false);
  std::vector<uint32_t> list;
  auto push = [&](uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  push(0);
  for (uint32_t s : seed) push(s);
  for (size_t i = 0; i < list.size(); ++i) {
    uint32_t a = list[i];
    push(r->neg_idx(a));
    for (size_t j = 0; j <= i; ++j) {
      uint32_t b = list[j];
      push(r->add_idx(a, b));
      push(r->mul_idx(a, b));
      push(r->mul_idx(b, a));
    }
  }
  return list;
}

int64_t index_nilexponent(const Ring& r, uint32_t x) {
  std::set<uint32_t> seen;
  uint32_t p = x;
  int64_t n = 1;
  while (true) {
    if (p == 0) return n;
    if (!seen.insert(p).second) return 0;
    p = r->mul_idx(p, x);
    ++n;
  }
}

} // namespace

std::vector<ElementFingerprint> element_fingerprints(const Ring& r) {
  require(r->order() <= kSearchOrderCap, errc::search_budget_exceeded,
          "ring too large for fingerprinting");
  r->ensure_tables();
  const uint32_t n = uint32_t(r->order());
  std::vector<ElementFingerprint> out(n);
  for (uint32_t x = 0; x < n; ++x) {
    ElementFingerprint& f = out[x];
    f.additive_order = r->additive_order(r->element_at(x));
    f.nilexponent = index_nilexponent(r, x);
    f.idempotent = (r->mul_idx(x, x) == x);
    uint32_t ann = 0, cent = 0;
    for (uint32_t y = 0; y < n; ++y) {
      if (r->mul_idx(x, y) == 0 && r->mul_idx(y, x) == 0) ++ann;
      if (r->mul_idx(x, y) == r->mul_idx(y, x)) ++cent;
    }
    f.annihilator_size = ann;
    f.centralizer_size = cent;
    f.generated_subring_size = uint32_t(closure_indices(r, {x}).size());
  }
  return out;
}

std::vector<uint32_t> ring_generating_set(const Ring& r) {
  require(r->order() <= kSearchOrderCap, errc::search_budget_exceeded,
          "ring too large for generating-set search");
  r->ensure_tables();
  const uint32_t n = uint32_t(r->order());
  std::vector<uint32_t> gens;
  std::vector<uint32_t> covered = closure_indices(r, {});
  while (covered.size() < n) {
    std::vector<bool> in(n, false);
    for (uint32_t x : covered) in[x] = true;
    uint32_t best = 0;
    size_t best_size = 0;
    for (uint32_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      std::vector<uint32_t> trial = gens;
      trial.push_back(x);
      size_t sz = closure_indices(r, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
      if (sz == n) break; // cannot do better
    }
    gens.push_back(best);
    covered = closure_indices(r, gens);
  }
  return gens;
}

namespace {

struct Searcher {
  Ring src, tgt;
  uint32_t n = 0;
  std::vector<ElementFingerprint> src_fp, tgt_fp;
  std::vector<uint32_t> gens;                   // source generator indices
  std::vector<std::vector<uint32_t>> cand;      // candidate target indices per generator
  std::vector<uint32_t> chosen;                 // current images of gens
  uint64_t nodes = 0;
  uint64_t budget = 0;
  bool find_all = false;
  std::vector<RingHom> results;

  // scratch
  std::vector<int64_t> img, pre;
  std::vector<uint32_t> known;

  bool closure() {
    img.assign(n, -1);
    pre.assign(n, -1);
    known.clear();
    auto assign = [&](uint32_t s, uint32_t t) {
      if (img[s] != -1) return img[s] == int64_t(t);
      if (pre[t] != -1) return false;
      if (src_fp[s] != tgt_fp[t]) return false;
      img[s] = t;
      pre[t] = s;
      known.push_back(s);
      return true;
    };
    if (!assign(0, 0)) return false;
    for (size_t g = 0; g < chosen.size(); ++g)
      if (!assign(gens[g], chosen[g])) return false;

    for (size_t i = 0; i < known.size(); ++i) {
      if (++nodes > budget) fail(errc::search_budget_exceeded, "isomorphism search budget");
      uint32_t a = known[i];
      uint32_t fa = uint32_t(img[a]);
      if (!assign(src->neg_idx(a), tgt->neg_idx(fa))) return false;
      for (size_t j = 0; j <= i; ++j) {
        uint32_t b = known[j];
        uint32_t fb = uint32_t(img[b]);
        if (!assign(src->add_idx(a, b), tgt->add_idx(fa, fb))) return false;
        if (!assign(src->mul_idx(a, b), tgt->mul_idx(fa, fb))) return false;
        if (!assign(src->mul_idx(b, a), tgt->mul_idx(fb, fa))) return false;
      }
    }
    return true;
  }

  void emit() {
    require(known.size() == n, errc::internal_check_failed,
            "generating set did not generate the ring");
    std::vector<Vec> images;
    for (size_t i = 0; i < src->rank(); ++i) {
      int64_t t = img[src->index_of(src->gen(i))];
      images.push_back(tgt->element_at(uint64_t(t)));
    }
    RingHom hom(src, tgt, std::move(images));
    HomFlags flags = hom.validate();
    require(flags.isomorphism(), errc::internal_check_failed,
            "search emitted a map that failed certification");
    results.push_back(std::move(hom));
  }

  bool search(size_t depth) {
    if (depth == gens.size()) {
      if (!closure()) return false;
      emit();
      return true;
    }
    bool found = false;
    for (uint32_t c : cand[depth]) {
      chosen.push_back(c);
      if (closure()) {
        if (search(depth + 1)) {
          found = true;
          if (!find_all) {
            chosen.pop_back();
            return true;
          }
        }
      }
      chosen.pop_back();
    }
    return found;
  }
};

// cheap isomorphism invariants checked before any search
bool compatible(const Ring& a, const Ring& b, const std::vector<ElementFingerprint>& fa,
                const std::vector<ElementFingerprint>& fb) {
  if (a->order() != b->order()) return false;
  if (characteristic(a) != characteristic(b)) return false;
  if (a->is_commutative() != b->is_commutative()) return false;
  if (a->is_unital() != b->is_unital()) return false;
  // additive invariant factors
  auto invariants = [](const Ring& r) {
    if (r->rank() == 0) return Vec{};
    Mat diag(r->rank(), Vec(r->rank(), 0));
    for (size_t i = 0; i < r->rank(); ++i) diag[i][i] = r->moduli()[i];
    Vec d = smith_left_transform(diag).diag;
    Vec out;
    for (int64_t x : d)
      if (x > 1) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (invariants(a) != invariants(b)) return false;
  std::vector<ElementFingerprint> sa = fa, sb = fb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

Searcher make_searcher(const Ring& a, const Ring& b, uint64_t budget, bool find_all) {
  require(a->order() <= kSearchOrderCap && b->order() <= kSearchOrderCap,
          errc::search_budget_exceeded, "ring too large for image search");
  a->ensure_tables();
  b->ensure_tables();
  Searcher s;
  s.src = a;
  s.tgt = b;
  s.n = uint32_t(a->order());
  s.src_fp = element_fingerprints(a);
  s.tgt_fp = element_fingerprints(b);
  s.gens = ring_generating_set(a);
  for (uint32_t g : s.gens) {
    std::vector<uint32_t> c;
    for (uint32_t t = 0; t < b->order(); ++t)
      if (s.tgt_fp[t] == s.src_fp[g]) c.push_back(t);
    s.cand.push_back(std::move(c));
  }
  s.budget = budget;
  s.find_all = find_all;
  return s;
}

} // namespace

std::optional<RingHom> find_isomorphism(const Ring& a, const Ring& b, uint64_t node_budget) {
  if (a->order() == 1 && b->order() == 1)
    return RingHom(a, b, std::vector<Vec>(a->rank(), Vec{}));
  {
    // fingerprints require tables, so do the pure-size check first
    if (a->order() != b->order()) return std::nullopt;
  }
  require(a->order() <= kSearchOrderCap, errc::search_budget_exceeded,
          "ring too large for isomorphism search");
  std::vector<ElementFingerprint> fa = element_fingerprints(a);
  std::vector<ElementFingerprint> fb = element_fingerprints(b);
  if (!compatible(a, b, fa, fb)) return std::nullopt;
  Searcher s = make_searcher(a, b, node_budget, false);
  s.search(0);
  if (s.results.empty()) return std::nullopt;
  return s.results.front();
}

std::vector<RingHom> all_automorphisms(const Ring& r, uint64_t node_budget) {
  if (r->order() == 1) return {RingHom::identity(r)};
  Searcher s = make_searcher(r, r, node_budget, true);
  s.search(0);
  require(!s.results.empty(), errc::internal_check_failed,
          "automorphism search lost the identity");
  return std::move(s.results);
}

} // namespace ringlab
