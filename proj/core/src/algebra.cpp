#include "toposcope/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace toposcope::algebra {

// ---- FinPoset ----

FinPoset::FinPoset(std::size_t n, const std::function<bool(int, int)>& le) {
  below_.assign(n, Bits(n));
  above_.assign(n, Bits(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (le(static_cast<int>(a), static_cast<int>(b))) {
        below_[b].set(a);
        above_[a].set(b);
      }
  verify();
}

void FinPoset::verify() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!le(static_cast<int>(a), static_cast<int>(a)))
      throw AlgebraError("order not reflexive at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le(static_cast<int>(a), static_cast<int>(b)) &&
          le(static_cast<int>(b), static_cast<int>(a)))
        throw AlgebraError("order not antisymmetric at " + std::to_string(a) + "," +
                           std::to_string(b));
      // transitivity: below(b) must absorb below(a) whenever a <= b
      if (le(static_cast<int>(a), static_cast<int>(b)) && !below_[a].subset_of(below_[b]))
        throw AlgebraError("order not transitive below " + std::to_string(b));
    }
  }
}

std::vector<int> FinPoset::minimal_elements() const {
  std::vector<int> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (below_[a].count() == 1) out.push_back(static_cast<int>(a));
  return out;
}

bool FinPoset::is_downward_closed(const Bits& s) const {
  for (std::size_t a = 0; a < size(); ++a)
    if (s.test(a) && !below_[a].subset_of(s)) return false;
  return true;
}

// ---- FinHeyting ----

FinHeyting FinHeyting::from_poset(const FinPoset& p) {
  FinHeyting h;
  h.poset_ = p;
  const std::size_t n = p.size();
  if (n == 0) throw AlgebraError("empty carrier");
  h.meet_.assign(n * n, 0);
  h.join_.assign(n * n, 0);
  h.imp_.assign(n * n, 0);

  // bottom and top as unique least/greatest elements
  int bot = -1, top = -1;
  for (std::size_t a = 0; a < n; ++a) {
    if (p.above(static_cast<int>(a)).count() == n) bot = static_cast<int>(a);
    if (p.below(static_cast<int>(a)).count() == n) top = static_cast<int>(a);
  }
  if (bot < 0 || top < 0) throw AlgebraError("poset is not bounded");
  h.bot_ = bot;
  h.top_ = top;

  // meets and joins as unique greatest lower / least upper bounds
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto lower = (p.below(static_cast<int>(a)) & p.below(static_cast<int>(b))).members();
      int glb = -1;
      for (auto c : lower)
        if (glb < 0 || p.le(glb, static_cast<int>(c))) glb = static_cast<int>(c);
      if (glb < 0 || !std::all_of(lower.begin(), lower.end(),
                                  [&](std::size_t c) { return p.le(static_cast<int>(c), glb); }))
        throw AlgebraError("meet missing for " + std::to_string(a) + "," + std::to_string(b));
      const auto upper = (p.above(static_cast<int>(a)) & p.above(static_cast<int>(b))).members();
      int lub = -1;
      for (auto c : upper)
        if (lub < 0 || p.le(static_cast<int>(c), lub)) lub = static_cast<int>(c);
      if (lub < 0 || !std::all_of(upper.begin(), upper.end(),
                                  [&](std::size_t c) { return p.le(lub, static_cast<int>(c)); }))
        throw AlgebraError("join missing for " + std::to_string(a) + "," + std::to_string(b));
      h.meet_[h.idx(static_cast<int>(a), static_cast<int>(b))] = static_cast<std::uint16_t>(glb);
      h.meet_[h.idx(static_cast<int>(b), static_cast<int>(a))] = static_cast<std::uint16_t>(glb);
      h.join_[h.idx(static_cast<int>(a), static_cast<int>(b))] = static_cast<std::uint16_t>(lub);
      h.join_[h.idx(static_cast<int>(b), static_cast<int>(a))] = static_cast<std::uint16_t>(lub);
    }
  }

  // implication: largest c with c /\ b <= a'... computed as join of candidates
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      int r = h.bot_;
      for (std::size_t a = 0; a < n; ++a)
        if (p.le(h.meet(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)))
          r = h.join(r, static_cast<int>(a));
      if (!p.le(h.meet(r, static_cast<int>(b)), static_cast<int>(c)))
        throw AlgebraError("no Heyting implication at " + std::to_string(b) + "," +
                           std::to_string(c));
      h.imp_[h.idx(static_cast<int>(b), static_cast<int>(c))] = static_cast<std::uint16_t>(r);
    }
  }

  h.verify_laws();
  return h;
}

void FinHeyting::verify_laws() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (meet(static_cast<int>(a), top_) != static_cast<int>(a) ||
        join(static_cast<int>(a), bot_) != static_cast<int>(a))
      throw AlgebraError("bounds are not neutral");
    for (std::size_t b = 0; b < n; ++b) {
      int m = meet(static_cast<int>(a), static_cast<int>(b));
      int j = join(static_cast<int>(a), static_cast<int>(b));
      if (!le(m, static_cast<int>(a)) || !le(m, static_cast<int>(b)) ||
          !le(static_cast<int>(a), j) || !le(static_cast<int>(b), j))
        throw AlgebraError("meet/join disagree with the order");
      // residuation, exhaustively
      for (std::size_t c = 0; c < n; ++c) {
        bool left = le(meet(static_cast<int>(c), static_cast<int>(a)), static_cast<int>(b));
        bool right = le(static_cast<int>(c), imp(static_cast<int>(a), static_cast<int>(b)));
        if (left != right)
          throw AlgebraError("residuation fails at (" + std::to_string(c) + "," +
                             std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
}

FinHeyting FinHeyting::chain(std::size_t n) {
  return from_poset(FinPoset(n, [](int a, int b) { return a <= b; }));
}

FinHeyting FinHeyting::boolean_powerset(std::size_t k) {
  if (k > 12) throw ResourceError("boolean_powerset: 2^" + std::to_string(k) + " elements");
  const std::size_t n = std::size_t{1} << k;
  FinHeyting h = from_poset(FinPoset(n, [](int a, int b) { return (a & ~b) == 0; }));
  for (std::size_t i = 0; i < k; ++i)
    h.generators_.push_back(1 << i);
  return h;
}

FinHeyting FinHeyting::free_boolean(std::size_t atoms) {
  if (atoms > 3) throw ResourceError("free_boolean: too many generators");
  const std::size_t valuations = std::size_t{1} << atoms;
  FinHeyting h = boolean_powerset(valuations);
  h.generators_.clear();
  for (std::size_t i = 0; i < atoms; ++i) {
    int column = 0;
    for (std::size_t v = 0; v < valuations; ++v)
      if (v & (std::size_t{1} << i)) column |= 1 << v;
    h.generators_.push_back(column);
  }
  return h;
}

FinHeyting FinHeyting::downsets(const FinPoset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw ResourceError("downsets: carrier too large");
  std::vector<std::uint32_t> sets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask & (1u << a))) continue;
      for (std::size_t b = 0; b < n && closed; ++b)
        if (p.le(static_cast<int>(b), static_cast<int>(a)) && !(mask & (1u << b))) closed = false;
    }
    if (closed) sets.push_back(mask);
  }
  return from_poset(FinPoset(sets.size(), [&](int a, int b) {
    return (sets[a] & ~sets[b]) == 0;
  }));
}

int FinHeyting::join_all(const std::vector<int>& xs) const {
  int r = bot_;
  for (int x : xs) r = join(r, x);
  return r;
}

int FinHeyting::meet_all(const std::vector<int>& xs) const {
  int r = top_;
  for (int x : xs) r = meet(r, x);
  return r;
}

bool FinHeyting::is_boolean() const {
  for (std::size_t a = 0; a < size(); ++a) {
    int na = neg(static_cast<int>(a));
    if (join(static_cast<int>(a), na) != top_ || meet(static_cast<int>(a), na) != bot_)
      return false;
  }
  return true;
}

std::vector<int> FinHeyting::join_irreducibles() const {
  std::vector<int> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (static_cast<int>(a) == bot_) continue;
    // count lower covers
    int covers = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !le(static_cast<int>(b), static_cast<int>(a))) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n; ++c)
        if (c != a && c != b && le(static_cast<int>(b), static_cast<int>(c)) &&
            le(static_cast<int>(c), static_cast<int>(a))) {
          covered = false;
          break;
        }
      if (covered) ++covers;
    }
    if (covers == 1) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::string FinHeyting::label(int a) const {
  if (static_cast<std::size_t>(a) < labels.size() && !labels[a].empty()) return labels[a];
  return "e" + std::to_string(a);
}

bool FinHeyting::isomorphic_to(const FinHeyting& other) const {
  const std::size_t n = size();
  if (other.size() != n) return false;

  auto profile = [](const FinHeyting& h, int a) {
    return std::make_pair(h.poset().below(a).count(), h.poset().above(a).count());
  };
  std::vector<int> mine(n), theirs(n);
  std::iota(mine.begin(), mine.end(), 0);
  std::iota(theirs.begin(), theirs.end(), 0);
  auto by_profile = [&](const FinHeyting& h) {
    return [&h, profile](int a, int b) {
      auto pa = profile(h, a), pb = profile(h, b);
      return pa != pb ? pa < pb : a < b;
    };
  };
  std::sort(mine.begin(), mine.end(), by_profile(*this));
  std::sort(theirs.begin(), theirs.end(), by_profile(other));
  for (std::size_t i = 0; i < n; ++i)
    if (profile(*this, mine[i]) != profile(other, theirs[i])) return false;

  // backtracking over profile-compatible assignments
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto compatible = [&](int a, int fa) {
    for (std::size_t b = 0; b < n; ++b) {
      if (image[b] < 0) continue;
      if (le(static_cast<int>(b), a) != other.le(image[b], fa)) return false;
      if (le(a, static_cast<int>(b)) != other.le(fa, image[b])) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (image[meet(static_cast<int>(a), static_cast<int>(b))] !=
              other.meet(image[a], image[b]))
            return false;
          if (image[join(static_cast<int>(a), static_cast<int>(b))] !=
              other.join(image[a], image[b]))
            return false;
          if (image[imp(static_cast<int>(a), static_cast<int>(b))] !=
              other.imp(image[a], image[b]))
            return false;
        }
      return true;
    }
    int a = mine[i];
    for (std::size_t j = 0; j < n; ++j) {
      int fa = theirs[j];
      if (used[j] || profile(*this, a) != profile(other, fa) || !compatible(a, fa)) continue;
      image[a] = fa;
      used[j] = true;
      if (place(i + 1)) return true;
      image[a] = -1;
      used[j] = false;
    }
    return false;
  };
  return place(0);
}

// ---- homs ----

void LatticeHom::validate() const {
  if (!source || !target) throw AlgebraError("hom endpoints missing");
  const std::size_t n = source->size();
  if (map.size() != n) throw AlgebraError("hom carrier map has wrong size");
  if (map[source->bot()] != target->bot() || map[source->top()] != target->top())
    throw AlgebraError("hom does not preserve the bounds");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (map[source->meet(static_cast<int>(a), static_cast<int>(b))] !=
          target->meet(map[a], map[b]))
        throw AlgebraError("hom does not preserve meets");
      if (map[source->join(static_cast<int>(a), static_cast<int>(b))] !=
          target->join(map[a], map[b]))
        throw AlgebraError("hom does not preserve joins");
    }
}

std::vector<LatticeHom> enumerate_homs(const FinHeyting& a, const FinHeyting& b,
                                       std::uint64_t guard) {
  const auto ji = a.join_irreducibles();
  const std::size_t n = a.size(), m = b.size();

  // candidate space estimate
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < ji.size(); ++i) {
    if (space > guard / m) throw ResourceError("enumerate_homs: candidate space exceeds guard");
    space *= m;
  }

  std::vector<LatticeHom> out;
  std::vector<int> assign(ji.size(), 0);
  std::vector<std::vector<int>> seen;

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == ji.size()) {
      // extend by joins of join-irreducibles below each element
      std::vector<int> map(n);
      for (std::size_t x = 0; x < n; ++x) {
        int v = b.bot();
        for (std::size_t k = 0; k < ji.size(); ++k)
          if (a.le(ji[k], static_cast<int>(x))) v = b.join(v, assign[k]);
        map[x] = v;
      }
      if (map[a.top()] != b.top()) return;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (map[a.meet(static_cast<int>(x), static_cast<int>(y))] != b.meet(map[x], map[y]))
            return;
          if (map[a.join(static_cast<int>(x), static_cast<int>(y))] != b.join(map[x], map[y]))
            return;
        }
      if (std::find(seen.begin(), seen.end(), map) == seen.end()) {
        seen.push_back(map);
        out.push_back(LatticeHom{&a, &b, map});
      }
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      bool monotone = true;
      for (std::size_t k = 0; k < i && monotone; ++k) {
        if (a.le(ji[k], ji[i]) && !b.le(assign[k], static_cast<int>(v))) monotone = false;
        if (a.le(ji[i], ji[k]) && !b.le(static_cast<int>(v), assign[k])) monotone = false;
      }
      if (!monotone) continue;
      assign[i] = static_cast<int>(v);
      search(i + 1);
    }
  };
  search(0);
  return out;
}

PreservationVerdict check_heyting_preservation(const LatticeHom& h) {
  h.validate();
  const FinHeyting& a = *h.source;
  const FinHeyting& b = *h.target;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      int lhs = h.map[a.imp(static_cast<int>(x), static_cast<int>(y))];
      int rhs = b.imp(h.map[x], h.map[y]);
      if (lhs != rhs) {
        PreservationVerdict v;
        v.preserved = false;
        v.violation = {static_cast<int>(x), static_cast<int>(y)};
        v.detail = "h(" + a.label(static_cast<int>(x)) + " -> " + a.label(static_cast<int>(y)) +
                   ") = " + b.label(lhs) + " but " + b.label(h.map[x]) + " -> " +
                   b.label(h.map[y]) + " = " + b.label(rhs);
        return v;
      }
    }
  return {};
}

// ---- catalogue ----

namespace {

// All labeled posets on n elements whose order refines the index order,
// generated as strict-below masks with transitivity maintained.
void labeled_posets(std::size_t n, std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> below(n, 0);  // strict predecessors, subsets of {0..i-1}
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(below);
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << i); ++mask) {
      bool transitive = true;
      for (std::size_t j = 0; j < i && transitive; ++j)
        if ((mask >> j) & 1)
          if ((below[j] & ~mask) != 0) transitive = false;
      if (!transitive) continue;
      below[i] = mask;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

const std::vector<FinHeyting>& heyting_catalogue(std::size_t max_size) {
  static std::map<std::size_t, std::vector<FinHeyting>> cache;
  auto it = cache.find(max_size);
  if (it != cache.end()) return it->second;
  if (max_size < 1 || max_size > 8) throw ResourceError("heyting_catalogue: size out of range");

  // Every finite Heyting algebra is the downset lattice of a finite poset
  // (its poset of join-irreducibles); |downsets| > |poset|, so posets with
  // fewer than max_size elements suffice. The 1-element algebra is the
  // downset lattice of the empty poset.
  std::vector<FinHeyting> found;
  found.push_back(FinHeyting::chain(1));
  for (std::size_t n = 1; n + 1 <= max_size; ++n) {
    std::vector<std::vector<std::uint32_t>> posets;
    labeled_posets(n, posets);
    for (const auto& below : posets) {
      FinPoset p(n, [&](int a, int b) {
        return a == b || ((below[b] >> a) & 1);
      });
      FinHeyting h = FinHeyting::downsets(p);
      if (h.size() > max_size) continue;
      bool fresh = true;
      for (const auto& g : found)
        if (g.isomorphic_to(h)) {
          fresh = false;
          break;
        }
      if (fresh) found.push_back(std::move(h));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const FinHeyting& x, const FinHeyting& y) { return x.size() < y.size(); });
  return cache.emplace(max_size, std::move(found)).first->second;
}

}  // namespace toposcope::algebra
