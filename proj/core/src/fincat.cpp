#include "toposcope/fincat.hpp"

#include <algorithm>
#include <numeric>

namespace toposcope::fincat {

// ---- FinCategory ----

int FinCategory::Builder::add_object(const std::string& name) {
  for (const auto& o : objects_)
    if (o == name) throw WellFormednessError("duplicate object: " + name);
  objects_.push_back(name);
  identity_.push_back(-1);
  return static_cast<int>(objects_.size()) - 1;
}

int FinCategory::Builder::add_arrow(const std::string& name, int src, int tgt) {
  for (const auto& a : arrows_)
    if (a.name == name) throw WellFormednessError("duplicate arrow: " + name);
  arrows_.push_back({name, src, tgt});
  return static_cast<int>(arrows_.size()) - 1;
}

void FinCategory::Builder::set_compose(int after, int before, int result) {
  if (arrows_[before].tgt != arrows_[after].src)
    throw WellFormednessError("composition " + arrows_[after].name + " o " +
                              arrows_[before].name + " is not composable");
  compose_[{after, before}] = result;
}

FinCategory FinCategory::Builder::build() {
  FinCategory c;
  c.objects_ = objects_;
  c.arrows_ = arrows_;
  c.identity_.assign(objects_.size(), -1);
  // append identities
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    c.identity_[o] = static_cast<int>(c.arrows_.size());
    c.arrows_.push_back({"id_" + objects_[o], static_cast<int>(o), static_cast<int>(o)});
  }
  c.comp_.assign(c.arrows_.size(), {});
  for (std::size_t g = 0; g < c.arrows_.size(); ++g) {
    for (std::size_t f = 0; f < c.arrows_.size(); ++f) {
      if (c.arrows_[f].tgt != c.arrows_[g].src) continue;
      int result;
      if (c.is_identity(static_cast<int>(g))) result = static_cast<int>(f);
      else if (c.is_identity(static_cast<int>(f))) result = static_cast<int>(g);
      else {
        auto it = compose_.find({static_cast<int>(g), static_cast<int>(f)});
        if (it == compose_.end())
          throw WellFormednessError("missing composite " + c.arrows_[g].name + " o " +
                                    c.arrows_[f].name);
        result = it->second;
      }
      c.comp_[g][static_cast<int>(f)] = result;
    }
  }
  c.into_.assign(c.objects_.size(), {});
  for (std::size_t f = 0; f < c.arrows_.size(); ++f)
    c.into_[c.arrows_[f].tgt].push_back(static_cast<int>(f));
  c.verify();
  return c;
}

int FinCategory::compose(int after, int before) const {
  auto it = comp_[after].find(before);
  if (it == comp_[after].end())
    throw WellFormednessError("arrows not composable: " + arrows_[after].name + " o " +
                              arrows_[before].name);
  return it->second;
}

int FinCategory::local_index(int c, int arrow) const {
  const auto& in = into_[c];
  auto it = std::lower_bound(in.begin(), in.end(), arrow);
  if (it == in.end() || *it != arrow)
    throw WellFormednessError("arrow does not land in object " + objects_[c]);
  return static_cast<int>(it - in.begin());
}

int FinCategory::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return -1;
}

int FinCategory::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  return -1;
}

void FinCategory::verify() const {
  for (std::size_t f = 0; f < arrows_.size(); ++f) {
    const auto& a = arrows_[f];
    if (a.src < 0 || a.src >= static_cast<int>(objects_.size()) || a.tgt < 0 ||
        a.tgt >= static_cast<int>(objects_.size()))
      throw WellFormednessError("arrow " + a.name + " has bad endpoints");
  }
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    int id = identity_[o];
    if (arrows_[id].src != static_cast<int>(o) || arrows_[id].tgt != static_cast<int>(o))
      throw WellFormednessError("identity of " + objects_[o] + " has bad endpoints");
  }
  // typing, identity laws, associativity over composable pairs/triples
  for (std::size_t g = 0; g < arrows_.size(); ++g) {
    for (const auto& [f, gf] : comp_[g]) {
      if (arrows_[gf].src != arrows_[f].src || arrows_[gf].tgt != arrows_[g].tgt)
        throw WellFormednessError("composite " + arrows_[gf].name + " has bad endpoints");
      if (is_identity(static_cast<int>(g)) && gf != f)
        throw WellFormednessError("left identity law fails at " + arrows_[f].name);
      if (is_identity(f) && gf != static_cast<int>(g))
        throw WellFormednessError("right identity law fails at " + arrows_[g].name);
    }
  }
  for (std::size_t h = 0; h < arrows_.size(); ++h)
    for (const auto& [g, hg] : comp_[h])
      for (const auto& [f, gf] : comp_[g])
        if (compose(static_cast<int>(h), gf) != compose(hg, f))
          throw WellFormednessError("associativity fails at " + arrows_[h].name + " o " +
                                    arrows_[g].name + " o " + arrows_[f].name);
}

FinCategory FinCategory::discrete(std::size_t n) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object("X" + std::to_string(i));
  return b.build();
}

FinCategory FinCategory::from_monoid(const std::vector<std::vector<int>>& table,
                                     const std::vector<std::string>& names) {
  const std::size_t n = table.size();
  if (n == 0 || names.size() != n) throw WellFormednessError("bad monoid data");
  for (std::size_t i = 0; i < n; ++i)
    if (table[0][i] != static_cast<int>(i) || table[i][0] != static_cast<int>(i))
      throw WellFormednessError("element 0 is not a unit");
  Builder b;
  b.add_object("X");
  // element 0 becomes the identity arrow, appended by build() after the
  // n - 1 explicit arrows
  std::vector<int> arrow_of(n);
  for (std::size_t i = 1; i < n; ++i) arrow_of[i] = b.add_arrow(names[i], 0, 0);
  int id_arrow = static_cast<int>(n) - 1;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      int k = table[i][j];
      b.set_compose(arrow_of[i], arrow_of[j],
                    k == 0 ? id_arrow : arrow_of[k]);
    }
  return b.build();
}

FinCategory FinCategory::walking_idempotent() {
  return from_monoid({{0, 1}, {1, 1}}, {"1", "e"});
}

FinCategory FinCategory::cyclic_group(std::size_t n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "g" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<int>((i + j) % n);
  }
  return from_monoid(table, names);
}

FinCategory FinCategory::from_poset(const algebra::FinPoset& p) {
  FinCategory c;
  const std::size_t n = p.size();
  c.objects_.resize(n);
  c.identity_.assign(n, -1);
  std::vector<std::vector<int>> arrow_id(n, std::vector<int>(n, -1));
  for (std::size_t b = 0; b < n; ++b) c.objects_[b] = "a" + std::to_string(b);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (p.le(static_cast<int>(a), static_cast<int>(b))) {
        arrow_id[a][b] = static_cast<int>(c.arrows_.size());
        c.arrows_.push_back({"le_" + std::to_string(a) + "_" + std::to_string(b),
                             static_cast<int>(a), static_cast<int>(b)});
        if (a == b) c.identity_[a] = arrow_id[a][b];
      }
  c.comp_.assign(c.arrows_.size(), {});
  for (std::size_t g = 0; g < c.arrows_.size(); ++g)
    for (std::size_t f = 0; f < c.arrows_.size(); ++f)
      if (c.arrows_[f].tgt == c.arrows_[g].src)
        c.comp_[g][static_cast<int>(f)] = arrow_id[c.arrows_[f].src][c.arrows_[g].tgt];
  c.into_.assign(n, {});
  for (std::size_t f = 0; f < c.arrows_.size(); ++f)
    c.into_[c.arrows_[f].tgt].push_back(static_cast<int>(f));
  c.verify();
  return c;
}

// ---- sieves ----

bool Sieve::contains_arrow(const FinCategory& c, int arrow) const {
  return members.test(c.local_index(target, arrow));
}

bool is_sieve(const FinCategory& c, const Sieve& s) {
  const auto& in = c.arrows_into(s.target);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!s.members.test(i)) continue;
    int f = in[i];
    for (int g : c.arrows_into(c.arrow(f).src)) {
      int fg = c.compose(f, g);
      if (!s.members.test(c.local_index(s.target, fg))) return false;
    }
  }
  return true;
}

Sieve maximal_sieve(const FinCategory& c, int target) {
  return {target, Bits(c.arrows_into(target).size(), true)};
}

Sieve empty_sieve(const FinCategory& c, int target) {
  return {target, Bits(c.arrows_into(target).size())};
}

Sieve generated_sieve(const FinCategory& c, int target, const std::vector<int>& arrows) {
  Sieve s = empty_sieve(c, target);
  for (int f : arrows) {
    s.members.set(c.local_index(target, f));
    for (int g : c.arrows_into(c.arrow(f).src))
      s.members.set(c.local_index(target, c.compose(f, g)));
  }
  return s;
}

Sieve pullback_sieve(const FinCategory& c, int f, const Sieve& s) {
  int d = c.arrow(f).src;
  Sieve out = empty_sieve(c, d);
  const auto& in = c.arrows_into(d);
  for (std::size_t i = 0; i < in.size(); ++i)
    if (s.members.test(c.local_index(s.target, c.compose(f, in[i])))) out.members.set(i);
  return out;
}

bool is_dense(const FinCategory& c, const Sieve& s) {
  for (int f : c.arrows_into(s.target)) {
    bool factors = false;
    for (int g : c.arrows_into(c.arrow(f).src)) {
      if (s.members.test(c.local_index(s.target, c.compose(f, g)))) {
        factors = true;
        break;
      }
    }
    if (!factors) return false;
  }
  return true;
}

std::string to_text(const FinCategory& c, const Sieve& s) {
  std::string out = "{";
  bool first = true;
  const auto& in = c.arrows_into(s.target);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!s.members.test(i)) continue;
    if (!first) out += ", ";
    out += c.arrow(in[i]).name;
    first = false;
  }
  return out + "}";
}

namespace {

std::vector<Sieve> all_sieves(const FinCategory& c, int target, std::size_t guard) {
  const std::size_t deg = c.arrows_into(target).size();
  if (deg > 20 || (std::size_t{1} << deg) > guard)
    throw ResourceError("sieve enumeration guard exceeded on object " + c.object_name(target));
  std::vector<Sieve> out;
  for (std::uint32_t mask = 0; mask < (1u << deg); ++mask) {
    Sieve s{target, Bits(deg)};
    for (std::size_t i = 0; i < deg; ++i)
      if ((mask >> i) & 1) s.members.set(i);
    if (is_sieve(c, s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

// ---- topologies ----

Topology Topology::from_predicate(const FinCategory& c,
                                  const std::function<bool(const Sieve&)>& covers,
                                  std::size_t max_sieves_per_object) {
  Topology j;
  j.cat_ = &c;
  j.covering_.resize(c.num_objects());
  for (std::size_t obj = 0; obj < c.num_objects(); ++obj)
    for (auto& s : all_sieves(c, static_cast<int>(obj), max_sieves_per_object))
      if (covers(s)) j.covering_[obj].push_back(std::move(s));
  j.verify(c);
  return j;
}

bool Topology::covers(const Sieve& s) const {
  const auto& family = covering_[s.target];
  return std::find(family.begin(), family.end(), s) != family.end();
}

void Topology::verify(const FinCategory& c) const {
  for (std::size_t obj = 0; obj < c.num_objects(); ++obj) {
    int target = static_cast<int>(obj);
    if (!covers(maximal_sieve(c, target)))
      throw AlgebraError("topology misses the maximal sieve on " + c.object_name(target));
    for (const auto& s : covering_[obj]) {
      if (!is_sieve(c, s)) throw AlgebraError("covering family contains a non-sieve");
      for (int f : c.arrows_into(target))
        if (!covers(pullback_sieve(c, f, s)))
          throw AlgebraError("topology not pullback-stable on " + c.object_name(target));
    }
    // transitivity: any sieve whose pullbacks along a covering sieve all
    // cover must itself cover
    auto sieves = all_sieves(c, target, std::size_t{1} << 20);
    for (const auto& s : covering_[obj]) {
      for (const auto& r : sieves) {
        if (covers(r)) continue;
        bool locally_covering = true;
        const auto& in = c.arrows_into(target);
        for (std::size_t i = 0; i < in.size() && locally_covering; ++i)
          if (s.members.test(i) && !covers(pullback_sieve(c, in[i], r)))
            locally_covering = false;
        if (locally_covering)
          throw AlgebraError("topology not transitive on " + c.object_name(target));
      }
    }
  }
}

Topology negneg_topology(const FinCategory& c) {
  return Topology::from_predicate(c, [&](const Sieve& s) { return is_dense(c, s); });
}

Topology jkappa_topology(const FinCategory& c, const algebra::FinHeyting& l) {
  if (c.num_objects() != l.size())
    throw WellFormednessError("jkappa_topology: category does not match the lattice");
  return Topology::from_predicate(c, [&](const Sieve& s) {
    int join = l.bot();
    const auto& in = c.arrows_into(s.target);
    for (std::size_t i = 0; i < in.size(); ++i)
      if (s.members.test(i)) join = l.join(join, c.arrow(in[i]).src);
    return join == s.target;
  });
}

Topology trivial_topology(const FinCategory& c) {
  return Topology::from_predicate(
      c, [&](const Sieve& s) { return s == maximal_sieve(c, s.target); });
}

// ---- presheaves ----

std::size_t Presheaf::total_elements() const {
  std::size_t n = 0;
  for (const auto& e : elems) n += e.size();
  return n;
}

void Presheaf::validate() const {
  const FinCategory& c = *cat;
  if (elems.size() != c.num_objects() || action.size() != c.num_arrows())
    throw WellFormednessError("presheaf tables have wrong shape");
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    if (action[f].size() != elems[a.tgt].size())
      throw WellFormednessError("action of " + a.name + " has wrong domain");
    for (int v : action[f])
      if (v < 0 || v >= static_cast<int>(elems[a.src].size()))
        throw WellFormednessError("action of " + a.name + " escapes the carrier");
  }
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    int id = c.identity(static_cast<int>(o));
    for (std::size_t x = 0; x < elems[o].size(); ++x)
      if (action[id][x] != static_cast<int>(x))
        throw WellFormednessError("identity of " + c.object_name(static_cast<int>(o)) +
                                  " does not act as the identity");
  }
  // contravariance: X(f o g) = X(g) o X(f)
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& af = c.arrow(static_cast<int>(f));
    for (int g : c.arrows_into(af.src)) {
      int fg = c.compose(static_cast<int>(f), g);
      for (std::size_t x = 0; x < elems[af.tgt].size(); ++x)
        if (action[fg][x] != action[g][action[f][x]])
          throw WellFormednessError("presheaf is not functorial at " + af.name + " o " +
                                    c.arrow(g).name);
    }
  }
}

Presheaf Presheaf::representable(const FinCategory& c, int obj) {
  Presheaf x;
  x.cat = &c;
  x.elems.resize(c.num_objects());
  // element d-index -> position of the arrow d -> obj
  std::vector<std::vector<int>> arrows_at(c.num_objects());
  for (int f : c.arrows_into(obj)) {
    x.elems[c.arrow(f).src].push_back(c.arrow(f).name);
    arrows_at[c.arrow(f).src].push_back(f);
  }
  x.action.resize(c.num_arrows());
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    x.action[f].resize(x.elems[a.tgt].size());
    for (std::size_t i = 0; i < arrows_at[a.tgt].size(); ++i) {
      int composed = c.compose(arrows_at[a.tgt][i], static_cast<int>(f));
      const auto& column = arrows_at[a.src];
      x.action[f][i] = static_cast<int>(
          std::find(column.begin(), column.end(), composed) - column.begin());
    }
  }
  x.validate();
  return x;
}

Presheaf Presheaf::terminal(const FinCategory& c) { return constant(c, 1); }
Presheaf Presheaf::empty(const FinCategory& c) { return constant(c, 0); }

Presheaf Presheaf::constant(const FinCategory& c, std::size_t k) {
  Presheaf x;
  x.cat = &c;
  x.elems.resize(c.num_objects());
  for (auto& e : x.elems)
    for (std::size_t i = 0; i < k; ++i) e.push_back("*" + std::to_string(i));
  x.action.resize(c.num_arrows());
  for (auto& act : x.action) {
    act.resize(k);
    std::iota(act.begin(), act.end(), 0);
  }
  x.validate();
  return x;
}

bool isomorphic(const Presheaf& x, const Presheaf& y) {
  if (x.cat != y.cat) return false;
  for (std::size_t o = 0; o < x.elems.size(); ++o)
    if (x.carrier(static_cast<int>(o)) != y.carrier(static_cast<int>(o))) return false;
  for (const auto& h : enumerate_nat_trans(x, y)) {
    bool bijective = true;
    for (std::size_t o = 0; o < x.elems.size() && bijective; ++o) {
      std::vector<bool> hit(y.carrier(static_cast<int>(o)), false);
      for (int v : h.component[o]) {
        if (hit[v]) bijective = false;
        hit[v] = true;
      }
    }
    if (bijective) return true;
  }
  return false;
}

// ---- subpresheaves ----

bool Subpresheaf::le(const Subpresheaf& other) const {
  for (std::size_t o = 0; o < sets.size(); ++o)
    if (!sets[o].subset_of(other.sets[o])) return false;
  return true;
}

void Subpresheaf::validate() const {
  const Presheaf& x = *parent;
  const FinCategory& c = *x.cat;
  if (sets.size() != c.num_objects()) throw WellFormednessError("subpresheaf has wrong shape");
  for (std::size_t o = 0; o < sets.size(); ++o)
    if (sets[o].size() != x.carrier(static_cast<int>(o)))
      throw WellFormednessError("subpresheaf carrier mismatch");
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    for (std::size_t e = 0; e < x.carrier(a.tgt); ++e)
      if (sets[a.tgt].test(e) && !sets[a.src].test(x.act(static_cast<int>(f), static_cast<int>(e))))
        throw WellFormednessError("subpresheaf not closed under " + a.name);
  }
}

Subpresheaf Subpresheaf::full(const Presheaf& x) {
  Subpresheaf s;
  s.parent = &x;
  for (std::size_t o = 0; o < x.elems.size(); ++o)
    s.sets.emplace_back(x.carrier(static_cast<int>(o)), true);
  return s;
}

Subpresheaf Subpresheaf::none(const Presheaf& x) {
  Subpresheaf s;
  s.parent = &x;
  for (std::size_t o = 0; o < x.elems.size(); ++o)
    s.sets.emplace_back(x.carrier(static_cast<int>(o)));
  return s;
}

Subpresheaf intersect(const Subpresheaf& a, const Subpresheaf& b) {
  if (a.parent != b.parent) throw WellFormednessError("subpresheaves of different parents");
  Subpresheaf out = a;
  for (std::size_t o = 0; o < out.sets.size(); ++o) out.sets[o] &= b.sets[o];
  return out;
}

Subpresheaf unite(const Subpresheaf& a, const Subpresheaf& b) {
  if (a.parent != b.parent) throw WellFormednessError("subpresheaves of different parents");
  Subpresheaf out = a;
  for (std::size_t o = 0; o < out.sets.size(); ++o) out.sets[o] |= b.sets[o];
  return out;
}

Subpresheaf heyting_implication(const Subpresheaf& a, const Subpresheaf& b) {
  if (a.parent != b.parent) throw WellFormednessError("subpresheaves of different parents");
  const Presheaf& x = *a.parent;
  const FinCategory& c = *x.cat;
  Subpresheaf out = Subpresheaf::none(x);
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    for (std::size_t e = 0; e < x.carrier(static_cast<int>(o)); ++e) {
      bool ok = true;
      for (int f : c.arrows_into(static_cast<int>(o))) {
        int moved = x.act(f, static_cast<int>(e));
        if (a.contains(c.arrow(f).src, moved) && !b.contains(c.arrow(f).src, moved)) {
          ok = false;
          break;
        }
      }
      if (ok) out.sets[o].set(e);
    }
  }
  out.validate();
  return out;
}

// ---- natural transformations ----

void NatTrans::validate() const {
  const FinCategory& c = *src->cat;
  if (dst->cat != &c) throw WellFormednessError("natural transformation across categories");
  if (component.size() != c.num_objects())
    throw WellFormednessError("natural transformation has wrong shape");
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    if (component[o].size() != src->carrier(static_cast<int>(o)))
      throw WellFormednessError("component at " + c.object_name(static_cast<int>(o)) +
                                " has wrong domain");
    for (int v : component[o])
      if (v < 0 || v >= static_cast<int>(dst->carrier(static_cast<int>(o))))
        throw WellFormednessError("component escapes the codomain");
  }
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    for (std::size_t e = 0; e < src->carrier(a.tgt); ++e) {
      int via_src = component[a.src][src->act(static_cast<int>(f), static_cast<int>(e))];
      int via_dst = dst->act(static_cast<int>(f), component[a.tgt][e]);
      if (via_src != via_dst)
        throw WellFormednessError("naturality fails at " + a.name);
    }
  }
}

NatTrans NatTrans::identity(const Presheaf& x) {
  NatTrans h;
  h.src = &x;
  h.dst = &x;
  h.component.resize(x.elems.size());
  for (std::size_t o = 0; o < x.elems.size(); ++o) {
    h.component[o].resize(x.carrier(static_cast<int>(o)));
    std::iota(h.component[o].begin(), h.component[o].end(), 0);
  }
  return h;
}

std::vector<NatTrans> enumerate_nat_trans(const Presheaf& x, const Presheaf& y,
                                          std::uint64_t guard) {
  const FinCategory& c = *x.cat;
  std::uint64_t space = 1;
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    std::size_t dom = x.carrier(static_cast<int>(o));
    std::size_t cod = y.carrier(static_cast<int>(o));
    if (dom > 0 && cod == 0) return {};
    for (std::size_t i = 0; i < dom; ++i) {
      if (space > guard / std::max<std::size_t>(cod, 1))
        throw ResourceError("enumerate_nat_trans: space exceeds guard");
      space *= cod;
    }
  }

  std::vector<NatTrans> out;
  NatTrans h;
  h.src = &x;
  h.dst = &y;
  h.component.resize(c.num_objects());
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    h.component[o].assign(x.carrier(static_cast<int>(o)), 0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t o, std::size_t e) {
    if (o == c.num_objects()) {
      try {
        h.validate();
      } catch (const WellFormednessError&) {
        return;
      }
      out.push_back(h);
      return;
    }
    if (e == x.carrier(static_cast<int>(o))) {
      rec(o + 1, 0);
      return;
    }
    for (std::size_t v = 0; v < y.carrier(static_cast<int>(o)); ++v) {
      h.component[o][e] = static_cast<int>(v);
      rec(o, e + 1);
    }
  };
  rec(0, 0);
  return out;
}

Subpresheaf pullback(const NatTrans& h, const Subpresheaf& b) {
  if (b.parent != h.dst) throw WellFormednessError("pullback: subobject of the wrong presheaf");
  Subpresheaf out = Subpresheaf::none(*h.src);
  for (std::size_t o = 0; o < out.sets.size(); ++o)
    for (std::size_t e = 0; e < h.src->carrier(static_cast<int>(o)); ++e)
      if (b.contains(static_cast<int>(o), h.component[o][e])) out.sets[o].set(e);
  out.validate();
  return out;
}

Subpresheaf exists_along(const NatTrans& h, const Subpresheaf& a) {
  if (a.parent != h.src) throw WellFormednessError("exists_along: wrong parent");
  h.validate();
  Subpresheaf out = Subpresheaf::none(*h.dst);
  for (std::size_t o = 0; o < out.sets.size(); ++o)
    for (std::size_t e = 0; e < h.src->carrier(static_cast<int>(o)); ++e)
      if (a.contains(static_cast<int>(o), static_cast<int>(e)))
        out.sets[o].set(h.component[o][e]);
  out.validate();
  return out;
}

Subpresheaf forall_along(const NatTrans& h, const Subpresheaf& a) {
  if (a.parent != h.src) throw WellFormednessError("forall_along: wrong parent");
  h.validate();
  const FinCategory& c = *h.src->cat;
  const Presheaf& y = *h.dst;
  Subpresheaf out = Subpresheaf::none(y);
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    for (std::size_t e = 0; e < y.carrier(static_cast<int>(o)); ++e) {
      bool ok = true;
      for (int f : c.arrows_into(static_cast<int>(o))) {
        int d = c.arrow(f).src;
        int moved = y.act(f, static_cast<int>(e));
        for (std::size_t x = 0; x < h.src->carrier(d) && ok; ++x)
          if (h.component[d][x] == moved && !a.contains(d, static_cast<int>(x))) ok = false;
        if (!ok) break;
      }
      if (ok) out.sets[o].set(e);
    }
  }
  out.validate();
  return out;
}

// ---- products ----

ProductPresheaf product(const FinCategory& c, const std::vector<const Presheaf*>& factors) {
  ProductPresheaf out;
  out.factors = factors;
  out.presheaf.cat = &c;
  out.presheaf.elems.resize(c.num_objects());

  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    std::size_t total = 1;
    for (const auto* f : factors) total *= f->carrier(static_cast<int>(o));
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::string name = "(";
      std::size_t rest = idx;
      // row-major: the last factor varies fastest
      std::vector<std::size_t> sizes;
      for (const auto* f : factors) sizes.push_back(f->carrier(static_cast<int>(o)));
      std::vector<std::size_t> parts(factors.size());
      for (std::size_t k = factors.size(); k-- > 0;) {
        parts[k] = rest % sizes[k];
        rest /= sizes[k];
      }
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) name += ",";
        name += factors[k]->elems[o][parts[k]];
      }
      out.presheaf.elems[o].push_back(name + ")");
    }
  }
  out.presheaf.action.resize(c.num_arrows());
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    std::vector<std::size_t> src_sizes, tgt_sizes;
    for (const auto* p : factors) {
      src_sizes.push_back(p->carrier(a.src));
      tgt_sizes.push_back(p->carrier(a.tgt));
    }
    std::size_t total = out.presheaf.elems[a.tgt].size();
    out.presheaf.action[f].resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx, moved = 0;
      std::vector<std::size_t> parts(factors.size());
      for (std::size_t k = factors.size(); k-- > 0;) {
        parts[k] = rest % tgt_sizes[k];
        rest /= tgt_sizes[k];
      }
      for (std::size_t k = 0; k < factors.size(); ++k) {
        moved = moved * src_sizes[k] +
                static_cast<std::size_t>(factors[k]->act(static_cast<int>(f),
                                                         static_cast<int>(parts[k])));
      }
      out.presheaf.action[f][idx] = static_cast<int>(moved);
    }
  }
  out.presheaf.validate();
  return out;
}

int ProductPresheaf::encode(int c, const std::vector<int>& tuple) const {
  if (tuple.size() != factors.size())
    throw WellFormednessError("product tuple has wrong rank");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors.size(); ++k)
    idx = idx * factors[k]->carrier(c) + static_cast<std::size_t>(tuple[k]);
  return static_cast<int>(idx);
}

std::vector<int> ProductPresheaf::decode(int c, int idx) const {
  std::vector<std::size_t> sizes;
  for (const auto* f : factors) sizes.push_back(f->carrier(c));
  std::vector<int> parts(factors.size());
  std::size_t rest = static_cast<std::size_t>(idx);
  for (std::size_t k = factors.size(); k-- > 0;) {
    parts[k] = static_cast<int>(rest % sizes[k]);
    rest /= sizes[k];
  }
  return parts;
}

NatTrans ProductPresheaf::projection(std::size_t k) const {
  NatTrans h;
  h.src = &presheaf;
  h.dst = factors[k];
  h.component.resize(presheaf.elems.size());
  for (std::size_t o = 0; o < presheaf.elems.size(); ++o) {
    h.component[o].resize(presheaf.carrier(static_cast<int>(o)));
    for (std::size_t idx = 0; idx < h.component[o].size(); ++idx)
      h.component[o][idx] = decode(static_cast<int>(o), static_cast<int>(idx))[k];
  }
  h.validate();
  return h;
}

// ---- subobject lattice ----

SubobjectLattice subobject_lattice(const Presheaf& x, std::size_t guard) {
  const FinCategory& c = *x.cat;
  const std::size_t total = x.total_elements();
  if (total > 20 || (std::size_t{1} << total) > guard)
    throw ResourceError("subobject_lattice: carrier too large");

  // global element ids: (object, element) flattened in object order
  std::vector<std::pair<int, int>> flat;
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    for (std::size_t e = 0; e < x.carrier(static_cast<int>(o)); ++e)
      flat.emplace_back(static_cast<int>(o), static_cast<int>(e));

  SubobjectLattice out;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    Subpresheaf s = Subpresheaf::none(x);
    for (std::size_t i = 0; i < total; ++i)
      if ((mask >> i) & 1) s.sets[flat[i].first].set(flat[i].second);
    bool closed = true;
    for (std::size_t f = 0; f < c.num_arrows() && closed; ++f) {
      const auto& a = c.arrow(static_cast<int>(f));
      for (std::size_t e = 0; e < x.carrier(a.tgt) && closed; ++e)
        if (s.sets[a.tgt].test(e) &&
            !s.sets[a.src].test(x.act(static_cast<int>(f), static_cast<int>(e))))
          closed = false;
    }
    if (closed) out.elements.push_back(std::move(s));
  }

  out.algebra = algebra::FinHeyting::from_poset(algebra::FinPoset(
      out.elements.size(),
      [&](int a, int b) { return out.elements[a].le(out.elements[b]); }));
  return out;
}

int SubobjectLattice::index_of(const Subpresheaf& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == s) return static_cast<int>(i);
  throw WellFormednessError("subpresheaf missing from the lattice");
}

// ---- closed sieves ----

Sieve close_sieve(const FinCategory& c, const Topology& j, const Sieve& s) {
  Sieve current = s;
  while (true) {
    Sieve next = empty_sieve(c, s.target);
    const auto& in = c.arrows_into(s.target);
    for (std::size_t i = 0; i < in.size(); ++i)
      if (j.covers(pullback_sieve(c, in[i], current))) next.members.set(i);
    if (next == current) return current;
    current = next;
  }
}

ClosedSieveLattice closed_sieves(const FinCategory& cat, const Topology& j, int c) {
  ClosedSieveLattice out;
  for (const auto& s : all_sieves(cat, c, std::size_t{1} << 20)) {
    bool closed = true;
    const auto& in = cat.arrows_into(c);
    for (std::size_t i = 0; i < in.size() && closed; ++i)
      if (!s.members.test(i) && j.covers(pullback_sieve(cat, in[i], s))) closed = false;
    if (closed) out.sieves.push_back(s);
  }
  out.algebra = algebra::FinHeyting::from_poset(algebra::FinPoset(
      out.sieves.size(), [&](int a, int b) {
        return out.sieves[a].members.subset_of(out.sieves[b].members);
      }));
  return out;
}

int ClosedSieveLattice::index_of(const Sieve& s) const {
  for (std::size_t i = 0; i < sieves.size(); ++i)
    if (sieves[i] == s) return static_cast<int>(i);
  throw WellFormednessError("sieve missing from the closed-sieve lattice");
}

// ---- Yoneda comparison ----

YonedaReport yoneda_check(const algebra::FinHeyting& l) {
  FinCategory cat = FinCategory::from_poset(l.poset());
  Topology j = jkappa_topology(cat, l);
  YonedaReport report;

  for (std::size_t c = 0; c < cat.num_objects(); ++c) {
    ClosedSieveLattice cs = closed_sieves(cat, j, static_cast<int>(c));
    // a <= c |-> closure of the principal sieve on a
    std::vector<int> image(l.size(), -1);
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (!l.le(static_cast<int>(a), static_cast<int>(c))) continue;
      std::vector<int> gen;
      for (int f : cat.arrows_into(static_cast<int>(c)))
        if (cat.arrow(f).src == static_cast<int>(a)) gen.push_back(f);
      Sieve principal = generated_sieve(cat, static_cast<int>(c), gen);
      image[a] = cs.index_of(close_sieve(cat, j, principal));
    }
    auto fail = [&](const std::string& what) {
      report.preserved = false;
      report.first_violation = what + " at object " + cat.object_name(static_cast<int>(c));
      return report;
    };
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (image[a] < 0) continue;
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (image[b] < 0) continue;
        if (a != b && image[a] == image[b]) return fail("injectivity");
        if (cs.algebra.meet(image[a], image[b]) !=
            image[l.meet(static_cast<int>(a), static_cast<int>(b))])
          return fail("meet preservation");
        if (cs.algebra.join(image[a], image[b]) !=
            image[l.join(static_cast<int>(a), static_cast<int>(b))])
          return fail("join preservation");
        // implication computed inside the slice below c
        int slice_imp = l.meet(l.imp(static_cast<int>(a), static_cast<int>(b)),
                               static_cast<int>(c));
        if (cs.algebra.imp(image[a], image[b]) != image[slice_imp])
          return fail("implication preservation");
      }
    }
  }
  return report;
}

bool is_boolean_site(const FinCategory& cat, const Topology& j) {
  for (std::size_t c = 0; c < cat.num_objects(); ++c)
    if (!closed_sieves(cat, j, static_cast<int>(c)).algebra.is_boolean()) return false;
  return true;
}

// ---- sheafification ----

namespace {

// A matching family for a sieve: element choices at the sources of member
// arrows ([i] = -1 for non-members), compatible with restriction.
struct Family {
  Sieve sieve;
  std::vector<int> choice;
};

std::vector<std::vector<int>> matching_families(const FinCategory& c, const Presheaf& x,
                                                const Sieve& s, std::size_t guard) {
  const auto& in = c.arrows_into(s.target);
  std::vector<std::size_t> member_positions;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!s.members.test(i)) continue;
    member_positions.push_back(i);
    std::size_t k = x.carrier(c.arrow(in[i]).src);
    if (k == 0) return {};
    if (space > guard / k) throw ResourceError("matching-family enumeration guard exceeded");
    space *= k;
  }

  std::vector<std::vector<int>> out;
  std::vector<int> choice(in.size(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t mi) {
    if (mi == member_positions.size()) {
      // compatibility: x_{f o g} = X(g)(x_f)
      for (std::size_t i : member_positions) {
        int f = in[i];
        for (int g : c.arrows_into(c.arrow(f).src)) {
          int fg = c.compose(f, g);
          int pos = c.local_index(s.target, fg);
          if (choice[pos] != x.act(g, choice[i])) return;
        }
      }
      out.push_back(choice);
      return;
    }
    std::size_t i = member_positions[mi];
    for (std::size_t v = 0; v < x.carrier(c.arrow(in[i]).src); ++v) {
      choice[i] = static_cast<int>(v);
      rec(mi + 1);
    }
    choice[i] = -1;
  };
  rec(0);
  return out;
}

bool families_equivalent(const Topology& j, const Family& a, const Family& b) {
  if (a.sieve.target != b.sieve.target) return false;
  for (const auto& w : j.covering(a.sieve.target)) {
    if (!w.members.subset_of(a.sieve.members) || !w.members.subset_of(b.sieve.members))
      continue;
    bool agree = true;
    for (auto i : w.members.members())
      if (a.choice[i] != b.choice[i]) {
        agree = false;
        break;
      }
    if (agree) return true;
  }
  return false;
}

Presheaf plus_construction(const FinCategory& c, const Topology& j, const Presheaf& x,
                           std::size_t guard, std::vector<std::vector<int>>& unit) {
  // classes of (covering sieve, matching family) per object
  std::vector<std::vector<Family>> classes(c.num_objects());
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    for (const auto& s : j.covering(static_cast<int>(o))) {
      for (auto& fam : matching_families(c, x, s, guard)) {
        Family candidate{s, std::move(fam)};
        bool fresh = true;
        for (const auto& rep : classes[o])
          if (families_equivalent(j, candidate, rep)) {
            fresh = false;
            break;
          }
        if (fresh) classes[o].push_back(std::move(candidate));
      }
    }
  }

  Presheaf plus;
  plus.cat = &c;
  plus.elems.resize(c.num_objects());
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    for (std::size_t i = 0; i < classes[o].size(); ++i)
      plus.elems[o].push_back("c" + std::to_string(i));

  auto locate = [&](int obj, const Family& fam) {
    for (std::size_t i = 0; i < classes[obj].size(); ++i)
      if (families_equivalent(j, fam, classes[obj][i])) return static_cast<int>(i);
    throw AlgebraError("plus construction: restricted family escaped its classes");
  };

  plus.action.resize(c.num_arrows());
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    plus.action[f].resize(classes[a.tgt].size());
    for (std::size_t e = 0; e < classes[a.tgt].size(); ++e) {
      const Family& fam = classes[a.tgt][e];
      Family moved;
      moved.sieve = pullback_sieve(c, static_cast<int>(f), fam.sieve);
      moved.choice.assign(c.arrows_into(a.src).size(), -1);
      const auto& in = c.arrows_into(a.src);
      for (std::size_t i = 0; i < in.size(); ++i)
        if (moved.sieve.members.test(i)) {
          int fg = c.compose(static_cast<int>(f), in[i]);
          moved.choice[i] = fam.choice[c.local_index(fam.sieve.target, fg)];
        }
      plus.action[f][e] = locate(a.src, moved);
    }
  }
  plus.validate();

  unit.assign(c.num_objects(), {});
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    unit[o].resize(x.carrier(static_cast<int>(o)));
    for (std::size_t e = 0; e < x.carrier(static_cast<int>(o)); ++e) {
      Family fam;
      fam.sieve = maximal_sieve(c, static_cast<int>(o));
      const auto& in = c.arrows_into(static_cast<int>(o));
      fam.choice.resize(in.size());
      for (std::size_t i = 0; i < in.size(); ++i)
        fam.choice[i] = x.act(in[i], static_cast<int>(e));
      unit[o][e] = locate(static_cast<int>(o), fam);
    }
  }
  return plus;
}

}  // namespace

Sheafification sheafify(const FinCategory& cat, const Topology& j, const Presheaf& x,
                        std::size_t guard) {
  std::vector<std::vector<int>> unit1, unit2;
  Presheaf once = plus_construction(cat, j, x, guard, unit1);
  Presheaf twice = plus_construction(cat, j, once, guard, unit2);

  // sheaf condition: restriction along every covering sieve is a bijection
  // onto matching families
  for (std::size_t o = 0; o < cat.num_objects(); ++o) {
    for (const auto& s : j.covering(static_cast<int>(o))) {
      auto fams = matching_families(cat, twice, s, guard);
      std::vector<bool> hit(fams.size(), false);
      for (std::size_t e = 0; e < twice.carrier(static_cast<int>(o)); ++e) {
        std::vector<int> restricted(cat.arrows_into(static_cast<int>(o)).size(), -1);
        const auto& in = cat.arrows_into(static_cast<int>(o));
        for (std::size_t i = 0; i < in.size(); ++i)
          if (s.members.test(i)) restricted[i] = twice.act(in[i], static_cast<int>(e));
        auto it = std::find(fams.begin(), fams.end(), restricted);
        if (it == fams.end())
          throw AlgebraError("sheafification: restriction escapes matching families");
        std::size_t idx = static_cast<std::size_t>(it - fams.begin());
        if (hit[idx]) throw AlgebraError("sheafification: sheaf condition fails (not monic)");
        hit[idx] = true;
      }
      for (bool h : hit)
        if (!h) throw AlgebraError("sheafification: sheaf condition fails (not epic)");
    }
  }

  Sheafification out;
  out.sheaf = std::move(twice);
  out.unit.resize(cat.num_objects());
  for (std::size_t o = 0; o < cat.num_objects(); ++o) {
    out.unit[o].resize(x.carrier(static_cast<int>(o)));
    for (std::size_t e = 0; e < x.carrier(static_cast<int>(o)); ++e)
      out.unit[o][e] = unit2[o][unit1[o][e]];
  }
  return out;
}

Sheafification sheafify_negneg(const FinCategory& cat, const Presheaf& x, std::size_t guard) {
  return sheafify(cat, negneg_topology(cat), x, guard);
}

// ---- Boolean core ----

BooleanCoreResult boolean_core(const FinCategory& cat) {
  BooleanCoreResult out;
  out.dense_trivial.resize(cat.num_objects());
  for (std::size_t o = 0; o < cat.num_objects(); ++o) {
    bool trivial = true;
    for (const auto& s : all_sieves(cat, static_cast<int>(o), std::size_t{1} << 20)) {
      if (s == maximal_sieve(cat, static_cast<int>(o))) continue;
      if (is_dense(cat, s)) {
        trivial = false;
        break;
      }
    }
    out.dense_trivial[o] = trivial;
  }

  std::vector<bool> in_core = out.dense_trivial;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t f = 0; f < cat.num_arrows(); ++f) {
      const auto& a = cat.arrow(static_cast<int>(f));
      if (in_core[a.tgt] && !in_core[a.src]) {
        in_core[a.tgt] = false;
        changed = true;
      }
    }
  }
  for (std::size_t o = 0; o < cat.num_objects(); ++o)
    if (in_core[o]) out.core.push_back(static_cast<int>(o));
  return out;
}

bool is_two_valued(const FinCategory& cat) {
  return subobject_lattice(Presheaf::terminal(cat)).algebra.size() == 2;
}

}  // namespace toposcope::fincat
