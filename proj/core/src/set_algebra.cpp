// Copyright 2026 The bacore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bacore/set_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bacore {

namespace {

std::vector<int> normalize_base(const PlayerUniverse& u, std::vector<int> base,
                                bool is_excluded) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  for (int i : base) {
    if (i < 1) throw std::invalid_argument("player indices start at 1");
    if (u.is_finite() && i > u.player_count())
      throw std::invalid_argument("player index outside finite universe");
  }
  (void)is_excluded;
  return base;
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> diff_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes_sorted(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_same_universe(const Coalition& s, const Coalition& t) {
  if (!(s.universe() == t.universe()))
    throw std::invalid_argument("coalition universe mismatch");
}

}  // namespace

Coalition Coalition::grand(const PlayerUniverse& u) {
  if (u.is_finite()) {
    std::vector<int> all(static_cast<std::size_t>(u.player_count()));
    for (int i = 0; i < u.player_count(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return Coalition(u, SetKind::Explicit, std::move(all));
  }
  return Coalition(u, SetKind::Cofinite, {});
}

Coalition Coalition::of(const PlayerUniverse& u, std::vector<int> members) {
  return Coalition(u, SetKind::Explicit, normalize_base(u, std::move(members), false));
}

Coalition Coalition::cofinite(const PlayerUniverse& u, std::vector<int> excluded) {
  if (u.is_finite())
    throw std::invalid_argument("cofinite coalitions require the naturals");
  return Coalition(u, SetKind::Cofinite, normalize_base(u, std::move(excluded), true));
}

Coalition Coalition::from_mask(const PlayerUniverse& u, std::uint64_t mask) {
  if (!u.is_finite() || u.player_count() > 64)
    throw std::invalid_argument("from_mask requires a finite universe, n <= 64");
  std::vector<int> members;
  for (int i = 1; i <= u.player_count(); ++i)
    if (mask & (std::uint64_t{1} << (i - 1))) members.push_back(i);
  return Coalition(u, SetKind::Explicit, std::move(members));
}

bool Coalition::contains(int player) const {
  bool in_base = std::binary_search(base_.begin(), base_.end(), player);
  return kind_ == SetKind::Explicit ? in_base : !in_base;
}

bool Coalition::is_empty() const {
  return kind_ == SetKind::Explicit && base_.empty();
}

bool Coalition::is_grand() const {
  if (kind_ == SetKind::Cofinite) return base_.empty();
  return universe_.is_finite() &&
         base_.size() == static_cast<std::size_t>(universe_.player_count());
}

bool Coalition::subset_of(const Coalition& other) const {
  require_same_universe(*this, other);
  if (kind_ == SetKind::Explicit) {
    if (other.kind_ == SetKind::Explicit) return includes_sorted(other.base_, base_);
    // explicit within cofinite: no member may be excluded
    return intersect_sorted(base_, other.base_).empty();
  }
  if (other.kind_ == SetKind::Explicit) return false;  // cofinite never fits in finite
  return includes_sorted(base_, other.base_);
}

bool Coalition::disjoint_with(const Coalition& other) const {
  require_same_universe(*this, other);
  if (kind_ == SetKind::Explicit && other.kind_ == SetKind::Explicit)
    return intersect_sorted(base_, other.base_).empty();
  if (kind_ == SetKind::Cofinite && other.kind_ == SetKind::Cofinite)
    return false;  // two cofinite sets always share a tail
  const Coalition& ex = kind_ == SetKind::Explicit ? *this : other;
  const Coalition& co = kind_ == SetKind::Explicit ? other : *this;
  return includes_sorted(co.base_, ex.base_);
}

std::uint64_t Coalition::mask() const {
  if (kind_ != SetKind::Explicit || !universe_.is_finite() ||
      universe_.player_count() > 64)
    throw std::logic_error("mask requires an explicit coalition, finite n <= 64");
  std::uint64_t m = 0;
  for (int i : base_) m |= std::uint64_t{1} << (i - 1);
  return m;
}

std::string Coalition::to_string() const {
  std::ostringstream os;
  if (kind_ == SetKind::Cofinite) os << "~";
  os << "{";
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (i) os << ",";
    os << base_[i];
  }
  os << "}";
  return os.str();
}

std::strong_ordering operator<=>(const Coalition& a, const Coalition& b) {
  if (a.kind_ != b.kind_)
    return a.kind_ == SetKind::Explicit ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
  if (a.base_.size() != b.base_.size())
    return a.base_.size() < b.base_.size() ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  if (a.base_ < b.base_) return std::strong_ordering::less;
  if (b.base_ < a.base_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Coalition complement(const Coalition& s) {
  const PlayerUniverse& u = s.universe();
  if (u.is_finite()) {
    return Coalition::of(u, diff_sorted(Coalition::grand(u).base(), s.base()));
  }
  return s.kind() == SetKind::Explicit ? Coalition::cofinite(u, s.base())
                                       : Coalition::of(u, s.base());
}

Coalition set_union(const Coalition& s, const Coalition& t) {
  require_same_universe(s, t);
  const PlayerUniverse& u = s.universe();
  if (s.kind() == SetKind::Explicit && t.kind() == SetKind::Explicit)
    return Coalition::of(u, merge_sorted(s.base(), t.base()));
  if (s.kind() == SetKind::Cofinite && t.kind() == SetKind::Cofinite)
    return Coalition::cofinite(u, intersect_sorted(s.base(), t.base()));
  const Coalition& ex = s.kind() == SetKind::Explicit ? s : t;
  const Coalition& co = s.kind() == SetKind::Explicit ? t : s;
  return Coalition::cofinite(u, diff_sorted(co.base(), ex.base()));
}

Coalition set_intersect(const Coalition& s, const Coalition& t) {
  require_same_universe(s, t);
  const PlayerUniverse& u = s.universe();
  if (s.kind() == SetKind::Explicit && t.kind() == SetKind::Explicit)
    return Coalition::of(u, intersect_sorted(s.base(), t.base()));
  if (s.kind() == SetKind::Cofinite && t.kind() == SetKind::Cofinite)
    return Coalition::cofinite(u, merge_sorted(s.base(), t.base()));
  const Coalition& ex = s.kind() == SetKind::Explicit ? s : t;
  const Coalition& co = s.kind() == SetKind::Explicit ? t : s;
  return Coalition::of(u, diff_sorted(ex.base(), co.base()));
}

SetFamily SetFamily::of(const PlayerUniverse& u, std::vector<Coalition> sets) {
  for (const Coalition& s : sets)
    if (!(s.universe() == u)) throw std::invalid_argument("family universe mismatch");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return SetFamily{u, std::move(sets)};
}

bool SetFamily::contains(const Coalition& s) const {
  return std::binary_search(sets.begin(), sets.end(), s);
}

bool is_field(const SetFamily& family) {
  if (!family.contains(Coalition::empty(family.universe))) return false;
  for (const Coalition& s : family.sets)
    if (!family.contains(complement(s))) return false;
  for (std::size_t i = 0; i < family.sets.size(); ++i)
    for (std::size_t j = i + 1; j < family.sets.size(); ++j)
      if (!family.contains(set_union(family.sets[i], family.sets[j]))) return false;
  return true;
}

std::vector<Region> regions(const SetFamily& family) {
  const PlayerUniverse& u = family.universe;
  const std::size_t r = family.sets.size();
  std::vector<Region> out;

  // Probe set: every player any generator mentions. Players outside it all
  // share one signature (the tail); over the naturals that region is cofinite.
  std::vector<int> probe;
  for (const Coalition& s : family.sets)
    probe.insert(probe.end(), s.base().begin(), s.base().end());
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());

  auto signature_of = [&](int player) {
    std::vector<bool> sig(r);
    for (std::size_t p = 0; p < r; ++p) sig[p] = family.sets[p].contains(player);
    return sig;
  };

  std::map<std::vector<bool>, std::vector<int>> groups;
  if (u.is_finite()) {
    for (int i = 1; i <= u.player_count(); ++i) groups[signature_of(i)].push_back(i);
    for (auto& [sig, players] : groups)
      out.push_back(Region{Coalition::of(u, players), sig});
  } else {
    std::vector<bool> tail_sig(r);
    for (std::size_t p = 0; p < r; ++p)
      tail_sig[p] = family.sets[p].kind() == SetKind::Cofinite;
    for (int i : probe) {
      auto sig = signature_of(i);
      if (sig != tail_sig) groups[sig].push_back(i);
    }
    std::vector<int> excluded;
    for (const auto& [sig, players] : groups)
      excluded.insert(excluded.end(), players.begin(), players.end());
    out.push_back(Region{Coalition::cofinite(u, excluded), tail_sig});
    for (auto& [sig, players] : groups)
      out.push_back(Region{Coalition::of(u, players), sig});
  }
  std::sort(out.begin(), out.end(),
            [](const Region& a, const Region& b) { return a.block < b.block; });
  return out;
}

FieldOfSets FieldOfSets::verify(SetFamily family) {
  if (!is_field(family))
    throw std::invalid_argument("family is not a field of sets");
  // Atoms: minimal non-empty members.
  std::vector<Coalition> atoms;
  for (const Coalition& s : family.sets) {
    if (s.is_empty()) continue;
    bool minimal = true;
    for (const Coalition& t : family.sets) {
      if (t.is_empty() || t == s) continue;
      if (t.subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(s);
  }
  std::sort(atoms.begin(), atoms.end());
  if ((std::size_t{1} << atoms.size()) != family.sets.size())
    throw std::invalid_argument("field member count is not 2^#atoms");
  return FieldOfSets(std::move(family), std::move(atoms));
}

FieldOfSets FieldOfSets::from_atom_partition(const PlayerUniverse& u,
                                             std::vector<Coalition> blocks,
                                             std::size_t cap) {
  std::sort(blocks.begin(), blocks.end());
  const std::size_t a = blocks.size();
  if (a == 0) throw std::invalid_argument("empty atom partition");
  for (std::size_t i = 0; i < a; ++i) {
    if (blocks[i].is_empty()) throw std::invalid_argument("empty atom");
    for (std::size_t j = i + 1; j < a; ++j)
      if (!blocks[i].disjoint_with(blocks[j]))
        throw std::invalid_argument("atoms overlap");
  }
  Coalition covered = Coalition::empty(u);
  for (const Coalition& b : blocks) covered = set_union(covered, b);
  if (!covered.is_grand()) throw std::invalid_argument("atoms do not cover N");
  if (a >= 63 || (std::size_t{1} << a) > cap)
    throw HullCapExceeded("field would exceed the member cap (" +
                          std::to_string(a) + " atoms)");
  std::vector<Coalition> members;
  members.reserve(std::size_t{1} << a);
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << a); ++sub) {
    Coalition m = Coalition::empty(u);
    for (std::size_t p = 0; p < a; ++p)
      if (sub & (std::uint64_t{1} << p)) m = set_union(m, blocks[p]);
    members.push_back(std::move(m));
  }
  SetFamily f = SetFamily::of(u, std::move(members));
  if (f.sets.size() != (std::size_t{1} << a))
    throw std::invalid_argument("atom unions collide");
  return FieldOfSets(std::move(f), std::move(blocks));
}

FieldOfSets field_hull(const SetFamily& family, std::size_t cap) {
  const PlayerUniverse& u = family.universe;
  std::vector<Coalition> gens = family.sets;
  gens.push_back(Coalition::empty(u));
  gens.push_back(Coalition::grand(u));
  SetFamily generators = SetFamily::of(u, std::move(gens));

  // The hull is exactly the set of unions of the cells of the partition the
  // generators induce, so the cells are its atoms.
  std::vector<Region> cells = regions(generators);
  std::vector<Coalition> blocks;
  blocks.reserve(cells.size());
  for (Region& c : cells) blocks.push_back(std::move(c.block));
  return FieldOfSets::from_atom_partition(u, std::move(blocks), cap);
}

FieldOfSets power_set_field(const PlayerUniverse& u) {
  if (!u.is_finite() || u.player_count() > 20)
    throw std::invalid_argument("power_set_field requires a small finite universe");
  std::vector<Coalition> singletons;
  for (int i = 1; i <= u.player_count(); ++i)
    singletons.push_back(Coalition::singleton(u, i));
  return FieldOfSets::from_atom_partition(u, std::move(singletons),
                                          std::size_t{1} << 20);
}

}  // namespace bacore
