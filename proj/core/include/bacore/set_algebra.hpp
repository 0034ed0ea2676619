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

#ifndef BACORE_SET_ALGEBRA_HPP
#define BACORE_SET_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bacore {

/// The ground set of players: either {1,...,n} or all of the naturals.
class PlayerUniverse {
 public:
  PlayerUniverse() : n_(0) {}  // defaults to the naturals
  static PlayerUniverse finite(int n) {
    if (n < 1) throw std::invalid_argument("finite universe needs n >= 1");
    return PlayerUniverse(n);
  }
  static PlayerUniverse naturals() { return PlayerUniverse(0); }

  bool is_finite() const { return n_ > 0; }
  /// Number of players; finite universes only.
  int player_count() const {
    if (!is_finite()) throw std::logic_error("player_count on infinite universe");
    return n_;
  }
  friend bool operator==(const PlayerUniverse&, const PlayerUniverse&) = default;

 private:
  explicit PlayerUniverse(int n) : n_(n) {}
  int n_;  // 0 encodes the naturals
};

enum class SetKind { Explicit, Cofinite };

/// A coalition: an explicit finite player set, or a cofinite set over the
/// naturals stored by its finite excluded set. Always in canonical form
/// (base strictly sorted). Membership is total and decidable.
class Coalition {
 public:
  Coalition() : universe_(), kind_(SetKind::Explicit) {}  // empty over the naturals
  static Coalition empty(const PlayerUniverse& u) { return of(u, {}); }
  static Coalition grand(const PlayerUniverse& u);
  static Coalition of(const PlayerUniverse& u, std::vector<int> members);
  static Coalition cofinite(const PlayerUniverse& u, std::vector<int> excluded);
  static Coalition singleton(const PlayerUniverse& u, int player) { return of(u, {player}); }
  /// Explicit coalition over a finite universe with n <= 64 from a bitmask
  /// (bit i-1 set means player i is a member).
  static Coalition from_mask(const PlayerUniverse& u, std::uint64_t mask);

  SetKind kind() const { return kind_; }
  /// Members for Explicit, excluded players for Cofinite.
  const std::vector<int>& base() const { return base_; }
  const PlayerUniverse& universe() const { return universe_; }

  bool contains(int player) const;
  bool is_empty() const;
  bool is_grand() const;
  bool subset_of(const Coalition& other) const;
  bool disjoint_with(const Coalition& other) const;
  /// Bitmask over a finite universe with n <= 64.
  std::uint64_t mask() const;

  std::string to_string() const;

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.kind_ == b.kind_ && a.base_ == b.base_ && a.universe_ == b.universe_;
  }
  /// Canonical total order: Explicit before Cofinite, then by base size,
  /// then lexicographically on the base.
  friend std::strong_ordering operator<=>(const Coalition& a, const Coalition& b);

 private:
  Coalition(const PlayerUniverse& u, SetKind k, std::vector<int> base)
      : universe_(u), kind_(k), base_(std::move(base)) {}
  PlayerUniverse universe_;
  SetKind kind_;
  std::vector<int> base_;
};

Coalition complement(const Coalition& s);
Coalition set_union(const Coalition& s, const Coalition& t);
Coalition set_intersect(const Coalition& s, const Coalition& t);

/// Finite ordered list of distinct coalitions over one universe, kept in
/// the canonical total order so downstream LPs are deterministic.
struct SetFamily {
  PlayerUniverse universe;
  std::vector<Coalition> sets;

  /// Sorts, removes duplicates, rejects universe mismatches.
  static SetFamily of(const PlayerUniverse& u, std::vector<Coalition> sets);
  bool contains(const Coalition& s) const;
  std::size_t size() const { return sets.size(); }
};

bool is_field(const SetFamily& family);

/// One cell of the partition induced by a finite generator family: the
/// non-empty intersection of each generator or its complement. `inside[p]`
/// records whether the cell lies inside generator p.
struct Region {
  Coalition block;
  std::vector<bool> inside;
};

/// The partition of N induced by the family; deterministic order by the
/// canonical order of the blocks. Over the naturals at most one block is
/// cofinite. An empty family yields the single region N.
std::vector<Region> regions(const SetFamily& family);

struct HullCapExceeded : std::runtime_error {
  explicit HullCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultHullCap = std::size_t{1} << 16;

/// A SetFamily verified to be closed under complement and pairwise union,
/// with its atoms (minimal non-empty members) cached.
class FieldOfSets {
 public:
  /// The trivial field {empty, N} over the naturals.
  FieldOfSets()
      : family_(SetFamily::of(PlayerUniverse::naturals(),
                              {Coalition::empty(PlayerUniverse::naturals()),
                               Coalition::grand(PlayerUniverse::naturals())})),
        atoms_{Coalition::grand(PlayerUniverse::naturals())} {}

  /// Verifies the closure properties (throws std::invalid_argument if they
  /// fail) and computes the atoms.
  static FieldOfSets verify(SetFamily family);

  /// Builds the field whose members are all unions of the given blocks after
  /// verifying that the blocks are non-empty, pairwise disjoint and cover N.
  /// Union-closure of such a family is structural, so the quadratic member
  /// checks of verify() are skipped.
  static FieldOfSets from_atom_partition(const PlayerUniverse& u,
                                         std::vector<Coalition> blocks,
                                         std::size_t cap = kDefaultHullCap);

  const SetFamily& family() const { return family_; }
  const PlayerUniverse& universe() const { return family_.universe; }
  const std::vector<Coalition>& members() const { return family_.sets; }
  const std::vector<Coalition>& atoms() const { return atoms_; }
  bool contains(const Coalition& s) const { return family_.contains(s); }

 private:
  FieldOfSets(SetFamily f, std::vector<Coalition> atoms)
      : family_(std::move(f)), atoms_(std::move(atoms)) {}
  SetFamily family_;
  std::vector<Coalition> atoms_;
};

/// The smallest field of sets containing the family (the empty and grand
/// coalitions are inserted if absent). Throws HullCapExceeded if the hull
/// would have more than `cap` members.
FieldOfSets field_hull(const SetFamily& family, std::size_t cap = kDefaultHullCap);

inline const std::vector<Coalition>& atoms_of(const FieldOfSets& field) {
  return field.atoms();
}

/// The full power set of a finite universe as a field; n small.
FieldOfSets power_set_field(const PlayerUniverse& u);

}  // namespace bacore

#endif  // BACORE_SET_ALGEBRA_HPP
