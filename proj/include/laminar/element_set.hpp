// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ground sets and bitmask subsets.
//
// A GroundSet owns the element identifiers in a fixed total order (the
// "identifier order"). An ElementSet is a subset of some ground set, stored
// as a bitmask over the positions of that order. Because positions follow
// the identifier order, iterating the bits of an ElementSet visits members
// in identifier order, and the lexicographic order on sets is a pure
// bitmask computation.

#ifndef LAMINAR_ELEMENT_SET_HPP_
#define LAMINAR_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace laminar {

// Hard upper bound on ground-set size; bitmasks are 32 bits wide and several
// operations build tables over all 2^n subsets.
inline constexpr int kMaxGroundSize = 20;

// Exponential operations refuse ground sets larger than this cap with
// ErrorKind::kTooLarge. Defaults to 16.
int desk_scale_cap();
void set_desk_scale_cap(int cap);
// Throws kTooLarge if n exceeds the current cap.
void require_desk_scale(int n, std::string_view what);

// Total order on identifiers: runs of digits compare numerically, everything
// else byte-wise, digits before letters. Ties (e.g. "e01" vs "e1") fall back
// to plain string comparison.
bool identifier_less(std::string_view a, std::string_view b);
// True iff `id` matches [A-Za-z0-9_']+.
bool is_valid_identifier(std::string_view id);

class ElementSet {
 public:
  using Mask = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}

  static constexpr ElementSet singleton(int index) {
    return ElementSet(Mask{1} << index);
  }
  // The first n positions.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ElementSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Lowest member position; -1 when empty.
  constexpr int first() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  constexpr ElementSet with(int index) const {
    return ElementSet(bits_ | (Mask{1} << index));
  }
  constexpr ElementSet without(int index) const {
    return ElementSet(bits_ & ~(Mask{1} << index));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  // Member positions in increasing order.
  std::vector<int> indices() const;

  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(Iterator a, Iterator b) = default;

   private:
    Mask rest_ = 0;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  Mask bits_ = 0;
};

// Lexicographic order on the member sequences (identifier order). The empty
// set is smallest; a proper prefix precedes its extensions.
bool lex_less(ElementSet a, ElementSet b);

struct LexLess {
  bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

class GroundSet {
 public:
  GroundSet() = default;
  // Sorts identifiers into identifier order. Throws kBadIdentifier,
  // kDuplicateElement, or kTooLarge (beyond kMaxGroundSize).
  explicit GroundSet(std::vector<std::string> identifiers);
  GroundSet(std::initializer_list<std::string_view> identifiers);

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int index) const { return names_[index]; }
  const std::vector<std::string>& names() const { return names_; }
  ElementSet all() const { return ElementSet::full(size()); }

  std::optional<int> find(std::string_view id) const;
  // Throws kForeignElement.
  int index_of(std::string_view id) const;
  ElementSet set_of(std::initializer_list<std::string_view> ids) const;
  ElementSet set_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> names_of(ElementSet set) const;
  // Throws kForeignElement when `set` has positions >= size().
  void check_subset(ElementSet set) const;

  // "{a,b,c}" in identifier order.
  std::string format(ElementSet set) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace laminar

#endif  // LAMINAR_ELEMENT_SET_HPP_
