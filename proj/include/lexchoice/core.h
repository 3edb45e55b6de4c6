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

// Ground set, subsets, and the space of capacity-constrained choice problems.
//
// Alternatives are identified by their index 0..n-1 in a Universe; labels are
// only used at I/O boundaries. A ChoiceSet is a bitmask over those indices.

#ifndef LEXCHOICE_CORE_H_
#define LEXCHOICE_CORE_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexchoice {

using Alternative = int;
using Capacity = int;

inline constexpr int kMaxAlternatives = 16;

// Thrown for precondition violations on library inputs.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ChoiceSet {
 public:
  using Bits = std::uint32_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Alternative;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Alternative;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr Alternative operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr ChoiceSet() = default;
  constexpr explicit ChoiceSet(Bits bits) : bits_(bits) {}

  static constexpr ChoiceSet Of(Alternative a) { return ChoiceSet(Bits{1} << a); }
  static constexpr ChoiceSet Full(int n) {
    return ChoiceSet(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }
  static ChoiceSet FromMembers(const std::vector<Alternative>& members);

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Alternative a) const { return (bits_ >> a) & 1U; }
  constexpr bool subset_of(ChoiceSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr ChoiceSet with(Alternative a) const { return ChoiceSet(bits_ | (Bits{1} << a)); }
  constexpr ChoiceSet without(Alternative a) const {
    return ChoiceSet(bits_ & ~(Bits{1} << a));
  }
  // Lowest-index member; -1 when empty.
  constexpr Alternative first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<Alternative> members() const { return {begin(), end()}; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ChoiceSet operator|(ChoiceSet x, ChoiceSet y) {
    return ChoiceSet(x.bits_ | y.bits_);
  }
  friend constexpr ChoiceSet operator&(ChoiceSet x, ChoiceSet y) {
    return ChoiceSet(x.bits_ & y.bits_);
  }
  // Set difference.
  friend constexpr ChoiceSet operator-(ChoiceSet x, ChoiceSet y) {
    return ChoiceSet(x.bits_ & ~y.bits_);
  }
  constexpr ChoiceSet& operator|=(ChoiceSet y) {
    bits_ |= y.bits_;
    return *this;
  }
  constexpr ChoiceSet& operator&=(ChoiceSet y) {
    bits_ &= y.bits_;
    return *this;
  }
  constexpr ChoiceSet& operator-=(ChoiceSet y) {
    bits_ &= ~y.bits_;
    return *this;
  }

  // Ordered by bitmask, which is the canonical enumeration order.
  constexpr auto operator<=>(const ChoiceSet&) const = default;

 private:
  Bits bits_ = 0;
};

struct Problem {
  ChoiceSet set;
  Capacity capacity = 1;

  constexpr auto operator<=>(const Problem&) const = default;
};

class Universe {
 public:
  // Throws Error on an empty list, duplicate labels, or more than
  // kMaxAlternatives labels.
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Alternative a) const { return labels_.at(a); }
  std::optional<Alternative> find(std::string_view label) const;
  // Like find, but throws Error for unknown labels.
  Alternative index_of(std::string_view label) const;

  ChoiceSet all() const { return ChoiceSet::Full(size()); }
  bool contains(ChoiceSet s) const { return s.subset_of(all()); }
  bool in_domain(const Problem& p) const {
    return !p.set.empty() && contains(p.set) && p.capacity >= 1 && p.capacity <= size();
  }

  // Number of problems (S,q) with S nonempty and 1 <= q <= n.
  std::size_t problem_count() const {
    return ((std::size_t{1} << size()) - 1) * static_cast<std::size_t>(size());
  }
  // Position of p in the canonical enumeration order.
  std::size_t problem_index(const Problem& p) const {
    return (static_cast<std::size_t>(p.set.bits()) - 1) * static_cast<std::size_t>(size()) +
           static_cast<std::size_t>(p.capacity - 1);
  }

  ChoiceSet set_of(const std::vector<std::string>& labels) const;
  // "{a,c}" in index order.
  std::string format(ChoiceSet s) const;
  std::string format(const Problem& p) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

Universe make_universe(std::vector<std::string> labels);

// Universe labelled "a", "b", ... for tests and fixtures (n <= 16).
Universe letters(int n);

// Restartable, side-effect-free stream of every problem of a universe:
// sets by ascending bitmask, capacities ascending within each set.
class ProblemSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Problem;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Problem;

    iterator() = default;
    iterator(int n, Problem p) : n_(n), p_(p) {}
    Problem operator*() const { return p_; }
    iterator& operator++() {
      if (++p_.capacity > n_) {
        p_.capacity = 1;
        p_.set = ChoiceSet(p_.set.bits() + 1);
      }
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return p_ == o.p_; }

   private:
    int n_ = 0;
    Problem p_;
  };

  explicit ProblemSpace(int n) : n_(n) {}
  iterator begin() const { return {n_, Problem{ChoiceSet(1), 1}}; }
  iterator end() const { return {n_, Problem{ChoiceSet(ChoiceSet::Bits{1} << n_), 1}}; }
  std::size_t size() const {
    return ((std::size_t{1} << n_) - 1) * static_cast<std::size_t>(n_);
  }

 private:
  int n_;
};

ProblemSpace enumerate_problems(const Universe& u);

}  // namespace lexchoice

#endif  // LEXCHOICE_CORE_H_
