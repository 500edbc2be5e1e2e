#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eisenlab/corering/zmod.hpp"

namespace eisenlab::massey {

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..order()-1. A list of generators is kept so that characters can
/// be enumerated by assigning values on generators.
class FiniteGroup {
 public:
  /// Checks closure, associativity, a two-sided identity and inverses on the
  /// whole table; throws DomainError otherwise.
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table,
              std::vector<std::size_t> generators);

  static FiniteGroup cyclic(std::size_t n);
  /// Direct product; (a, b) is stored at index a * |H| + b.
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
  /// S_3 acting on {0,1,2}, elements listed in lexicographic order of images.
  static FiniteGroup symmetric3();

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::size_t>& generators() const { return generators_; }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> generators_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// A character G -> (Z/p^s)^x, stored by value on every element.
using Character = std::vector<u64>;

Character trivial_character(const FiniteGroup& g, const Modulus& m);
bool is_character(const FiniteGroup& g, const Modulus& m, const Character& chi);
/// Every character of G into (Z/p^s)^x.
std::vector<Character> all_characters(const FiniteGroup& g, const Modulus& m);
Character character_product(const Modulus& m, const Character& a, const Character& b);
Character character_inverse(const Modulus& m, const Character& a);

}  // namespace eisenlab::massey
