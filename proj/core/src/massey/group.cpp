#include "eisenlab/massey/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "eisenlab/error.hpp"

namespace eisenlab::massey {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table,
                         std::vector<std::size_t> generators)
    : name_(std::move(name)), table_(std::move(table)), generators_(std::move(generators)) {
  const std::size_t n = table_.size();
  if (n == 0) throw DomainError("FiniteGroup: empty table");
  for (const auto& row : table_) {
    if (row.size() != n) throw DomainError("FiniteGroup: table is not square");
    for (std::size_t x : row)
      if (x >= n) throw DomainError("FiniteGroup: table not closed");
  }
  for (std::size_t g : generators_)
    if (g >= n) throw DomainError("FiniteGroup: generator out of range");

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table_[c][g] == g && table_[g][c] == g;
    if (ok) e = c;
  }
  if (e == n) throw DomainError("FiniteGroup: no identity element");
  identity_ = e;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw DomainError("FiniteGroup: multiplication is not associative");

  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g][h] == e && table_[h][g] == e) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] == n) throw DomainError("FiniteGroup: element without inverse");
  }

  // Generators must actually generate.
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{e};
  seen[e] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s : generators_) {
      std::size_t y = table_[x][s];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw DomainError("FiniteGroup: generators do not generate");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic: order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("Z/" + std::to_string(n), std::move(t), {n == 1 ? 0u : 1u});
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
  std::vector<std::size_t> gens;
  for (std::size_t s : g.generators()) gens.push_back(s * b + h.identity());
  for (std::size_t s : h.generators()) gens.push_back(g.identity() * b + s);
  return FiniteGroup(g.name() + " x " + h.name(), std::move(t), std::move(gens));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::vector<std::array<std::size_t, 3>> elems;
  do elems.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  auto index_of = [&](const std::array<std::size_t, 3>& p) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // (x*y)(i) = x(y(i))
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = elems[x][elems[y][i]];
      t[x][y] = index_of(c);
    }
  std::size_t transposition = index_of({1, 0, 2});
  std::size_t three_cycle = index_of({1, 2, 0});
  return FiniteGroup("S3", std::move(t), {transposition, three_cycle});
}

Character trivial_character(const FiniteGroup& g, const Modulus&) { return Character(g.order(), 1); }

bool is_character(const FiniteGroup& g, const Modulus& m, const Character& chi) {
  if (chi.size() != g.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!m.is_unit(chi[a])) return false;
    for (std::size_t b = 0; b < g.order(); ++b)
      if (chi[g.mul(a, b)] != m.mul(chi[a], chi[b])) return false;
  }
  return true;
}

std::vector<Character> all_characters(const FiniteGroup& g, const Modulus& m) {
  const std::size_t n = g.order();
  // Candidate generator images: units u with u^|G| = 1.
  std::vector<u64> roots;
  for (u64 u = 1; u < m.value(); ++u)
    if (m.is_unit(u) && m.pow(u, n) == 1) roots.push_back(u);

  const auto& gens = g.generators();
  std::vector<Character> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // Extend along the Cayley graph, then test the homomorphism law.
    Character chi(n, 0);
    chi[g.identity()] = 1;
    std::deque<std::size_t> queue{g.identity()};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t y = g.mul(x, gens[k]);
        if (chi[y] == 0) {
          chi[y] = m.mul(chi[x], roots[choice[k]]);
          queue.push_back(y);
        }
      }
    }
    if (is_character(g, m, chi)) out.push_back(std::move(chi));

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == roots.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

Character character_product(const Modulus& m, const Character& a, const Character& b) {
  Character c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = m.mul(a[i], b[i]);
  return c;
}

Character character_inverse(const Modulus& m, const Character& a) {
  Character c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = m.inv(a[i]);
  return c;
}

}  // namespace eisenlab::massey
