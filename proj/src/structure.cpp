#include "bck/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bck/terms.hpp"

namespace bck {

bool Ideal::contains(Element a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

bool Ideal::subset_of(const Ideal& other) const {
  return std::includes(other.elements.begin(), other.elements.end(),
                       elements.begin(), elements.end());
}

bool ideal_order(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements < b.elements;
}

std::size_t Congruence::class_count() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < representative.size(); ++a)
    if (representative[a] == a) ++count;
  return count;
}

std::size_t Congruence::pair_count() const {
  std::vector<std::size_t> sizes(representative.size());
  for (auto r : representative) ++sizes[r];
  std::size_t total = 0;
  for (auto s : sizes) total += s * s;
  return total;
}

std::vector<std::vector<Element>> Congruence::classes() const {
  std::vector<std::vector<Element>> out;
  for (std::size_t a = 0; a < representative.size(); ++a) {
    if (representative[a] != a) continue;
    auto& cls = out.emplace_back();
    for (std::size_t b = a; b < representative.size(); ++b)
      if (representative[b] == a) cls.push_back(Element(b));
  }
  return out;
}

Ideal Congruence::zero_class() const {
  Ideal out;
  for (std::size_t a = 0; a < representative.size(); ++a)
    if (representative[a] == 0) out.elements.push_back(Element(a));
  return out;
}

bool Congruence::contained_in(const Congruence& other) const {
  for (std::size_t a = 0; a < representative.size(); ++a)
    if (!other.related(a, representative[a])) return false;
  return true;
}

namespace {

std::vector<bool> membership(std::size_t n, const std::vector<Element>& s) {
  std::vector<bool> in(n);
  for (auto a : s) {
    if (a >= n)
      throw RangeError("element " + std::to_string(a) + " outside carrier");
    in[a] = true;
  }
  return in;
}

Ideal to_ideal(const std::vector<bool>& in) {
  Ideal out;
  for (std::size_t a = 0; a < in.size(); ++a)
    if (in[a]) out.elements.push_back(Element(a));
  return out;
}

// Smallest superset of `in` containing 0 and closed under the ideal rule.
void close_ideal(const Algebra& algebra, std::vector<bool>& in) {
  const auto n = algebra.size();
  in[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (in[a]) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (in[b] && in[algebra(a, b)]) {
          in[a] = true;
          changed = true;
          break;
        }
    }
  }
}

}  // namespace

bool is_ideal(const Algebra& algebra, const std::vector<Element>& subset) {
  const auto n = algebra.size();
  const auto in = membership(n, subset);
  if (!in[0]) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (in[b] && in[algebra(a, b)]) return false;
  }
  return true;
}

Ideal generated_ideal(const Algebra& algebra,
                      const std::vector<Element>& generators) {
  auto in = membership(algebra.size(), generators);
  close_ideal(algebra, in);
  return to_ideal(in);
}

Ideal principal_ideal(const Algebra& algebra, Element a) {
  const auto n = algebra.size();
  Ideal out;
  for (std::size_t b = 0; b < n; ++b)
    if (iter_power(algebra, Element(b), a, n) == 0)
      out.elements.push_back(Element(b));
  return out;
}

std::vector<Ideal> all_ideals(const Algebra& algebra, std::size_t guard) {
  const auto n = algebra.size();
  if (n > guard)
    throw SizeGuardExceeded("ideal enumeration limited to size " +
                            std::to_string(guard) + ", got " +
                            std::to_string(n));
  // Every ideal of a finite algebra is generated by its elements, so
  // closing under "join with one more element" from {0} reaches them all.
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<bool>> frontier;
  std::vector<bool> bottom(n);
  close_ideal(algebra, bottom);
  seen.insert(to_ideal(bottom).elements);
  frontier.push_back(bottom);
  while (!frontier.empty()) {
    auto current = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t a = 0; a < n; ++a) {
      if (current[a]) continue;
      auto next = current;
      next[a] = true;
      close_ideal(algebra, next);
      if (seen.insert(to_ideal(next).elements).second)
        frontier.push_back(std::move(next));
    }
  }
  std::vector<Ideal> out;
  for (const auto& s : seen) out.push_back(Ideal{s});
  std::sort(out.begin(), out.end(), ideal_order);
  return out;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::trivial: return "trivial";
    case Classification::simple: return "simple";
    case Classification::subdirectly_irreducible:
      return "subdirectly_irreducible";
    case Classification::other: return "other";
  }
  return "?";
}

ClassifyResult classify(const Algebra& algebra) {
  if (algebra.size() == 1) return {Classification::trivial, std::nullopt};
  const auto ideals = all_ideals(algebra);
  // Sorted by size, so a least nontrivial ideal can only be the first one.
  const Ideal& candidate = ideals[1];
  for (std::size_t i = 2; i < ideals.size(); ++i)
    if (!candidate.subset_of(ideals[i]))
      return {Classification::other, std::nullopt};
  const bool simple = candidate.size() == algebra.size();
  return {simple ? Classification::simple
                 : Classification::subdirectly_irreducible,
          candidate};
}

Congruence theta_of_ideal(const Algebra& algebra, const Ideal& ideal) {
  if (!is_ideal(algebra, ideal.elements))
    throw NotAnIdeal("theta_of_ideal needs an ideal");
  const auto n = algebra.size();
  Congruence out{std::vector<Element>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    out.representative[a] = Element(a);
    for (std::size_t b = 0; b < a; ++b)
      if (ideal.contains(algebra(a, b)) && ideal.contains(algebra(b, a))) {
        out.representative[a] = out.representative[b];
        break;
      }
  }
  return out;
}

bool is_congruence(const Algebra& algebra, const Congruence& relation) {
  const auto n = algebra.size();
  const auto& rep = relation.representative;
  if (rep.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a)
    if (rep[a] > a || rep[rep[a]] != rep[a]) return false;
  for (std::size_t a = 0; a < n; ++a) {
    const Element r = rep[a];
    if (r == a) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (!relation.related(algebra(a, c), algebra(r, c))) return false;
      if (!relation.related(algebra(c, a), algebra(c, r))) return false;
    }
  }
  return true;
}

std::vector<Congruence> all_congruences(const Algebra& algebra,
                                        std::size_t guard) {
  const auto n = algebra.size();
  if (n > guard)
    throw SizeGuardExceeded("congruence enumeration limited to size " +
                            std::to_string(guard) + ", got " +
                            std::to_string(n));
  std::vector<Congruence> out;
  // Set partitions as restricted growth strings; each block is labeled by
  // its least element, so labels are representatives directly.
  Congruence current{std::vector<Element>(n, 0)};
  std::vector<Element> blocks{0};
  std::function<void(std::size_t)> extend = [&](std::size_t a) {
    if (a == n) {
      if (is_congruence(algebra, current)) out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      current.representative[a] = blocks[i];
      extend(a + 1);
    }
    current.representative[a] = Element(a);
    blocks.push_back(Element(a));
    extend(a + 1);
    blocks.pop_back();
  };
  extend(1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.pair_count() != b.pair_count()) return a.pair_count() < b.pair_count();
    return a.representative < b.representative;
  });
  return out;
}

Quotient quotient(const Algebra& algebra, const Congruence& congruence) {
  const auto n = algebra.size();
  std::vector<Element> index(n);
  std::vector<Element> reps;
  for (std::size_t a = 0; a < n; ++a)
    if (congruence.representative[a] == a) {
      index[a] = Element(reps.size());
      reps.push_back(Element(a));
    }
  Quotient out;
  out.size = reps.size();
  out.table.resize(out.size * out.size);
  for (std::size_t i = 0; i < out.size; ++i)
    for (std::size_t j = 0; j < out.size; ++j)
      out.table[i * out.size + j] =
          index[congruence.representative[algebra(reps[i], reps[j])]];
  out.is_bck = !first_violation(out.size, out.table).has_value();
  if (out.is_bck) out.algebra = Algebra::validate(out.size, out.table);
  return out;
}

std::vector<ThetaViolation> verify_theta_maximality(const Algebra& algebra,
                                                    std::size_t guard) {
  const auto congruences = all_congruences(algebra, guard);
  std::vector<ThetaViolation> out;
  for (const auto& c : congruences)
    if (!is_ideal(algebra, c.zero_class().elements))
      out.push_back({c.zero_class(), c, "zero_class_not_ideal"});
  for (const auto& ideal : all_ideals(algebra)) {
    const auto theta = theta_of_ideal(algebra, ideal);
    // The partition must reproduce the defining relation pair by pair,
    // which fails if that relation is not transitive.
    bool faithful = true;
    for (std::size_t a = 0; a < algebra.size() && faithful; ++a)
      for (std::size_t b = 0; b < algebra.size() && faithful; ++b)
        faithful = theta.related(a, b) == (ideal.contains(algebra(a, b)) &&
                                           ideal.contains(algebra(b, a)));
    if (!faithful) {
      out.push_back({ideal, theta, "not_an_equivalence"});
      continue;
    }
    if (!is_congruence(algebra, theta)) {
      out.push_back({ideal, theta, "not_a_congruence"});
      continue;
    }
    if (theta.zero_class() != ideal)
      out.push_back({ideal, theta, "zero_class_mismatch"});
    if (!quotient(algebra, theta).is_bck)
      out.push_back({ideal, theta, "theta_not_bck"});
    for (const auto& c : congruences) {
      if (c.zero_class() != ideal) continue;
      if (!c.contained_in(theta)) out.push_back({ideal, c, "not_largest"});
      if (c != theta && quotient(algebra, c).is_bck)
        out.push_back({ideal, c, "not_unique_bck"});
    }
  }
  return out;
}

}  // namespace bck
