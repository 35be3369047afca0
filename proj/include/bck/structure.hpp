#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sorted set of carrier elements.
struct Ideal {
  std::vector<Element> elements;

  bool contains(Element a) const;
  std::size_t size() const noexcept { return elements.size(); }
  bool subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

// Size first, then lexicographic.
bool ideal_order(const Ideal& a, const Ideal& b);

// A partition of the carrier; representative[a] is the least element of
// a's class.
struct Congruence {
  std::vector<Element> representative;

  bool related(Element a, Element b) const {
    return representative[a] == representative[b];
  }
  std::size_t class_count() const;
  // Number of related ordered pairs.
  std::size_t pair_count() const;
  std::vector<std::vector<Element>> classes() const;
  Ideal zero_class() const;
  // Every pair related here is related in `other`.
  bool contained_in(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

bool is_ideal(const Algebra& algebra, const std::vector<Element>& subset);

// Least ideal containing `generators`.
Ideal generated_ideal(const Algebra& algebra,
                      const std::vector<Element>& generators);

// {b : b a^k = 0 for some k}.
Ideal principal_ideal(const Algebra& algebra, Element a);

inline constexpr std::size_t default_ideal_guard = 16;

// Every ideal once, in size-then-lex order.
std::vector<Ideal> all_ideals(const Algebra& algebra,
                              std::size_t guard = default_ideal_guard);

enum class Classification { trivial, simple, subdirectly_irreducible, other };
std::string_view to_string(Classification c);

struct ClassifyResult {
  Classification kind;
  std::optional<Ideal> monolith;  // set for simple and si algebras

  bool is_si() const {
    return kind == Classification::simple ||
           kind == Classification::subdirectly_irreducible;
  }
};

ClassifyResult classify(const Algebra& algebra);

// (a, b) related iff a-b and b-a both lie in the ideal.
Congruence theta_of_ideal(const Algebra& algebra, const Ideal& ideal);

bool is_congruence(const Algebra& algebra, const Congruence& relation);

inline constexpr std::size_t default_congruence_guard = 6;

// Every compatible partition once, ordered by pair count then by
// representative vector (identity first, full relation last).
std::vector<Congruence> all_congruences(
    const Algebra& algebra, std::size_t guard = default_congruence_guard);

// Operation table on the classes, numbered by increasing representative.
struct Quotient {
  std::size_t size = 0;
  std::vector<Element> table;
  bool is_bck = false;
  std::optional<Algebra> algebra;  // set when is_bck
};

Quotient quotient(const Algebra& algebra, const Congruence& congruence);

struct ThetaViolation {
  Ideal ideal;
  Congruence congruence;
  // not_an_equivalence, not_a_congruence, zero_class_mismatch,
  // theta_not_bck, not_largest, not_unique_bck, zero_class_not_ideal
  std::string kind;
};

// For each ideal I, checks that theta_of_ideal(I) is the largest congruence
// with 0-class I and the only one whose quotient is a BCK-algebra.
std::vector<ThetaViolation> verify_theta_maximality(
    const Algebra& algebra, std::size_t guard = default_congruence_guard);

}  // namespace bck
