#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

// Immutable term over variables, the constant 0 and binary difference.
// Copies share structure.
class Term {
 public:
  enum class Kind { variable, zero, difference };

  static Term variable(std::string name);
  static Term zero();
  static Term difference(Term left, Term right);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  // Variables in order of first occurrence.
  std::vector<std::string> variables() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Term operator-(Term a, Term b) {
  return Term::difference(std::move(a), std::move(b));
}

struct Identity {
  Term lhs;
  Term rhs;
  friend bool operator==(const Identity&, const Identity&) = default;
};

struct QuasiIdentity {
  std::vector<Identity> premises;
  Identity conclusion;
  friend bool operator==(const QuasiIdentity&, const QuasiIdentity&) = default;
};

// "s <= t" is read as the identity s-t = 0.
using Sentence = std::variant<Identity, QuasiIdentity>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position);
  // Byte offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

Term parse_term(std::string_view input);
Sentence parse_sentence(std::string_view input);
// A sentence if the input has a connective, otherwise a bare term.
std::variant<Term, Sentence> parse(std::string_view input);

std::string to_string(const Term& term);
std::string to_string(const Identity& identity);
std::string to_string(const Sentence& sentence);

// Sorted variable names of a sentence.
std::vector<std::string> variables(const Sentence& sentence);

using Environment = std::map<std::string, Element, std::less<>>;

Element evaluate(const Term& term, const Algebra& algebra,
                 const Environment& env);

// Assignment in variable-name order.
using Assignment = std::vector<std::pair<std::string, Element>>;

// Exhaustive check over all assignments, enumerated lexicographically
// (first variable most significant). Returns the first counterexample.
std::optional<Assignment> find_counterexample(const Sentence& sentence,
                                              const Algebra& algebra);
inline bool holds(const Sentence& sentence, const Algebra& algebra) {
  return !find_counterexample(sentence, algebra).has_value();
}

// a b^k: a with b subtracted k times.
Element iter_power(const Algebra& algebra, Element a, Element b,
                   std::size_t k);

// Axioms (1)-(4) and laws (5)-(7) as sentences, keyed by their labels.
std::vector<std::pair<std::string, Sentence>> bck_laws();

}  // namespace bck
