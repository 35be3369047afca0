#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bck {

// Index of a carrier element. Index 0 is always the constant 0.
using Element = std::uint8_t;

inline constexpr std::size_t max_carrier_size = 255;

// The axioms and derived laws checked by validate(), in checking order.
enum class Axiom {
  right_zero,     // (2) x-0 = x
  left_zero,      // (3) 0-x = 0
  self_zero,      // (5) xx = 0
  bck_identity,   // (1) ((x-y)-(x-z))-(z-y) = 0
  antisymmetry,   // (4) x-y = 0 = y-x => x = y
  contraction,    // (6) (x-(x-y))-y = 0
  exchange,       // (7) (x-y)-z = (x-z)-y
};

std::string_view axiom_label(Axiom axiom);
std::string_view axiom_law(Axiom axiom);

class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(Axiom axiom, std::vector<Element> witness);

  Axiom axiom() const noexcept { return axiom_; }
  std::span<const Element> witness() const noexcept { return witness_; }

 private:
  Axiom axiom_;
  std::vector<Element> witness_;
};

class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed algebra text/JSON.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite BCK-algebra given by the Cayley table of its difference
// operation. Instances only come out of validate(), so every value
// satisfies the axioms.
class Algebra {
 public:
  // `table` is row-major, table[a * n + b] = a - b.
  static Algebra validate(std::size_t n, std::vector<Element> table);
  static Algebra validate(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return size_; }
  Element sub(Element a, Element b) const noexcept {
    return table_[a * size_ + b];
  }
  Element operator()(Element a, Element b) const noexcept { return sub(a, b); }
  bool leq(Element a, Element b) const noexcept { return sub(a, b) == 0; }

  std::span<const Element> table() const noexcept { return table_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Algebra(std::size_t n, std::vector<Element> table)
      : size_(n), table_(std::move(table)) {}

  std::size_t size_;
  std::vector<Element> table_;
};

// Returns the first violated axiom with its witness, or nothing. Used by
// validate() and by the enumerator's leaf check.
struct Violation {
  Axiom axiom;
  std::vector<Element> witness;
};
std::optional<Violation> first_violation(std::size_t n,
                                         std::span<const Element> table);

// C2, L3 (1-1/2 = 1/2) and H3 (1-1/2 = 1). Element order 0, 1/2, 1.
Algebra builtin(std::string_view name);
bool is_builtin_name(std::string_view name);
Algebra trivial_algebra();

class OrderRelation {
 public:
  explicit OrderRelation(const Algebra& algebra);

  std::size_t size() const noexcept { return size_; }
  bool operator()(Element a, Element b) const { return leq_[a * size_ + b]; }
  bool less(Element a, Element b) const { return a != b && (*this)(a, b); }
  bool comparable(Element a, Element b) const {
    return (*this)(a, b) || (*this)(b, a);
  }
  bool is_chain() const;
  // Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<Element, Element>> hasse_pairs() const;

 private:
  std::size_t size_;
  std::vector<bool> leq_;
};

inline OrderRelation order(const Algebra& algebra) {
  return OrderRelation(algebra);
}

// Lexicographically least row-major table over all relabelings that fix 0.
struct CanonicalForm {
  std::size_t size = 0;
  std::vector<Element> table;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Algebra& algebra);
// True when no relabeling fixing 0 gives a lexicographically smaller table.
bool is_canonical(std::size_t n, std::span<const Element> table);
// Relabel by `perm` (old index -> new index); perm[0] must be 0.
Algebra relabel(const Algebra& algebra, std::span<const Element> perm);
Algebra from_canonical(const CanonicalForm& form);

// All injective homomorphisms B -> A (0 to 0, preserving -), as maps
// indexed by elements of B, in lexicographic order.
using Embedding = std::vector<Element>;
std::vector<Embedding> find_embeddings(const Algebra& target,
                                       const Algebra& pattern);
bool embeds(const Algebra& target, const Algebra& pattern);

// Text: n, then n rows of n indices. JSON: {"size": n, "table": [[...]]}.
Algebra parse_algebra(std::string_view text);
std::string to_text(const Algebra& algebra);
std::string to_json(const Algebra& algebra);
Algebra load_algebra_file(const std::string& path);

}  // namespace bck
