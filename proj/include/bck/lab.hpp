#pragma once

// Finite-model versions of the constructions used to locate the
// three-element chains L3 and H3 inside subdirectly irreducible
// BCK-algebras: atoms, relative heights, the P/Q telescoping sequences,
// and a free-algebra probe for the variety generated by a finite algebra.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/report.hpp"

namespace bck::lab {

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoAtom : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroBase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction produced something its proof says it cannot.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Pattern { L3, H3 };
std::string_view to_string(Pattern p);

// Minimal nonzero elements, ascending.
std::vector<Element> atoms(const Algebra& algebra);

// Least k with a b^k = 0; nullopt when the orbit stalls above 0.
// Throws ZeroBase for b = 0, a != 0.
std::optional<std::size_t> height(const Algebra& algebra, Element a, Element b);

struct HeightProfile {
  Element element = 0;
  // Indexed by b; entry 0 is unused and left empty.
  std::vector<std::optional<std::size_t>> heights;
  // Largest height, when every height is finite.
  std::optional<std::size_t> bound;
};

HeightProfile height_profile(const Algebra& algebra, Element a);

struct Lemma0Witness {
  Pattern pattern;
  Element atom;  // plays 1/2
  Element base;  // the b the construction started from
  Element one;
  // Embedding of the pattern: {0, atom, one}.
  Embedding embedding() const { return {0, atom, one}; }
};

// For si algebras with more than two elements: takes the atom a and the
// first b outside {0, a} for which c = (b-a)-((b-a)-a) yields a verified
// chain. c = a gives L3 with 1 = b-((b-a)-a); c = 0 gives H3 with 1 = b-a.
Lemma0Witness lemma0_witness(const Algebra& algebra);

struct Lemma1Result {
  Element element;
  std::size_t bound;  // least uniform bound n on the heights of `element`
  Element base;       // b with element b^n = 0 != element b^(n-1)
  Element atom;       // element b^(n-1)
};

// Requires a simple algebra and a nonzero element with finite heights.
Lemma1Result lemma1_atom(const Algebra& algebra, Element a);

struct PQSequences {
  Element u = 0;
  Element e = 0;
  std::size_t degree = 0;  // least n with u e^n = 0
  std::vector<Element> P;  // P[i] = u e^i
  std::vector<Element> Q;  // Q[n-1] = P[n-1], Q[i] = P[i] - Q[i+1]
};

// (u, e) is admissible when u, e != 0 and 2 <= height(u, e) < infinity.
bool admissible(const Algebra& algebra, Element u, Element e);
std::vector<std::pair<Element, Element>> admissible_pairs(const Algebra& algebra);
PQSequences pq(const Algebra& algebra, Element u, Element e);

struct LemmaViolation {
  Element u;
  Element e;
  std::size_t index;  // i for Q_i - Q_(i-1); 1 for both parts of lemma 3
  std::string claim;
  Element value;      // the element that should have been 0
};

// Q_i - Q_(i-1) = 0 for i = 1..n-1, over all admissible pairs.
std::vector<LemmaViolation> check_lemma2(const Algebra& algebra);
// Q_1 - (u - Q_1) = 0 and ((u - Q_1) - Q_1) - e = 0.
std::vector<LemmaViolation> check_lemma3(const Algebra& algebra);

struct TheoremCheck {
  bool applicable = false;  // si with more than two elements
  bool embeds_L3 = false;
  bool embeds_H3 = false;
  bool ok() const { return !applicable || embeds_L3 || embeds_H3; }
  // L3 when it embeds, otherwise H3 when that does.
  std::optional<Pattern> pattern() const;
};

TheoremCheck theorem_finite_check(const Algebra& algebra);

inline constexpr std::size_t default_free_coordinate_guard = 16;
inline constexpr std::size_t default_free_element_guard = 255;

struct FreeAlgebra {
  Algebra algebra;
  // Indices of the generators; 0 first, then generators, then elements in
  // the order the closure finds them.
  std::vector<Element> generators;
};

// Subalgebra of G^(|G|^k) generated by the k projections: the free algebra
// on k generators in the variety generated by G.
FreeAlgebra free_algebra_probe(
    const Algebra& generator, std::size_t rank,
    std::size_t coordinate_guard = default_free_coordinate_guard,
    std::size_t element_guard = default_free_element_guard);

// Runs lemma0, lemma1, lemma2, lemma3 and theorem_finite on each algebra,
// one report record per (algebra, check), in input order.
std::vector<ReportRecord> verify_lemmas(const std::vector<Algebra>& algebras,
                                        std::size_t jobs = 1);
std::vector<ReportRecord> verify_lemmas(const Algebra& algebra);

}  // namespace bck::lab
