#include <doctest.h>

#include <random>

#include "bck/enumeration.hpp"
#include "bck/terms.hpp"

using namespace bck;

namespace {

Term random_term(std::mt19937& rng, int depth) {
  static const char* names[] = {"x", "y", "z", "u"};
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 4);
  const int k = pick(rng);
  if (k < 4) return Term::variable(names[k]);
  if (k == 4) return Term::zero();
  return random_term(rng, depth - 1) - random_term(rng, depth - 1);
}

}  // namespace

TEST_CASE("parse axiom (1) as an identity") {
  const auto s = parse_sentence("((x-y)-(x-z))-(z-y) = 0");
  REQUIRE(std::holds_alternative<Identity>(s));
  const auto& id = std::get<Identity>(s);
  const auto x = Term::variable("x"), y = Term::variable("y"),
             z = Term::variable("z");
  CHECK(id.lhs == ((x - y) - (x - z)) - (z - y));
  CHECK(id.rhs == Term::zero());
}

TEST_CASE("parse axiom (2) and the quasi-identity (4)") {
  const auto two = parse_sentence("x-0 = x");
  REQUIRE(std::holds_alternative<Identity>(two));
  CHECK(std::get<Identity>(two).lhs == Term::variable("x") - Term::zero());

  const auto four = parse_sentence("x-y = 0 & y-x = 0 => x = y");
  REQUIRE(std::holds_alternative<QuasiIdentity>(four));
  const auto& q = std::get<QuasiIdentity>(four);
  CHECK(q.premises.size() == 2);
  CHECK(q.conclusion.lhs == Term::variable("x"));
}

TEST_CASE("difference is left-associative and <= desugars") {
  const auto x = Term::variable("x"), y = Term::variable("y"),
             z = Term::variable("z");
  CHECK(parse_term("x-y-z") == (x - y) - z);
  CHECK(parse_term("x - (y - z)") == x - (y - z));
  CHECK(parse_term("x−y") == x - y);
  const auto s = parse_sentence("x-(x-y) <= y");
  REQUIRE(std::holds_alternative<Identity>(s));
  CHECK(std::get<Identity>(s).lhs == (x - (x - y)) - y);
  CHECK(std::get<Identity>(s).rhs == Term::zero());
}

TEST_CASE("parse dispatches between terms and sentences") {
  CHECK(std::holds_alternative<Term>(parse("x-(y-0)")));
  CHECK(std::holds_alternative<Sentence>(parse("x-(y-0) = x")));
  CHECK(std::holds_alternative<Sentence>(parse("x <= y => x = x")));
}

TEST_CASE("syntax errors carry positions") {
  auto position = [](const char* input) -> std::size_t {
    try {
      parse_sentence(input);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::size_t(-1);
  };
  CHECK(position("x-(y") == 4);
  CHECK(position("x - = y") == 4);
  CHECK(position("x-y") == 3);
  CHECK(position("x = y & y = x") == 13);
  CHECK(position("x = 1") == 4);
  CHECK(position("x = y )") == 6);
  CHECK(position("x # y") == 2);
  CHECK_THROWS_AS(parse_term("x = y"), ParseError);
}

TEST_CASE("printing then parsing is the identity (random terms)") {
  std::mt19937 rng(20240617);
  for (int i = 0; i < 500; ++i) {
    const auto t = random_term(rng, 4);
    CHECK(parse_term(to_string(t)) == t);
    const Sentence s = Identity{t, random_term(rng, 3)};
    CHECK(parse_sentence(to_string(s)) == s);
  }
  const auto q = parse_sentence("x-y = 0 & y-x = 0 => x = y");
  CHECK(to_string(q) == "x-y = 0 & y-x = 0 => x = y");
  CHECK(parse_sentence(to_string(q)) == q);
}

TEST_CASE("variables") {
  CHECK(parse_term("(z-x)-(z-y)").variables() ==
        std::vector<std::string>{"z", "x", "y"});
  CHECK(variables(parse_sentence("(z-x) = y")) ==
        std::vector<std::string>{"x", "y", "z"});
  CHECK(Term::zero().variables().empty());
}

TEST_CASE("evaluate") {
  const auto l3 = builtin("L3"), h3 = builtin("H3");
  const auto t = parse_term("(x-y)-y");
  CHECK(evaluate(t, l3, {{"x", 2}, {"y", 1}}) == 0);
  CHECK(evaluate(t, h3, {{"x", 2}, {"y", 1}}) == 2);
  for (Element x = 0; x < 3; ++x)
    CHECK(evaluate(parse_term("0-x"), l3, {{"x", x}}) == 0);
  CHECK_THROWS_AS(evaluate(t, l3, {{"x", 2}}), UnboundVariable);
  CHECK_THROWS_AS(evaluate(t, l3, {{"x", 2}, {"y", 5}}), RangeError);
}

TEST_CASE("holds returns the lexicographically first counterexample") {
  const auto l3 = builtin("L3"), h3 = builtin("H3");
  const auto s = parse_sentence("(x-y)-y = x-y");
  CHECK(holds(s, h3));
  const auto cx = find_counterexample(s, l3);
  REQUIRE(cx.has_value());
  CHECK(*cx == Assignment{{"x", 2}, {"y", 1}});

  // Independent scan over the table.
  std::optional<std::pair<int, int>> first;
  for (int x = 0; x < 3 && !first; ++x)
    for (int y = 0; y < 3 && !first; ++y)
      if (l3(l3(x, y), y) != l3(x, y)) first = {x, y};
  REQUIRE(first);
  CHECK((*cx)[0].second == first->first);
  CHECK((*cx)[1].second == first->second);
}

TEST_CASE("closed sentences and quasi-identities") {
  const auto c2 = builtin("C2");
  CHECK(holds(parse_sentence("0 = 0-0"), c2));
  CHECK(holds(parse_sentence("x-y = x => y-x = y"), builtin("L3")));
  CHECK_FALSE(holds(parse_sentence("x-y = 0 => x = y"), builtin("L3")));
  CHECK_FALSE(holds(parse_sentence("x = 0"), c2));
}

TEST_CASE("iter_power") {
  const auto l3 = builtin("L3"), h3 = builtin("H3");
  CHECK(iter_power(l3, 2, 1, 2) == 0);
  for (std::size_t k = 0; k < 6; ++k) CHECK(iter_power(h3, 2, 1, k) == 2);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(iter_power(l3, a, b, 0) == a);
}

TEST_CASE("validator and sentence checker agree on every enumerated algebra") {
  const auto laws = bck_laws();
  CHECK(laws.size() == 7);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& a : enumerate(n))
      for (const auto& [label, law] : laws) {
        INFO(label);
        CHECK(holds(law, a));
      }
}

TEST_CASE("antitone in the subtrahend and iter_power decreasing") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& alg : enumerate(n))
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c)
            if (alg.leq(b, c)) CHECK(alg.leq(alg(a, c), alg(a, b)));
          for (std::size_t k = 0; k < n; ++k)
            CHECK(alg.leq(iter_power(alg, a, b, k + 1), iter_power(alg, a, b, k)));
        }
}
