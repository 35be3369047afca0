#include "bck/lab.hpp"

#include <algorithm>
#include <map>

#include "bck/detail/parallel.hpp"
#include "bck/structure.hpp"
#include "bck/terms.hpp"

namespace bck::lab {

std::string_view to_string(Pattern p) {
  return p == Pattern::L3 ? "L3" : "H3";
}

std::vector<Element> atoms(const Algebra& algebra) {
  const auto n = algebra.size();
  std::vector<Element> out;
  for (std::size_t a = 1; a < n; ++a) {
    bool minimal = true;
    for (std::size_t c = 1; c < n && minimal; ++c)
      if (c != a && algebra.leq(c, a)) minimal = false;
    if (minimal) out.push_back(Element(a));
  }
  return out;
}

std::optional<std::size_t> height(const Algebra& algebra, Element a,
                                  Element b) {
  if (a == 0) return 0;
  if (b == 0) throw ZeroBase("relative height needs a nonzero base");
  // a b^k descends in the order, so it reaches 0 or a fixed point within
  // |A| steps.
  Element current = a;
  for (std::size_t k = 1; k <= algebra.size(); ++k) {
    const Element next = algebra(current, b);
    if (next == 0) return k;
    if (next == current) return std::nullopt;
    current = next;
  }
  return std::nullopt;
}

HeightProfile height_profile(const Algebra& algebra, Element a) {
  HeightProfile profile;
  profile.element = a;
  profile.heights.resize(algebra.size());
  std::size_t bound = 0;
  bool bounded = true;
  for (std::size_t b = 1; b < algebra.size(); ++b) {
    profile.heights[b] = height(algebra, a, Element(b));
    if (profile.heights[b])
      bound = std::max(bound, *profile.heights[b]);
    else
      bounded = false;
  }
  if (bounded) profile.bound = bound;
  return profile;
}

namespace {

bool is_embedding(const Algebra& target, const Algebra& pattern,
                  const Embedding& map) {
  const auto m = pattern.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (map[i] == map[j]) return false;
  if (map[0] != 0) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (target(map[i], map[j]) != map[pattern(i, j)]) return false;
  return true;
}

}  // namespace

Lemma0Witness lemma0_witness(const Algebra& algebra) {
  if (algebra.size() <= 2)
    throw PreconditionFailed("needs more than two elements");
  if (!classify(algebra).is_si())
    throw PreconditionFailed("needs a subdirectly irreducible algebra");
  const auto found = atoms(algebra);
  if (found.empty()) throw NoAtom("algebra has no atom");
  const Element a = found.front();
  for (std::size_t bi = 1; bi < algebra.size(); ++bi) {
    const auto b = Element(bi);
    if (b == a) continue;
    const Element ba = algebra(b, a);
    const Element baa = algebra(ba, a);
    const Element c = algebra(ba, baa);
    std::optional<Lemma0Witness> candidate;
    if (c == a)
      candidate = Lemma0Witness{Pattern::L3, a, b, algebra(b, baa)};
    else if (c == 0)
      candidate = Lemma0Witness{Pattern::H3, a, b, ba};
    if (!candidate) continue;
    const auto pattern = builtin(to_string(candidate->pattern));
    if (is_embedding(algebra, pattern, candidate->embedding()))
      return *candidate;
  }
  throw VerificationFailure("no element yields a verified L3 or H3 chain");
}

Lemma1Result lemma1_atom(const Algebra& algebra, Element a) {
  if (classify(algebra).kind != Classification::simple)
    throw PreconditionFailed("needs a simple algebra");
  if (a == 0) throw NotApplicable("element must be nonzero");
  const auto profile = height_profile(algebra, a);
  if (!profile.bound) throw NotApplicable("relative heights are unbounded");
  const std::size_t n = *profile.bound;
  for (std::size_t b = 1; b < algebra.size(); ++b) {
    if (profile.heights[b] != n) continue;
    const Element candidate = iter_power(algebra, a, Element(b), n - 1);
    const auto all = atoms(algebra);
    if (std::find(all.begin(), all.end(), candidate) == all.end())
      throw VerificationFailure("a b^(n-1) = " + std::to_string(candidate) +
                                " is not an atom");
    return Lemma1Result{a, n, Element(b), candidate};
  }
  throw VerificationFailure("no base attains the height bound");
}

bool admissible(const Algebra& algebra, Element u, Element e) {
  if (u == 0 || e == 0) return false;
  const auto h = height(algebra, u, e);
  return h && *h >= 2;
}

std::vector<std::pair<Element, Element>> admissible_pairs(
    const Algebra& algebra) {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t u = 1; u < algebra.size(); ++u)
    for (std::size_t e = 1; e < algebra.size(); ++e)
      if (admissible(algebra, Element(u), Element(e)))
        out.emplace_back(Element(u), Element(e));
  return out;
}

PQSequences pq(const Algebra& algebra, Element u, Element e) {
  if (u == 0 || e == 0) throw NotApplicable("u and e must be nonzero");
  const auto h = height(algebra, u, e);
  if (!h) throw NotApplicable("height of u relative to e is unbounded");
  if (*h < 2) throw NotApplicable("height of u relative to e is below 2");
  PQSequences s{u, e, *h, {}, {}};
  s.P.resize(s.degree);
  s.Q.resize(s.degree);
  s.P[0] = u;
  for (std::size_t i = 1; i < s.degree; ++i) s.P[i] = algebra(s.P[i - 1], e);
  s.Q[s.degree - 1] = s.P[s.degree - 1];
  for (std::size_t i = s.degree - 1; i-- > 0;)
    s.Q[i] = algebra(s.P[i], s.Q[i + 1]);
  return s;
}

std::vector<LemmaViolation> check_lemma2(const Algebra& algebra) {
  std::vector<LemmaViolation> out;
  for (auto [u, e] : admissible_pairs(algebra)) {
    const auto s = pq(algebra, u, e);
    for (std::size_t i = 1; i < s.degree; ++i) {
      const Element v = algebra(s.Q[i], s.Q[i - 1]);
      if (v != 0) out.push_back({u, e, i, "Q_i - Q_(i-1) = 0", v});
    }
  }
  return out;
}

std::vector<LemmaViolation> check_lemma3(const Algebra& algebra) {
  std::vector<LemmaViolation> out;
  for (auto [u, e] : admissible_pairs(algebra)) {
    const auto s = pq(algebra, u, e);
    const Element q1 = s.Q[1];
    const Element u_q1 = algebra(u, q1);
    if (const Element v = algebra(q1, u_q1); v != 0)
      out.push_back({u, e, 1, "Q_1 - (u - Q_1) = 0", v});
    if (const Element v = algebra(algebra(u_q1, q1), e); v != 0)
      out.push_back({u, e, 1, "(u - Q_1) - Q_1 <= e", v});
  }
  return out;
}

std::optional<Pattern> TheoremCheck::pattern() const {
  if (embeds_L3) return Pattern::L3;
  if (embeds_H3) return Pattern::H3;
  return std::nullopt;
}

TheoremCheck theorem_finite_check(const Algebra& algebra) {
  TheoremCheck check;
  check.applicable = algebra.size() > 2 && classify(algebra).is_si();
  if (!check.applicable) return check;
  check.embeds_L3 = embeds(algebra, builtin("L3"));
  check.embeds_H3 = embeds(algebra, builtin("H3"));
  return check;
}

FreeAlgebra free_algebra_probe(const Algebra& generator, std::size_t rank,
                               std::size_t coordinate_guard,
                               std::size_t element_guard) {
  const auto g = generator.size();
  std::size_t coordinates = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    coordinates *= g;
    if (coordinates > coordinate_guard)
      throw GuardExceeded("|G|^k exceeds " + std::to_string(coordinate_guard));
  }
  element_guard = std::min(element_guard, max_carrier_size);

  // Coordinate j is an assignment of the generators: digit i of j in base
  // |G|, first generator most significant.
  using Tuple = std::vector<Element>;
  std::vector<Tuple> elements{Tuple(coordinates, 0)};
  std::map<Tuple, Element> index{{elements[0], 0}};
  auto intern = [&](Tuple t) -> Element {
    auto [it, inserted] = index.emplace(t, Element(0));
    if (inserted) {
      if (elements.size() >= element_guard)
        throw GuardExceeded("generated subalgebra exceeds " +
                            std::to_string(element_guard) + " elements");
      it->second = Element(elements.size());
      elements.push_back(std::move(t));
    }
    return it->second;
  };

  std::vector<Element> generators;
  for (std::size_t i = 0; i < rank; ++i) {
    Tuple projection(coordinates);
    for (std::size_t j = 0; j < coordinates; ++j) {
      std::size_t digit = j;
      for (std::size_t r = i + 1; r < rank; ++r) digit /= g;
      projection[j] = Element(digit % g);
    }
    generators.push_back(intern(std::move(projection)));
  }

  // Closure: every pair is visited once the later of the two is known.
  for (std::size_t done = 0; done < elements.size(); ++done)
    for (std::size_t other = 0; other <= done; ++other)
      for (auto [x, y] : {std::pair{done, other}, std::pair{other, done}}) {
        Tuple t(coordinates);
        for (std::size_t j = 0; j < coordinates; ++j)
          t[j] = generator(elements[x][j], elements[y][j]);
        intern(std::move(t));
      }

  const auto n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Tuple t(coordinates);
      for (std::size_t j = 0; j < coordinates; ++j)
        t[j] = generator(elements[x][j], elements[y][j]);
      table[x * n + y] = index.at(t);
    }
  return FreeAlgebra{Algebra::validate(n, std::move(table)),
                     std::move(generators)};
}

namespace {

Json violations_json(const std::vector<LemmaViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    Json item;
    item["u"] = v.u;
    item["e"] = v.e;
    item["i"] = v.index;
    item["claim"] = v.claim;
    item["value"] = v.value;
    out.push_back(std::move(item));
  }
  return out;
}

ReportRecord lemma0_record(const Algebra& algebra, const std::string& id,
                           const ClassifyResult& kind) {
  ReportRecord r{id, "lemma0_witness", Status::vacuous, Json::object()};
  if (!kind.is_si() || algebra.size() <= 2) return r;
  const auto found = atoms(algebra);
  if (found.empty()) {
    r.witness["reason"] = "no atom";
    return r;
  }
  Json problems = Json::array();
  // The atom of a si algebra is unique, below every nonzero element, and
  // lies in the monolith.
  const Element a = found.front();
  if (found.size() != 1) problems.push_back("atom not unique");
  for (std::size_t x = 1; x < algebra.size(); ++x)
    if (!algebra.leq(a, Element(x))) {
      problems.push_back("atom not below " + std::to_string(x));
      break;
    }
  if (!kind.monolith->contains(a)) problems.push_back("atom outside monolith");
  try {
    const auto w = lemma0_witness(algebra);
    r.witness["pattern"] = std::string(to_string(w.pattern));
    r.witness["atom"] = w.atom;
    r.witness["b"] = w.base;
    r.witness["one"] = w.one;
    const auto all = find_embeddings(algebra, builtin(to_string(w.pattern)));
    if (std::find(all.begin(), all.end(), w.embedding()) == all.end())
      problems.push_back("witness not among brute-force embeddings");
  } catch (const std::exception& e) {
    problems.push_back(e.what());
  }
  r.status = problems.empty() ? Status::ok : Status::violation;
  if (!problems.empty()) r.witness["problems"] = std::move(problems);
  return r;
}

ReportRecord lemma1_record(const Algebra& algebra, const std::string& id,
                           const ClassifyResult& kind) {
  ReportRecord r{id, "lemma1_atom", Status::vacuous, Json::object()};
  if (kind.kind != Classification::simple) return r;
  Json results = Json::array();
  Json problems = Json::array();
  for (std::size_t a = 1; a < algebra.size(); ++a) {
    try {
      const auto res = lemma1_atom(algebra, Element(a));
      results.push_back(
          Json{{"a", res.element}, {"n", res.bound}, {"b", res.base},
               {"atom", res.atom}});
    } catch (const NotApplicable&) {
      // Unbounded heights; nothing to certify for this element.
    } catch (const std::exception& e) {
      problems.push_back(Json{{"a", a}, {"error", e.what()}});
    }
  }
  if (results.empty() && problems.empty()) return r;
  r.witness["results"] = std::move(results);
  if (!problems.empty()) {
    r.witness["problems"] = std::move(problems);
    r.status = Status::violation;
  } else {
    r.status = Status::ok;
  }
  return r;
}

ReportRecord pq_record(const Algebra& algebra, const std::string& id,
                       const std::string& check,
                       const std::vector<LemmaViolation>& violations) {
  const auto pairs = admissible_pairs(algebra).size();
  ReportRecord r{id, check, Status::ok, Json::object()};
  r.witness["pairs"] = pairs;
  if (!violations.empty()) {
    r.status = Status::violation;
    r.witness["violations"] = violations_json(violations);
  } else if (pairs == 0) {
    r.status = Status::vacuous;
  }
  return r;
}

ReportRecord theorem_record(const Algebra& algebra, const std::string& id) {
  const auto check = theorem_finite_check(algebra);
  ReportRecord r{id, "theorem_finite", Status::vacuous, Json::object()};
  if (!check.applicable) return r;
  r.witness["embeds_L3"] = check.embeds_L3;
  r.witness["embeds_H3"] = check.embeds_H3;
  if (auto p = check.pattern()) {
    r.status = Status::ok;
    r.witness["pattern"] = std::string(to_string(*p));
  } else {
    r.status = Status::violation;
  }
  return r;
}

}  // namespace

std::vector<ReportRecord> verify_lemmas(const Algebra& algebra) {
  const auto id = report_id(algebra);
  const auto kind = classify(algebra);
  return {lemma0_record(algebra, id, kind), lemma1_record(algebra, id, kind),
          pq_record(algebra, id, "lemma2", check_lemma2(algebra)),
          pq_record(algebra, id, "lemma3", check_lemma3(algebra)),
          theorem_record(algebra, id)};
}

std::vector<ReportRecord> verify_lemmas(const std::vector<Algebra>& algebras,
                                        std::size_t jobs) {
  std::vector<std::vector<ReportRecord>> parts(algebras.size());
  parallel_for(algebras.size(), jobs,
               [&](std::size_t i) { parts[i] = verify_lemmas(algebras[i]); });
  std::vector<ReportRecord> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

}  // namespace bck::lab
