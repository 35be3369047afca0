// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "bck/enumeration.hpp"
#include "bck/lab.hpp"
#include "bck/report.hpp"
#include "bck/structure.hpp"
#include "bck/terms.hpp"
#include "oracles.hpp"

using namespace bck;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

// Runs `body`, then fails the criterion if it exceeded `limit_s` seconds.
void criterion(int id, const char* title, double limit_s,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) {
    out.pass = false;
    out.detail += " [time limit exceeded]";
  }
  if (!out.pass) ++failures;
  std::printf("%s %2d %-38s %7.3f s (limit %g s)  %s\n", out.pass ? "PASS" : "FAIL",
              id, title, secs, limit_s, out.detail.c_str());
  std::fflush(stdout);
}

std::vector<Algebra> sizes(std::size_t lo, std::size_t hi) {
  std::vector<Algebra> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (auto& a : enumerate(n, {.jobs = 4})) out.push_back(std::move(a));
  return out;
}

std::vector<int> ints(const Embedding& e) { return {e.begin(), e.end()}; }

std::string catalog_text(std::size_t n, std::size_t jobs) {
  std::ostringstream out;
  write_catalog(out, make_records(enumerate(n, {.jobs = jobs}), jobs));
  return out.str();
}

std::string lemma_text(std::size_t n, std::size_t jobs) {
  std::string out;
  for (const auto& r : lab::verify_lemmas(enumerate(n, {.jobs = jobs}), jobs))
    out += to_json_line(r) + "\n";
  return out;
}

}  // namespace

int main() {
  const auto c2 = builtin("C2"), l3 = builtin("L3"), h3 = builtin("H3");

  criterion(1, "catalogue claims", 1.0, [&] {
    const auto two = enumerate(2);
    std::vector<Algebra> chains;
    for (const auto& a : enumerate(3))
      if (order(a).is_chain()) chains.push_back(a);
    const bool matched =
        chains.size() == 2 &&
        ((oracle::isomorphic(chains[0], l3) && oracle::isomorphic(chains[1], h3)) ||
         (oracle::isomorphic(chains[0], h3) && oracle::isomorphic(chains[1], l3)));
    return Outcome{two.size() == 1 && matched,
                   "size2=" + std::to_string(two.size()) +
                       " chains3=" + std::to_string(chains.size())};
  });

  criterion(2, "size-3 count vs naive oracle", 1.0, [&] {
    const auto naive = oracle::naive_classes(3).size();
    const auto mine = count(3);
    return Outcome{naive == mine, "count=" + std::to_string(mine) +
                                      " oracle=" + std::to_string(naive)};
  });

  criterion(3, "C2 embeds in every algebra, n=2..5", 60.0, [&] {
    std::size_t total = 0, missing = 0;
    for (const auto& a : sizes(2, 5)) {
      ++total;
      if (!embeds(a, c2)) ++missing;
    }
    return Outcome{missing == 0, std::to_string(total) + " algebras, " +
                                     std::to_string(missing) + " exceptions"};
  });

  criterion(4, "si algebras embed L3 or H3, n=3..5", 60.0, [&] {
    std::size_t si = 0, bad = 0;
    for (const auto& a : sizes(3, 5)) {
      if (!classify(a).is_si()) continue;
      ++si;
      const bool brute = !oracle::embeddings(a, l3).empty() ||
                         !oracle::embeddings(a, h3).empty();
      const auto t = lab::theorem_finite_check(a);
      if (!t.applicable || !t.ok() || !brute) ++bad;
    }
    return Outcome{bad == 0 && si > 0, std::to_string(si) + " si algebras, " +
                                           std::to_string(bad) + " exceptions"};
  });

  criterion(5, "atom witness chain, n=3..5", 60.0, [&] {
    std::size_t checked = 0, bad = 0;
    for (const auto& a : sizes(3, 5)) {
      if (!classify(a).is_si() || lab::atoms(a).empty()) continue;
      ++checked;
      const auto w = lab::lemma0_witness(a);
      const auto all = oracle::embeddings(a, builtin(lab::to_string(w.pattern)));
      if (std::find(all.begin(), all.end(), ints(w.embedding())) == all.end()) ++bad;
    }
    return Outcome{bad == 0 && checked > 0, std::to_string(checked) + " witnesses, " +
                                                std::to_string(bad) + " disagreements"};
  });

  criterion(6, "a b^(n-1) is an atom, n=2..5", 60.0, [&] {
    std::size_t checked = 0, bad = 0;
    for (const auto& a : sizes(2, 5)) {
      if (classify(a).kind != Classification::simple) continue;
      const auto all = lab::atoms(a);
      for (Element x = 1; x < a.size(); ++x) {
        if (!lab::height_profile(a, x).bound) continue;
        ++checked;
        const auto r = lab::lemma1_atom(a, x);
        if (std::find(all.begin(), all.end(), r.atom) == all.end()) ++bad;
      }
    }
    return Outcome{bad == 0 && checked > 0, std::to_string(checked) + " elements, " +
                                                std::to_string(bad) + " failures"};
  });

  criterion(7, "P/Q lemmas, n=2..5", 60.0, [&] {
    std::size_t pairs = 0, bad = 0;
    for (const auto& a : sizes(2, 5)) {
      pairs += lab::admissible_pairs(a).size();
      bad += lab::check_lemma2(a).size() + lab::check_lemma3(a).size();
    }
    return Outcome{bad == 0 && pairs > 0, std::to_string(pairs) + " pairs, " +
                                              std::to_string(bad) + " violations"};
  });

  criterion(8, "theta maximality, n=2..4", 60.0, [&] {
    std::size_t total = 0, bad = 0, oracle_mismatch = 0;
    for (const auto& a : sizes(2, 4)) {
      ++total;
      bad += verify_theta_maximality(a).size();
      std::set<std::vector<int>> mine;
      for (const auto& c : all_congruences(a))
        mine.emplace(c.representative.begin(), c.representative.end());
      if (mine != oracle::congruences(a)) ++oracle_mismatch;
    }
    return Outcome{bad == 0 && oracle_mismatch == 0,
                   std::to_string(total) + " algebras, " + std::to_string(bad) +
                       " violations, " + std::to_string(oracle_mismatch) +
                       " congruence mismatches"};
  });

  criterion(9, "separation identity", 1.0, [&] {
    const auto s = parse_sentence("(x-y)-y = x-y");
    const auto cx = find_counterexample(s, l3);
    // Exhaustive scan, x slowest.
    std::optional<std::pair<int, int>> first;
    for (int x = 0; x < 3 && !first; ++x)
      for (int y = 0; y < 3 && !first; ++y)
        if (l3(l3(x, y), y) != l3(x, y)) first = {x, y};
    bool h3_scan = true;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) h3_scan = h3_scan && h3(h3(x, y), y) == h3(x, y);
    const bool pass = holds(s, h3) && h3_scan && cx && first &&
                      *cx == Assignment{{"x", 2}, {"y", 1}} &&
                      first == std::pair{2, 1};
    return Outcome{pass, "L3 counterexample x=1, y=1/2"};
  });

  criterion(10, "free algebra probe over C2", 10.0, [&] {
    const auto f1 = lab::free_algebra_probe(c2, 1).algebra;
    const auto f2 = lab::free_algebra_probe(c2, 2).algebra;
    const auto o1 = oracle::generated_closure_size(c2, 2, {{0, 1}});
    const auto o2 = oracle::generated_closure_size(c2, 4, {{0, 0, 1, 1}, {0, 1, 0, 1}});
    bool laws = true;
    for (const auto& [label, law] : bck_laws())
      laws = laws && holds(law, f1) && holds(law, f2);
    const auto oracle_bck = [](const Algebra& a) {
      return oracle::is_bck(a.size(), oracle::Table(a.table().begin(), a.table().end()));
    };
    bool agree = true;
    for (const char* text : {"(x-y)-y = x-y", "x-(x-y) = y-(y-x)", "x-(y-x) = x",
                             "x-(x-y) = y", "(x-y)-(y-x) = x-y"}) {
      const auto s = parse_sentence(text);
      agree = agree && holds(s, f2) == holds(s, c2);
    }
    return Outcome{f1.size() == 2 && f2.size() == 6 && o1 == 2 && o2 == 6 && laws &&
                       oracle_bck(f1) && oracle_bck(f2) && agree,
                   "sizes " + std::to_string(f1.size()) + ", " +
                       std::to_string(f2.size()) + "; oracle " + std::to_string(o1) +
                       ", " + std::to_string(o2)};
  });

  criterion(11, "determinism across jobs 1, 2, 8", 120.0, [&] {
    const auto cat = catalog_text(5, 1), lem = lemma_text(5, 1);
    bool same = cat == catalog_text(5, 1) && lem == lemma_text(5, 1);
    for (std::size_t jobs : {2, 8})
      same = same && cat == catalog_text(5, jobs) && lem == lemma_text(5, jobs);
    return Outcome{same, "size 5 catalog and lemma reports byte-identical"};
  });

  criterion(12, "validator and sentence checker agree", 60.0, [&] {
    const auto laws = bck_laws();
    std::size_t total = 0, bad = 0;
    for (const auto& a : sizes(2, 5)) {
      ++total;
      bool all = oracle::is_bck(a.size(), oracle::Table(a.table().begin(), a.table().end()));
      for (const auto& [label, law] : laws) all = all && holds(law, a);
      if (!all) ++bad;
    }
    return Outcome{bad == 0, std::to_string(total) + " algebras, " +
                                 std::to_string(bad) + " disagreements"};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
