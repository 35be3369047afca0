#include <doctest.h>

#include <sstream>

#include "bck/enumeration.hpp"
#include "oracles.hpp"

using namespace bck;

namespace {

oracle::Table as_table(const Algebra& a) {
  return oracle::Table(a.table().begin(), a.table().end());
}

}  // namespace

TEST_CASE("small counts agree with the naive search") {
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    const auto classes = oracle::naive_classes(n);
    const auto found = enumerate(n);
    CHECK(found.size() == classes.size());
    std::set<oracle::Table> mine;
    for (const auto& a : found) mine.insert(as_table(a));
    CHECK(mine == classes);
  }
  CHECK(count(1) == 1);
  CHECK(count(2) == 1);
  CHECK(count(3) == 3);
  CHECK(count(4) == 14);
}

TEST_CASE("counts at sizes 5 and 6") {
  CHECK(count(5, {.jobs = 4}) == 88);
  CHECK(count(6, {.jobs = 8}) == 775);
}

TEST_CASE("output is canonical, sorted and fixes the forced cells") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = enumerate(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& a = all[i];
      CHECK(is_canonical(n, a.table()));
      CHECK(oracle::is_bck(n, as_table(a)));
      for (Element x = 0; x < n; ++x) {
        CHECK(a(x, 0) == x);
        CHECK(a(0, x) == 0);
        CHECK(a(x, x) == 0);
      }
      if (i > 0) CHECK(canonical_form(all[i - 1]) < canonical_form(a));
    }
  }
}

TEST_CASE("the three-element chains are exactly L3 and H3") {
  std::vector<Algebra> chains;
  for (const auto& a : enumerate(3))
    if (order(a).is_chain()) chains.push_back(a);
  REQUIRE(chains.size() == 2);
  const auto l3 = builtin("L3"), h3 = builtin("H3");
  const bool straight = oracle::isomorphic(chains[0], l3) && oracle::isomorphic(chains[1], h3);
  const bool swapped = oracle::isomorphic(chains[0], h3) && oracle::isomorphic(chains[1], l3);
  CHECK((straight || swapped));
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(enumerate(7), SizeGuardExceeded);
  CHECK_THROWS_AS(enumerate(8, {.jobs = 1, .max_size = unsafe_enumeration_guard}),
                  SizeGuardExceeded);
  CHECK_THROWS_AS(enumerate(0), std::invalid_argument);
}

TEST_CASE("result does not depend on the number of jobs") {
  const auto one = enumerate(5, {.jobs = 1});
  CHECK(enumerate(5, {.jobs = 2}) == one);
  CHECK(enumerate(5, {.jobs = 8}) == one);

  auto text = [](std::size_t jobs) {
    std::ostringstream out;
    write_catalog(out, make_records(enumerate(5, {.jobs = jobs}), jobs));
    return out.str();
  };
  CHECK(text(1) == text(8));
}

TEST_CASE("algebra ids") {
  CHECK(algebra_id(canonical_form(builtin("C2"))) == "bck2-fe16b02e1fc7daec");
  CHECK(algebra_id(canonical_form(trivial_algebra())) == "bck1-082f2207b4e88cc4");
  std::set<std::string> ids;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& a : enumerate(n)) ids.insert(algebra_id(canonical_form(a)));
  CHECK(ids.size() == 1 + 1 + 3 + 14 + 88);
}

TEST_CASE("catalog flags") {
  const auto two = make_records(enumerate(2));
  REQUIRE(two.size() == 1);
  CHECK(two[0].flags.embeds_C2);
  CHECK(two[0].flags.is_chain);
  CHECK(two[0].flags.classification == Classification::simple);

  const auto l3 = make_record(builtin("L3"));
  const auto h3 = make_record(builtin("H3"));
  CHECK(l3.flags.embeds_L3);
  CHECK_FALSE(l3.flags.embeds_H3);
  CHECK(h3.flags.embeds_H3);
  CHECK_FALSE(h3.flags.embeds_L3);
  CHECK(h3.flags.classification == Classification::subdirectly_irreducible);

  const auto three = make_records(enumerate(3));
  std::size_t with_l3 = 0, with_h3 = 0;
  for (const auto& r : three) {
    with_l3 += r.flags.embeds_L3;
    with_h3 += r.flags.embeds_H3;
  }
  CHECK(with_l3 == 1);
  CHECK(with_h3 == 1);
  CHECK(std::find(three.begin(), three.end(), l3) != three.end());
  CHECK(std::find(three.begin(), three.end(), h3) != three.end());

  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& r : make_records(enumerate(n))) {
      CHECK(r.flags.embeds_C2);
      CHECK(r.flags.is_chain == order(r.algebra()).is_chain());
    }
}

TEST_CASE("catalog round trip") {
  const auto records = make_records(enumerate(4));
  std::ostringstream out;
  write_catalog(out, records);
  std::istringstream in(out.str());
  CHECK(read_catalog(in) == records);

  const auto line = to_json_line(make_record(builtin("C2")));
  CHECK(line.rfind(R"({"algebra_id":"bck2-fe16b02e1fc7daec","size":2,"table":[[0,0],[1,0]],"flags":{)", 0) == 0);

  std::istringstream blanks("\n" + line + "\n\n");
  CHECK(read_catalog(blanks).size() == 1);
}

TEST_CASE("corrupt records report their line") {
  const auto good = to_json_line(make_record(builtin("C2")));
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_catalog(in);
    } catch (const CorruptRecord& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(good + "\n" + good + "\n{not json\n") == 3);

  // Flags that disagree with the table.
  auto flipped = good;
  flipped.replace(flipped.find("\"is_chain\":true"), 15, "\"is_chain\":false");
  CHECK(line_of(good + "\n" + flipped + "\n") == 2);

  // A table that is BCK but not in canonical form.
  const auto swapped = relabel(builtin("L3"), std::vector<Element>{0, 2, 1});
  auto record = make_record(builtin("L3"));
  record.table.assign(swapped.table().begin(), swapped.table().end());
  CHECK(line_of(to_json_line(record)) == 1);

  // A wrong id.
  auto bad_id = good;
  bad_id.replace(bad_id.find("fe16"), 4, "0000");
  CHECK(line_of(bad_id) == 1);
}
