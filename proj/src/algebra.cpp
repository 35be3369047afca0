#include "bck/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace bck {

namespace {

std::string describe(Axiom axiom, const std::vector<Element>& witness) {
  std::ostringstream out;
  out << "axiom violation " << axiom_label(axiom) << " \"" << axiom_law(axiom)
      << "\" at";
  for (auto w : witness) out << ' ' << static_cast<int>(w);
  return out.str();
}

}  // namespace

std::string_view axiom_label(Axiom axiom) {
  switch (axiom) {
    case Axiom::bck_identity: return "(1)";
    case Axiom::right_zero: return "(2)";
    case Axiom::left_zero: return "(3)";
    case Axiom::antisymmetry: return "(4)";
    case Axiom::self_zero: return "(5)";
    case Axiom::contraction: return "(6)";
    case Axiom::exchange: return "(7)";
  }
  return "?";
}

std::string_view axiom_law(Axiom axiom) {
  switch (axiom) {
    case Axiom::bck_identity: return "((x-y)-(x-z))-(z-y) = 0";
    case Axiom::right_zero: return "x-0 = x";
    case Axiom::left_zero: return "0-x = 0";
    case Axiom::antisymmetry: return "x-y = 0 = y-x => x = y";
    case Axiom::self_zero: return "xx = 0";
    case Axiom::contraction: return "(x-(x-y))-y = 0";
    case Axiom::exchange: return "(x-y)-z = (x-z)-y";
  }
  return "?";
}

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<Element> witness)
    : std::runtime_error(describe(axiom, witness)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

std::optional<Violation> first_violation(std::size_t n,
                                         std::span<const Element> t) {
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    if (at(a, 0) != a) return Violation{Axiom::right_zero, {Element(a)}};
  for (std::size_t a = 0; a < n; ++a)
    if (at(0, a) != 0) return Violation{Axiom::left_zero, {Element(a)}};
  for (std::size_t a = 0; a < n; ++a)
    if (at(a, a) != 0) return Violation{Axiom::self_zero, {Element(a)}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(at(a, b), at(a, c)), at(c, b)) != 0)
          return Violation{Axiom::bck_identity,
                           {Element(a), Element(b), Element(c)}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (at(a, b) == 0 && at(b, a) == 0)
        return Violation{Axiom::antisymmetry, {Element(a), Element(b)}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (at(at(a, at(a, b)), b) != 0)
        return Violation{Axiom::contraction, {Element(a), Element(b)}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(at(a, c), b))
          return Violation{Axiom::exchange,
                           {Element(a), Element(b), Element(c)}};
  return std::nullopt;
}

Algebra Algebra::validate(std::size_t n, std::vector<Element> table) {
  if (n == 0 || n > max_carrier_size)
    throw RangeError("carrier size " + std::to_string(n) +
                     " outside 1.." + std::to_string(max_carrier_size));
  if (table.size() != n * n)
    throw RangeError("table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(n * n));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw RangeError("entry " + std::to_string(table[i]) + " at (" +
                       std::to_string(i / n) + "," + std::to_string(i % n) +
                       ") out of range 0.." + std::to_string(n - 1));
  if (auto v = first_violation(n, table))
    throw AxiomViolation(v->axiom, std::move(v->witness));
  return Algebra(n, std::move(table));
}

Algebra Algebra::validate(const std::vector<std::vector<int>>& rows) {
  const auto n = rows.size();
  if (n == 0 || n > max_carrier_size)
    throw RangeError("carrier size " + std::to_string(n) + " out of range");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw RangeError("row " + std::to_string(a) + " has " +
                       std::to_string(rows[a].size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      const int v = rows[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw RangeError("entry " + std::to_string(v) + " at (" +
                         std::to_string(a) + "," + std::to_string(b) +
                         ") out of range 0.." + std::to_string(n - 1));
      table.push_back(static_cast<Element>(v));
    }
  }
  return validate(n, std::move(table));
}

std::vector<std::vector<int>> Algebra::rows() const {
  std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) out[a][b] = sub(a, b);
  return out;
}

Algebra builtin(std::string_view name) {
  if (name == "C2") return Algebra::validate({{0, 0}, {1, 0}});
  if (name == "L3") return Algebra::validate({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}});
  if (name == "H3") return Algebra::validate({{0, 0, 0}, {1, 0, 0}, {2, 2, 0}});
  throw std::invalid_argument("unknown built-in algebra '" + std::string(name) +
                              "' (expected C2, L3 or H3)");
}

bool is_builtin_name(std::string_view name) {
  return name == "C2" || name == "L3" || name == "H3";
}

Algebra trivial_algebra() { return Algebra::validate(1, {0}); }

OrderRelation::OrderRelation(const Algebra& algebra)
    : size_(algebra.size()), leq_(size_ * size_) {
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      leq_[a * size_ + b] = algebra.leq(a, b);
}

bool OrderRelation::is_chain() const {
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = a + 1; b < size_; ++b)
      if (!comparable(a, b)) return false;
  return true;
}

std::vector<std::pair<Element, Element>> OrderRelation::hasse_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < size_ && covered; ++c)
        if (less(a, c) && less(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

namespace {

// Compares the table relabeled through `inverse` (new index -> old index)
// against `reference`, cell by cell in row-major order. Returns <0, 0, >0.
int compare_relabeled(std::size_t n, std::span<const Element> table,
                      std::span<const Element> perm,
                      std::span<const Element> inverse,
                      std::span<const Element> reference) {
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const Element v = perm[table[inverse[i] * n + inverse[j]]];
      const Element r = reference[i * n + j];
      if (v != r) return v < r ? -1 : 1;
    }
  return 0;
}

template <typename Visit>
void for_each_relabeling(std::size_t n, Visit&& visit) {
  std::vector<Element> perm(n), inverse(n);
  std::iota(inverse.begin(), inverse.end(), Element{0});
  do {
    for (std::size_t i = 0; i < n; ++i) perm[inverse[i]] = Element(i);
    if (!visit(std::span<const Element>(perm),
               std::span<const Element>(inverse)))
      return;
  } while (std::next_permutation(inverse.begin() + 1, inverse.end()));
}

std::vector<Element> apply_relabeling(std::size_t n,
                                      std::span<const Element> table,
                                      std::span<const Element> perm) {
  std::vector<Element> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out[perm[a] * n + perm[b]] = perm[table[a * n + b]];
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Algebra& algebra) {
  const auto n = algebra.size();
  const auto table = algebra.table();
  std::vector<Element> best(table.begin(), table.end());
  for_each_relabeling(n, [&](auto perm, auto inverse) {
    if (compare_relabeled(n, table, perm, inverse, best) < 0)
      best = apply_relabeling(n, table, perm);
    return true;
  });
  return CanonicalForm{n, std::move(best)};
}

bool is_canonical(std::size_t n, std::span<const Element> table) {
  bool canonical = true;
  for_each_relabeling(n, [&](auto perm, auto inverse) {
    if (compare_relabeled(n, table, perm, inverse, table) < 0)
      canonical = false;
    return canonical;
  });
  return canonical;
}

Algebra relabel(const Algebra& algebra, std::span<const Element> perm) {
  const auto n = algebra.size();
  if (perm.size() != n || perm[0] != 0)
    throw std::invalid_argument("relabeling must be a permutation fixing 0");
  std::vector<bool> hit(n);
  for (auto p : perm) {
    if (p >= n || hit[p])
      throw std::invalid_argument("relabeling is not a permutation");
    hit[p] = true;
  }
  return Algebra::validate(n, apply_relabeling(n, algebra.table(), perm));
}

Algebra from_canonical(const CanonicalForm& form) {
  return Algebra::validate(form.size, form.table);
}

namespace {

void extend_embedding(const Algebra& target, const Algebra& pattern,
                      Embedding& map, std::vector<bool>& used,
                      std::size_t next, std::vector<Embedding>& out,
                      bool first_only) {
  const auto m = pattern.size();
  if (next == m) {
    out.push_back(map);
    return;
  }
  for (std::size_t image = 1; image < target.size(); ++image) {
    if (used[image]) continue;
    map[next] = Element(image);
    bool consistent = true;
    // Every product whose three elements are already mapped must commute.
    for (std::size_t a = 0; a <= next && consistent; ++a)
      for (std::size_t b = 0; b <= next && consistent; ++b) {
        const auto c = pattern(a, b);
        if (c > next || (a != next && b != next && c != next)) continue;
        consistent = target(map[a], map[b]) == map[c];
      }
    if (!consistent) continue;
    used[image] = true;
    extend_embedding(target, pattern, map, used, next + 1, out, first_only);
    used[image] = false;
    if (first_only && !out.empty()) return;
  }
}

std::vector<Embedding> search_embeddings(const Algebra& target,
                                         const Algebra& pattern,
                                         bool first_only) {
  std::vector<Embedding> out;
  if (pattern.size() > target.size()) return out;
  Embedding map(pattern.size(), 0);
  std::vector<bool> used(target.size());
  used[0] = true;
  extend_embedding(target, pattern, map, used, 1, out, first_only);
  return out;
}

}  // namespace

std::vector<Embedding> find_embeddings(const Algebra& target,
                                       const Algebra& pattern) {
  return search_embeddings(target, pattern, false);
}

bool embeds(const Algebra& target, const Algebra& pattern) {
  return !search_embeddings(target, pattern, true).empty();
}

Algebra parse_algebra(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw FormatError("empty algebra input");
  if (text[start] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(std::string("invalid algebra JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("table") || !doc["table"].is_array())
      throw FormatError("algebra JSON needs a \"table\" array");
    std::vector<std::vector<int>> rows;
    try {
      rows = doc["table"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("algebra JSON table: ") + e.what());
    }
    if (doc.contains("size") &&
        (!doc["size"].is_number_integer() ||
         doc["size"].get<long long>() != static_cast<long long>(rows.size())))
      throw FormatError("algebra JSON \"size\" does not match its table");
    return Algebra::validate(rows);
  }

  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n <= 0 || n > static_cast<long long>(max_carrier_size))
    throw FormatError("algebra text must start with a size in 1..255");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (auto& row : rows)
    for (auto& cell : row)
      if (!(in >> cell))
        throw FormatError("algebra text ended early, expected " +
                          std::to_string(n * n) + " table entries");
  std::string extra;
  if (in >> extra) throw FormatError("trailing data after algebra table");
  return Algebra::validate(rows);
}

std::string to_text(const Algebra& algebra) {
  std::ostringstream out;
  const auto n = algebra.size();
  out << n << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      out << (b ? " " : "") << static_cast<int>(algebra(a, b));
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Algebra& algebra) {
  nlohmann::ordered_json doc;
  doc["size"] = algebra.size();
  doc["table"] = algebra.rows();
  return doc.dump();
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open algebra file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

}  // namespace bck
