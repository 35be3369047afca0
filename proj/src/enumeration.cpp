#include "bck/enumeration.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bck {

namespace {

constexpr Element unknown = 0xff;

// Cell-by-cell backtracking over the free cells (a, b), a, b != 0, a != b,
// in row-major order. Row 0, column 0 and the diagonal are fixed.
class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(n), table_(n * n, unknown) {
    for (std::size_t a = 0; a < n; ++a) {
      at(a, 0) = Element(a);
      at(0, a) = 0;
      at(a, a) = 0;
    }
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b)
        if (a != b) free_.push_back(a * n + b);
  }

  std::size_t first_cell_choices() const { return free_.empty() ? 1 : n_; }

  // Explores the subtree where the first free cell holds `first`.
  void run(std::size_t first, std::vector<std::vector<Element>>& out) {
    if (free_.empty()) {
      if (is_canonical(n_, table_)) out.push_back(table_);
      return;
    }
    if (assign(0, Element(first))) descend(1, out);
    table_[free_[0]] = unknown;
  }

 private:
  Element& at(std::size_t a, std::size_t b) { return table_[a * n_ + b]; }
  Element get(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }

  void descend(std::size_t depth, std::vector<std::vector<Element>>& out) {
    if (depth == free_.size()) {
      if (is_canonical(n_, table_) && !first_violation(n_, table_))
        out.push_back(table_);
      return;
    }
    for (std::size_t v = 0; v < n_; ++v)
      if (assign(depth, Element(v))) descend(depth + 1, out);
    table_[free_[depth]] = unknown;
  }

  bool assign(std::size_t depth, Element v) {
    const auto cell = free_[depth];
    table_[cell] = v;
    const auto a = cell / n_, b = cell % n_;
    if (v == 0 && get(b, a) == 0) return false;
    return consistent();
  }

  // Axiom (1) and law (7) on every triple whose cells are all known.
  bool consistent() const {
    for (std::size_t a = 1; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        const Element ab = get(a, b);
        if (ab == unknown) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          const Element ac = get(a, c), cb = get(c, b);
          if (ac != unknown && cb != unknown) {
            const Element x = get(ab, ac);
            if (x != unknown) {
              const Element y = get(x, cb);
              if (y != unknown && y != 0) return false;
            }
          }
          if (ac != unknown) {
            const Element l = get(ab, c), r = get(ac, b);
            if (l != unknown && r != unknown && l != r) return false;
          }
        }
      }
    return true;
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<std::size_t> free_;
};

}  // namespace

std::vector<Algebra> enumerate(std::size_t n, const EnumerateOptions& options) {
  if (n == 0) throw std::invalid_argument("algebra size must be at least 1");
  if (n > options.max_size)
    throw SizeGuardExceeded("enumeration limited to size " +
                            std::to_string(options.max_size) + ", got " +
                            std::to_string(n));
  const auto branches = TableSearch(n).first_cell_choices();
  std::vector<std::vector<std::vector<Element>>> found(branches);
  parallel_for(branches, options.jobs, [&](std::size_t i) {
    TableSearch search(n);
    search.run(i, found[i]);
  });
  std::vector<std::vector<Element>> tables;
  for (auto& part : found)
    for (auto& t : part) tables.push_back(std::move(t));
  std::sort(tables.begin(), tables.end());
  std::vector<Algebra> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(Algebra::validate(n, std::move(t)));
  return out;
}

std::size_t count(std::size_t n, const EnumerateOptions& options) {
  return enumerate(n, options).size();
}

std::string algebra_id(const CanonicalForm& form) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  mix(static_cast<std::uint8_t>(form.size));
  for (auto e : form.table) mix(e);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return "bck" + std::to_string(form.size) + "-" + hex;
}

CatalogRecord make_record(const Algebra& algebra) {
  auto form = canonical_form(algebra);
  const auto canonical = from_canonical(form);
  CatalogRecord record;
  record.algebra_id = algebra_id(form);
  record.size = form.size;
  record.table = form.table;
  record.flags.is_chain = order(canonical).is_chain();
  record.flags.classification = classify(canonical).kind;
  record.flags.embeds_C2 = embeds(canonical, builtin("C2"));
  record.flags.embeds_L3 = embeds(canonical, builtin("L3"));
  record.flags.embeds_H3 = embeds(canonical, builtin("H3"));
  return record;
}

std::vector<CatalogRecord> make_records(const std::vector<Algebra>& algebras,
                                        std::size_t jobs) {
  std::vector<CatalogRecord> out(algebras.size());
  parallel_for(algebras.size(), jobs,
               [&](std::size_t i) { out[i] = make_record(algebras[i]); });
  return out;
}

CorruptRecord::CorruptRecord(std::size_t line, const std::string& reason)
    : std::runtime_error("corrupt catalog record at line " +
                         std::to_string(line) + ": " + reason),
      line_(line) {}

namespace {

nlohmann::ordered_json to_json(const CatalogRecord& record) {
  nlohmann::ordered_json doc;
  doc["algebra_id"] = record.algebra_id;
  doc["size"] = record.size;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < record.size; ++a) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < record.size; ++b)
      row.push_back(record.table[a * record.size + b]);
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  nlohmann::ordered_json flags;
  flags["is_chain"] = record.flags.is_chain;
  flags["classification"] = std::string(to_string(record.flags.classification));
  flags["embeds_C2"] = record.flags.embeds_C2;
  flags["embeds_L3"] = record.flags.embeds_L3;
  flags["embeds_H3"] = record.flags.embeds_H3;
  doc["flags"] = std::move(flags);
  return doc;
}

Classification parse_classification(const std::string& s) {
  for (auto c : {Classification::trivial, Classification::simple,
                 Classification::subdirectly_irreducible,
                 Classification::other})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown classification '" + s + "'");
}

CatalogRecord parse_record(const std::string& line) {
  const auto doc = nlohmann::json::parse(line);
  CatalogRecord record;
  record.algebra_id = doc.at("algebra_id").get<std::string>();
  record.size = doc.at("size").get<std::size_t>();
  const auto rows = doc.at("table").get<std::vector<std::vector<int>>>();
  const auto algebra = Algebra::validate(rows);
  if (algebra.size() != record.size)
    throw std::invalid_argument("size does not match table");
  record.table.assign(algebra.table().begin(), algebra.table().end());
  const auto& flags = doc.at("flags");
  record.flags.is_chain = flags.at("is_chain").get<bool>();
  record.flags.classification =
      parse_classification(flags.at("classification").get<std::string>());
  record.flags.embeds_C2 = flags.at("embeds_C2").get<bool>();
  record.flags.embeds_L3 = flags.at("embeds_L3").get<bool>();
  record.flags.embeds_H3 = flags.at("embeds_H3").get<bool>();

  const auto expected = make_record(algebra);
  if (expected.table != record.table)
    throw std::invalid_argument("table is not in canonical form");
  if (expected.algebra_id != record.algebra_id)
    throw std::invalid_argument("algebra_id does not match table digest");
  if (expected.flags != record.flags)
    throw std::invalid_argument("flags do not match table");
  return record;
}

}  // namespace

std::string to_json_line(const CatalogRecord& record) {
  return to_json(record).dump();
}

void write_catalog(std::ostream& out,
                   const std::vector<CatalogRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

void write_catalog(std::size_t n, const std::string& path,
                   const EnumerateOptions& options) {
  const auto records = make_records(enumerate(n, options), options.jobs);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  write_catalog(out, records);
  if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

std::vector<CatalogRecord> read_catalog(std::istream& in) {
  std::vector<CatalogRecord> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const std::exception& e) {
      throw CorruptRecord(number, e.what());
    }
  }
  return out;
}

std::vector<CatalogRecord> read_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open catalog " + path);
  return read_catalog(in);
}

}  // namespace bck
