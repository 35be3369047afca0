#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/detail/parallel.hpp"
#include "bck/structure.hpp"

namespace bck {

inline constexpr std::size_t default_enumeration_guard = 6;
inline constexpr std::size_t unsafe_enumeration_guard = 7;

struct EnumerateOptions {
  std::size_t jobs = 1;
  std::size_t max_size = default_enumeration_guard;
};

// One algebra per isomorphism class, each in canonical form, sorted by
// canonical table. Output does not depend on `jobs`.
std::vector<Algebra> enumerate(std::size_t n, const EnumerateOptions& options = {});
std::size_t count(std::size_t n, const EnumerateOptions& options = {});

struct CatalogFlags {
  bool is_chain = false;
  Classification classification = Classification::trivial;
  bool embeds_C2 = false;
  bool embeds_L3 = false;
  bool embeds_H3 = false;

  friend bool operator==(const CatalogFlags&, const CatalogFlags&) = default;
};

struct CatalogRecord {
  std::string algebra_id;
  std::size_t size = 0;
  std::vector<Element> table;  // canonical, row-major
  CatalogFlags flags;

  Algebra algebra() const { return Algebra::validate(size, table); }

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

// "bck<n>-" followed by the 64-bit FNV-1a hash, in 16 lowercase hex digits,
// of the bytes n, t[0], t[1], ... of the canonical row-major table.
std::string algebra_id(const CanonicalForm& form);

CatalogRecord make_record(const Algebra& algebra);
std::vector<CatalogRecord> make_records(const std::vector<Algebra>& algebras,
                                        std::size_t jobs = 1);

class CorruptRecord : public std::runtime_error {
 public:
  CorruptRecord(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// JSON Lines, keys in the order algebra_id, size, table, flags.
std::string to_json_line(const CatalogRecord& record);
void write_catalog(std::ostream& out, const std::vector<CatalogRecord>& records);
void write_catalog(std::size_t n, const std::string& path,
                   const EnumerateOptions& options = {});
// Blank lines are skipped. Each record is re-validated.
std::vector<CatalogRecord> read_catalog(std::istream& in);
std::vector<CatalogRecord> read_catalog(const std::string& path);

}  // namespace bck
