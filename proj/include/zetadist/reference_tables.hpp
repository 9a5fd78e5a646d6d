#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zetadist {

// Worked values of the example families, recomputed and compared with the
// values stated for them in the literature.
enum class RowStatus {
  match,     // computed == stated
  mismatch,  // computed != stated
  flagged,   // stated list and stated derivation disagree; computed matches the derivation
};

std::string_view to_string(RowStatus status);

struct ReferenceRow {
  std::string family;    // generator name, e.g. "dk:3"
  std::string quantity;  // e.g. "A(n)/log n", "a^-1(n)", "A(n)"
  std::uint64_t n = 0;
  std::string stated;
  std::string computed;
  RowStatus status = RowStatus::match;
  std::string note;
};

struct ReferenceReport {
  std::vector<ReferenceRow> rows;
  std::size_t max_n = 0;

  std::size_t count(RowStatus status) const;
  // True iff no row is a mismatch.
  bool ok() const { return count(RowStatus::mismatch) == 0; }
};

// A(n)/log n patterns at prime powers (and 0 elsewhere) for n <= max_n over
// ones, pow:-1, pow:-2, dk:2..4, oneplusq:2, oneplusq:3, absmu, followed by
// the individual a^-1(n) and A(n) values of ezstar.
ReferenceReport reference_tables(std::size_t max_n = 512);

// The ezstar rows alone.
std::vector<ReferenceRow> ezstar_rows();

}  // namespace zetadist
