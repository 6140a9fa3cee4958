#ifndef DZV_CATALOGUE_HPP
#define DZV_CATALOGUE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dzv/derivers.hpp"
#include "dzv/relations.hpp"

namespace dzv {

struct CatalogueEntry {
  RelationFamily family = RelationFamily::gkz;
  RelationVector relation;
  std::vector<Rational> source_polynomial;  // provenance (may be empty)
  std::string space_tag;

  struct Verification {
    long digits = 0;
    std::string residual;  // decimal string
    bool pass = false;
  };
  std::optional<Verification> verification;
  bool single_reconstructed = false;
};

struct CatalogueDocument {
  int schema_version = 1;
  std::string generated_at;  // empty = omitted (reproducible output)
  std::vector<CatalogueEntry> entries;

  // deterministic order: (weight, family, lexicographic coefficients)
  void sort_entries();
};

// One entry per basis element of the relevant period space at source weight k
// (the relation's own weight may differ, e.g. the odd-weight families).
// Zero relations are skipped.  Throws on unsupported (family, parity, level).
std::vector<CatalogueEntry> generate_family(RelationFamily f, int k, int level, long digits = 60);

std::string to_json(const CatalogueDocument& doc, bool pretty = true);
CatalogueDocument from_json(const std::string& text);
std::string coefficients_csv(const CatalogueDocument& doc);

struct VerifySummary {
  int checked = 0;
  int proven_failures = 0;
  int conjectural_failures = 0;
};
// Evaluates every entry at the given precision: symbolic single-zeta parts
// are recovered by rational reconstruction first (marked in the entry), then
// the completed relation is verified.
VerifySummary verify_catalogue(CatalogueDocument& doc, long digits, double eps,
                               const Integer& maxden = Integer("1000000000000"));

}  // namespace dzv

#endif
