#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "fibdense/numeric.hpp"

namespace fibdense::claims {

enum class Verdict { Holds, Fails, ReportedOnly };

std::string to_string(Verdict v);

/// One evaluated claim instance.
struct ClaimReport {
  std::string id;
  std::string inputs;    // e.g. "k=5"
  std::string exact;     // exact value(s), rational where possible
  std::string rendered;  // float rendering
  Verdict verdict = Verdict::Holds;
  std::string note;
};

struct ClaimQuery {
  std::optional<std::string> id;  // all claims when absent
  std::optional<unsigned long> k_lo, k_hi;
  std::optional<unsigned long> lambda_lo, lambda_hi;
  mpfr_prec_t prec = 256;
};

/// Known claim ids: prop31, prop32, lemma33, lemma34, table2, lemma35,
/// thm41, product-rec, prop44, eq1, natural-density.
std::vector<std::string> claim_ids();

std::vector<ClaimReport> run_claims(const ClaimQuery& q);

/// True iff some claim expected to hold failed.
bool any_expected_failure(const std::vector<ClaimReport>& reports);

}  // namespace fibdense::claims
