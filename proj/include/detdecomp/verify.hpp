#ifndef DETDECOMP_VERIFY_HPP
#define DETDECOMP_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <detdecomp/formulas.hpp>

namespace detdecomp {

// First entry (in lexicographic index order) where a decomposition's
// expansion departs from the reference tensor. Absent entries read as 0.
struct Mismatch {
  MultiIndex index;
  Scalar expected;  // reference entry
  Scalar found;     // decomposition entry
};

struct VerificationReport {
  int order = 0;
  FieldSpec field;
  std::size_t term_count = 0;
  bool is_exact_match = false;
  std::optional<Mismatch> mismatch;  // engaged iff !is_exact_match

  // "n=6 field=Q terms=180 match=true", plus witness fields on mismatch.
  std::string to_string() const;
};

// Distributes every term over its factors' entries and accumulates the
// contributions exactly. jobs > 1 splits the term list across threads;
// partial results merge in a fixed order, so every schedule returns the
// same tensor as jobs = 1.
SparseTensor expand(const Decomposition& d, int jobs = 1);

// Compares expand(d) against the same-order Leibniz expansion over d's
// field. On mismatch, reports the lexicographically smallest bad index.
VerificationReport verify(const Decomposition& d, int jobs = 1);

// Bell number B_n via the Bell triangle, exact at every size. The cap
// bounds the work a caller can request; CapExceeded above it.
mpz_class bell_number(int n, int cap = 25);

// n!/2^floor((n-2)/2) for n >= 2, the term count of best_known(n); 1 for
// n = 1 by convention.
mpz_class rank_bound(int n);

struct RankBoundRow {
  int n = 0;
  mpz_class bell;     // B_n
  mpz_class c_bound;  // C_n = n!/2^floor((n-2)/2)
  bool improved = false;  // C_n <= B_n
};

// Rows n = 2 .. max_n comparing the construction's term count with the
// Bell-number benchmark; 'improved' marks C_n <= B_n.
std::vector<RankBoundRow> rank_bound_table(int max_n);

}  // namespace detdecomp

#endif
