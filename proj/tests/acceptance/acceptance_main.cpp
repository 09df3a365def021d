// Acceptance gate: nine pass/fail checks covering exactness, counts, the
// rank-bound table, oracle equivalence, the polynomial views, field
// restrictions and serialization. One line per criterion; exit 0 only if
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <detdecomp/evaluate.hpp>
#include <detdecomp/io.hpp>
#include <detdecomp/poly_forms.hpp>
#include <detdecomp/verify.hpp>

using namespace detdecomp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int number, const char* label, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::printf("[%s] %d/9 %s (%s)\n", ok ? "PASS" : "FAIL", number, label, detail.c_str());
  std::fflush(stdout);
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Canonical one-line rendering of a single term, for multiset comparisons.
std::string term_key(const DecomposableTerm& t, int order, const FieldSpec& field) {
  const Decomposition single(order, field, Provenance::file, {t});
  const std::string text = write_decomposition(single);
  const std::size_t nl = text.find('\n');
  return text.substr(nl + 1);
}

int expansion_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(std::max(1u, std::min(4u, hc)));
}

// 1: the even-order construction expands to exactly the signed permutation
// tensor, over the rationals and two odd prime fields.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const int jobs = expansion_jobs();
  bool ok = true;
  for (const FieldSpec& field : {Q, F5, F7}) {
    for (int k = 1; k <= 3; ++k) {
      ok = ok && tensor_equal(expand(even_general(k, field), jobs),
                              expand(leibniz(2 * k, field), jobs));
    }
  }
  const double small_elapsed = seconds_since(start);
  ok = ok && small_elapsed < 5.0;

  const auto start8 = std::chrono::steady_clock::now();
  bool ok8 = true;
  for (const FieldSpec& field : {Q, F5, F7}) {
    ok8 = ok8 && tensor_equal(expand(even_general(4, field), jobs),
                              expand(leibniz(8, field), jobs));
  }
  const double big_elapsed = seconds_since(start8);
  ok8 = ok8 && big_elapsed < 600.0;

  report(1, "even-order construction expands to the signed permutation tensor",
         ok && ok8,
         "n<=6: " + secs(small_elapsed) + " of 5s; n=8: " + secs(big_elapsed) +
             " of 600s");
}

// 2: realized term counts for orders 2..8.
void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<int, std::size_t>> want = {
      {2, 2}, {3, 6}, {4, 12}, {5, 60}, {6, 180}, {7, 1260}, {8, 5040}};
  bool ok = true;
  std::string bad;
  for (const auto& [n, count] : want) {
    const std::size_t got = best_known(n, Q).term_count();
    if (got != count) {
      ok = false;
      bad += " n=" + std::to_string(n) + " got " + std::to_string(got);
    }
  }
  report(2, "term counts are 2, 6, 12, 60, 180, 1260, 5040 for orders 2..8", ok,
         ok ? secs(seconds_since(start)) : "mismatch:" + bad);
}

// 3: Bell numbers for 2..8 and the comparison marker exactly at 2, 4, 6.
void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  const std::vector<std::pair<int, const char*>> bells = {
      {2, "2"}, {3, "5"}, {4, "15"}, {5, "52"}, {6, "203"}, {7, "877"}, {8, "4140"}};
  for (const auto& [n, text] : bells) ok = ok && bell_number(n) == mpz_class(text);

  std::set<int> marked;
  for (const RankBoundRow& row : rank_bound_table(8)) {
    if (row.improved) marked.insert(row.n);
  }
  ok = ok && marked == std::set<int>{2, 4, 6};
  report(3, "bell numbers match and the improvement marker sits at 2, 4 and 6", ok,
         secs(seconds_since(start)));
}

// 4: the two hardcoded constructions verify, and the order-4 one equals the
// general even construction as an unordered multiset of terms.
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = verify(derksen3(Q)).is_exact_match && verify(det4(Q)).is_exact_match;

  const Decomposition a = det4(Q);
  const Decomposition b = even_general(2, Q);
  std::multiset<std::string> keys_a;
  std::multiset<std::string> keys_b;
  for (const DecomposableTerm& t : a.terms()) keys_a.insert(term_key(t, 4, Q));
  for (const DecomposableTerm& t : b.terms()) keys_b.insert(term_key(t, 4, Q));
  ok = ok && keys_a == keys_b;

  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 1.0;
  report(4, "hardcoded order-3 and order-4 constructions verify and agree", ok,
         secs(elapsed) + " of 1s");
}

// 5: evaluation agrees with an independent elimination oracle on 100 seeded
// random matrices per order per field.
void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const FieldSpec& field : {Q, F5, F7}) {
    for (int n = 2; n <= 6; ++n) {
      const Decomposition d = best_known(n, field);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Matrix a = random_int_matrix(n, field, seed);
        if (!(eval_decomposition(d, a) == det_oracle(a))) ok = false;
      }
    }
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 30.0;
  report(5, "evaluation matches the elimination oracle on 1500 seeded matrices", ok,
         secs(elapsed) + " of 30s");
}

// 6: the product-of-linear-forms view multiplies out to the determinant
// polynomial for orders 3..6.
void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    ok = ok && poly_equal_det(expand_poly(to_chow(best_known(n, Q))), n);
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 60.0;
  report(6, "product-form view expands to the determinant polynomial, orders 3..6",
         ok, secs(elapsed) + " of 60s");
}

// 7: the order-4 sums-of-powers rewrite stays within 96 summands and
// expands back to the determinant polynomial.
void criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  const WaringDecomposition w = chow_to_waring(to_chow(best_known(4, Q)));
  bool ok = w.summand_count() <= 96;
  ok = ok && expand_waring(w) == det_polynomial(4, Q);
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 10.0;
  report(7, "order-4 power-form rewrite has at most 96 summands and expands back",
         ok, std::to_string(w.summand_count()) + " summands, " + secs(elapsed) +
                 " of 10s");
}

// 8: constructions that divide by 2 refuse characteristic 2; the plain
// permutation sum still works there.
void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;

  const auto throws_char_two = [&](auto&& make) {
    try {
      make();
    } catch (const CharTwoError&) {
      return true;
    } catch (...) {
      return false;
    }
    return false;
  };

  ok = ok && throws_char_two([] { return derksen3(F2); });
  ok = ok && throws_char_two([] { return det4(F2); });
  for (int k = 1; k <= 3; ++k) {
    ok = ok && throws_char_two([k] { return even_general(k, F2); });
  }
  for (int n = 2; n <= 6; ++n) {
    ok = ok && throws_char_two([n] { return best_known(n, F2); });
  }

  try {
    for (int n = 1; n <= 5; ++n) {
      const Decomposition d = leibniz(n, F2);
      if (d.term_count() == 0) ok = false;
    }
    ok = ok && verify(leibniz(4, F2)).is_exact_match;
  } catch (...) {
    ok = false;
  }
  report(8, "halving constructions refuse characteristic 2, the permutation sum works",
         ok, secs(seconds_since(start)));
}

// 9: property suite: sign multiplicativity, column multilinearity and
// alternation, term structure of the even construction, and byte-stable
// serialization.
bool signs_multiply() {
  std::mt19937_64 rng(20260816u);
  const auto random_permutation = [&](int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    return Permutation(images);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Permutation p = random_permutation(n);
    const Permutation q = random_permutation(n);
    if (p.compose(q).parity() != p.parity() * q.parity()) return false;
  }
  return true;
}

bool columns_behave() {
  for (const FieldSpec& field : {Q, F5, F7}) {
    for (int n = 2; n <= 6; ++n) {
      const Decomposition d = best_known(n, field);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix a = random_int_matrix(n, field, seed);
        const Scalar base = eval_decomposition(d, a);

        Matrix scaled = a;
        const Scalar three = Scalar::of(3, field);
        for (int r = 1; r <= n; ++r) scaled.set(r, 1, three * a.at(r, 1));
        if (!(eval_decomposition(d, scaled) == three * base)) return false;

        Matrix swapped = a;
        for (int r = 1; r <= n; ++r) {
          swapped.set(r, 1, a.at(r, n));
          swapped.set(r, n, a.at(r, 1));
        }
        if (!(eval_decomposition(d, swapped) == -base)) return false;

        Matrix repeated = a;
        for (int r = 1; r <= n; ++r) repeated.set(r, 2, a.at(r, 1));
        if (!eval_decomposition(d, repeated).is_zero()) return false;
      }
    }
  }
  return true;
}

// Each factor has exactly two entries with coefficients +-1 (difference or
// sum of two basis vectors); swapping the difference and sum blocks of any
// term gives another term of the same construction.
bool even_terms_structured() {
  for (int k = 1; k <= 4; ++k) {
    const Decomposition d = even_general(k, Q);
    const int n = 2 * k;

    std::multiset<std::string> keys;
    for (const DecomposableTerm& t : d.terms()) keys.insert(term_key(t, n, Q));

    for (const DecomposableTerm& t : d.terms()) {
      for (const LinearVector& f : t.factors) {
        if (f.coeffs().size() != 2) return false;
        for (const auto& [i, c] : f.coeffs()) {
          if (!(c.is_one() || c.is_minus_one())) return false;
        }
        if (!f.coeffs().begin()->second.is_one()) return false;  // leading +1
      }

      // block swap: flip each factor between difference and sum on the same
      // support, negating the coefficient once per pair block (k times)
      DecomposableTerm swapped;
      swapped.coeff = k % 2 == 0 ? t.coeff : -t.coeff;
      for (const LinearVector& f : t.factors) {
        LinearVector g;
        auto it = f.coeffs().begin();
        const auto& [i, ci] = *it;
        const auto& [j, cj] = *std::next(it);
        g.add(i, ci);
        g.add(j, -cj);
        swapped.factors.push_back(g);
      }
      if (keys.find(term_key(swapped, n, Q)) == keys.end()) return false;
    }
  }
  return true;
}

bool serialization_stable() {
  std::vector<Decomposition> all;
  for (int n = 1; n <= 8; ++n) {
    all.push_back(leibniz(n, Q));
    all.push_back(best_known(n, Q));
  }
  for (int n = 1; n <= 6; ++n) {
    all.push_back(best_known(n, F5));
    all.push_back(best_known(n, F7));
  }
  all.push_back(derksen3(Q));
  all.push_back(det4(Q));
  for (int k = 1; k <= 4; ++k) all.push_back(even_general(k, Q));

  for (const Decomposition& d : all) {
    const std::string once = write_decomposition(d);
    if (write_decomposition(d) != once) return false;  // write determinism
    const Decomposition back = read_decomposition(once);
    if (!(back == d)) return false;  // content survives
    const std::string normalized = write_decomposition(back);
    // re-reading the normalized text is a byte fixpoint
    if (write_decomposition(read_decomposition(normalized)) != normalized) return false;
    // the only difference after normalization is the provenance token
    const std::string tag = "provenance=" + std::string(provenance_tag(d.provenance()));
    const std::size_t pos = once.find(tag);
    if (pos == std::string::npos) return false;
    std::string retagged = once;
    retagged.replace(pos, tag.size(), "provenance=File");
    if (retagged != normalized) return false;
  }
  return true;
}

void criterion_9() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string failed;
  if (!signs_multiply()) {
    ok = false;
    failed += " sign-multiplicativity";
  }
  if (!columns_behave()) {
    ok = false;
    failed += " column-laws";
  }
  if (!even_terms_structured()) {
    ok = false;
    failed += " term-structure";
  }
  if (!serialization_stable()) {
    ok = false;
    failed += " serialization";
  }
  report(9, "property suite: signs, column laws, term structure, serialization",
         ok, ok ? secs(seconds_since(start)) : "failed:" + failed);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::printf("all 9 criteria passed\n");
    return 0;
  }
  std::printf("%d of 9 criteria failed\n", g_failures);
  return 1;
}
