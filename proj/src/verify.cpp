#include <detdecomp/verify.hpp>

#include <algorithm>
#include <functional>
#include <thread>
#include <utility>

namespace detdecomp {

namespace {

void expand_term_into(SparseTensor& acc, const DecomposableTerm& term) {
  const std::size_t n = term.factors.size();
  std::vector<std::vector<std::pair<int, const Scalar*>>> choices(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& [i, c] : term.factors[s].coeffs()) {
      choices[s].emplace_back(i, &c);
    }
    if (choices[s].empty()) return;  // a zero covector kills the term
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<int> idx(n);
  while (true) {
    Scalar c = term.coeff;
    for (std::size_t s = 0; s < n; ++s) {
      idx[s] = choices[s][pos[s]].first;
      c *= *choices[s][pos[s]].second;
    }
    acc.add_term(MultiIndex(idx), c);
    std::size_t s = 0;
    while (s < n && ++pos[s] == choices[s].size()) {
      pos[s] = 0;
      ++s;
    }
    if (s == n) break;
  }
}

void expand_range(SparseTensor& acc, const std::vector<DecomposableTerm>& terms,
                  std::size_t lo, std::size_t hi) {
  for (std::size_t t = lo; t < hi; ++t) expand_term_into(acc, terms[t]);
}

}  // namespace

SparseTensor expand(const Decomposition& d, int jobs) {
  if (jobs < 1) jobs = 1;
  const std::vector<DecomposableTerm>& terms = d.terms();
  if (jobs == 1 || terms.size() < 2) {
    SparseTensor acc(d.order(), d.field());
    expand_range(acc, terms, 0, terms.size());
    return acc;
  }
  const std::size_t workers =
      std::min(static_cast<std::size_t>(jobs), terms.size());
  std::vector<SparseTensor> partial(workers, SparseTensor(d.order(), d.field()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (terms.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(lo + chunk, terms.size());
    pool.emplace_back(expand_range, std::ref(partial[w]), std::cref(terms), lo, hi);
  }
  for (std::thread& t : pool) t.join();
  // merge in worker order: the result never depends on thread timing
  SparseTensor acc = std::move(partial[0]);
  for (std::size_t w = 1; w < workers; ++w) acc.merge(partial[w]);
  return acc;
}

std::string VerificationReport::to_string() const {
  std::string out = "n=" + std::to_string(order) + " field=" + field.to_string() +
                    " terms=" + std::to_string(term_count) +
                    " match=" + (is_exact_match ? "true" : "false");
  if (mismatch) {
    out += " witness=" + mismatch->index.to_string() +
           " expected=" + mismatch->expected.to_string() +
           " found=" + mismatch->found.to_string();
  }
  return out;
}

VerificationReport verify(const Decomposition& d, int jobs) {
  const SparseTensor got = expand(d, jobs);
  const SparseTensor ref = expand(leibniz(d.order(), d.field()), jobs);

  VerificationReport report;
  report.order = d.order();
  report.field = d.field();
  report.term_count = d.term_count();

  const Scalar zero = Scalar::zero(d.field());
  auto ig = got.entries().begin();
  auto ir = ref.entries().begin();
  const auto eg = got.entries().end();
  const auto er = ref.entries().end();
  while (ig != eg || ir != er) {
    if (ir == er || (ig != eg && ig->first < ir->first)) {
      report.mismatch = Mismatch{ig->first, zero, ig->second};
      break;
    }
    if (ig == eg || ir->first < ig->first) {
      report.mismatch = Mismatch{ir->first, ir->second, zero};
      break;
    }
    if (!(ig->second == ir->second)) {
      report.mismatch = Mismatch{ig->first, ir->second, ig->second};
      break;
    }
    ++ig;
    ++ir;
  }
  report.is_exact_match = !report.mismatch.has_value();
  return report;
}

mpz_class bell_number(int n, int cap) {
  if (n < 0) throw IndexOutOfRange("bell_number: n must be >= 0");
  if (n > cap) {
    throw CapExceeded("bell_number: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  // Bell triangle: each row starts with the previous row's last entry and
  // adds the previous row pairwise; B_n is the first entry of row n.
  std::vector<mpz_class> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<mpz_class> next(static_cast<std::size_t>(r) + 1);
    next[0] = row.back();
    for (std::size_t i = 1; i < next.size(); ++i) next[i] = next[i - 1] + row[i - 1];
    row = std::move(next);
  }
  return row.front();
}

mpz_class rank_bound(int n) {
  if (n < 1) throw IndexOutOfRange("rank_bound: n must be >= 1");
  if (n == 1) return 1;
  mpz_class fac;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), fac.get_mpz_t(),
                  static_cast<mp_bitcnt_t>((n - 2) / 2));
  return out;
}

std::vector<RankBoundRow> rank_bound_table(int max_n) {
  if (max_n < 2) throw IndexOutOfRange("rank_bound_table: max_n must be >= 2");
  std::vector<RankBoundRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n) - 1);
  for (int n = 2; n <= max_n; ++n) {
    RankBoundRow row;
    row.n = n;
    row.bell = bell_number(n, max_n);
    row.c_bound = rank_bound(n);
    row.improved = row.c_bound <= row.bell;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detdecomp
