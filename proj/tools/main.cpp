// detdecomp command-line tool: generate, check, evaluate and export exact
// rank decompositions of the determinant tensor.
//
// Exit codes: 0 success (and verified match), 1 mismatch or computation
// error, 2 usage error, 3 characteristic-2 rejection.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <detdecomp/io.hpp>
#include <detdecomp/verify.hpp>

namespace {

using namespace detdecomp;

// Flag combinations the option parser cannot express; mapped to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldSpec parse_field_flag(std::string text) {
  for (char& ch : text) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (text == "q") return FieldSpec::rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 18) {
      throw UsageError("--field fp:<p> needs a decimal prime, got '" + text + "'");
    }
    return FieldSpec::prime_field(std::stoull(digits));  // NotPrimeError on composites
  }
  throw UsageError("--field must be 'q' or 'fp:<p>', got '" + text + "'");
}

Decomposition make_formula(const std::string& formula, int n, const FieldSpec& field) {
  if (formula == "leibniz") return leibniz(n, field);
  if (formula == "derksen3") {
    if (n != 3) throw UsageError("--formula derksen3 requires --n 3");
    return derksen3(field);
  }
  if (formula == "det4") {
    if (n != 4) throw UsageError("--formula det4 requires --n 4");
    return det4(field);
  }
  if (formula == "even") {
    if (n < 2 || n % 2 != 0) throw UsageError("--formula even requires an even --n >= 2");
    return even_general(n / 2, field);
  }
  return best_known(n, field);
}

// Shared generate-or-load options. --in excludes the generator flags.
struct SourceOpts {
  int n = 0;
  std::string formula = "best";
  std::string field_text = "q";
  std::string in_path;

  void attach(CLI::App* cmd, bool allow_in) {
    auto* n_opt = cmd->add_option("--n", n, "tensor order")->check(CLI::Range(1, 10));
    auto* formula_opt =
        cmd->add_option("--formula", formula,
                        "construction: leibniz, derksen3, det4, even or best")
            ->check(CLI::IsMember({"leibniz", "derksen3", "det4", "even", "best"}));
    auto* field_opt = cmd->add_option("--field", field_text,
                                      "coefficient field, 'q' or 'fp:<p>'");
    if (allow_in) {
      auto* in_opt = cmd->add_option("--in", in_path, "read a decomposition file");
      in_opt->excludes(n_opt)->excludes(formula_opt)->excludes(field_opt);
    }
  }

  Decomposition load(const char* cmd_name) const {
    if (!in_path.empty()) return read_decomposition_file(in_path);
    if (n == 0) {
      throw UsageError(std::string(cmd_name) + " needs --n (or --in where supported)");
    }
    return make_formula(formula, n, parse_field_flag(field_text));
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open '" + out_path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write to '" + out_path + "' failed");
}

mpz_class analytic_term_count(const std::string& formula, int n) {
  if (formula == "leibniz") {
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(n));
    return fac;
  }
  if (formula == "derksen3") {
    if (n != 3) throw UsageError("--formula derksen3 requires --n 3");
    return 5;
  }
  if (formula == "det4") {
    if (n != 4) throw UsageError("--formula det4 requires --n 4");
    return 12;
  }
  if (formula == "even") {
    if (n < 2 || n % 2 != 0) throw UsageError("--formula even requires an even --n >= 2");
    return rank_bound(n);
  }
  return rank_bound(n);  // best: n = 1 gives 1
}

int run(int argc, char** argv) {
  CLI::App app{"exact rank decompositions of the determinant tensor"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a decomposition file");
  SourceOpts gen_src;
  gen_src.attach(gen, false);
  std::string gen_out;
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "expand a decomposition and compare it with "
                                   "the signed permutation expansion");
  SourceOpts verify_src;
  verify_src.attach(verify_cmd, true);
  int jobs = 1;
  verify_cmd->add_option("--jobs", jobs, "expansion worker threads")
      ->check(CLI::Range(1, 256))
      ->envname("DETDECOMP_JOBS");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a decomposition on a matrix");
  SourceOpts eval_src;
  eval_src.attach(eval_cmd, true);
  std::string matrix_path;
  auto* matrix_opt = eval_cmd->add_option("--matrix", matrix_path,
                                          "matrix file: order line, then rows");
  int trials = 0;
  auto* trials_opt =
      eval_cmd->add_option("--random-trials", trials,
                           "check this many seeded random matrices against "
                           "an independent elimination oracle")
          ->check(CLI::Range(1, 100000));
  std::uint64_t seed = 0;
  eval_cmd->add_option("--seed", seed, "base seed for --random-trials")
      ->needs(trials_opt);
  matrix_opt->excludes(trials_opt);

  // chow
  auto* chow_cmd = app.add_subcommand("chow", "print the product-of-linear-forms view");
  SourceOpts chow_src;
  chow_src.attach(chow_cmd, true);
  std::string chow_out;
  chow_cmd->add_option("--out", chow_out, "output path (default stdout)");

  // waring
  auto* waring_cmd = app.add_subcommand("waring", "print the sums-of-powers view");
  SourceOpts waring_src;
  waring_src.attach(waring_cmd, true);
  std::string waring_out;
  waring_cmd->add_option("--out", waring_out, "output path (default stdout)");

  // count
  auto* count_cmd = app.add_subcommand(
      "count", "print the term count and rank bound without generating");
  int count_n = 0;
  count_cmd->add_option("--n", count_n, "tensor order")
      ->required()
      ->check(CLI::Range(1, 1000));
  std::string count_formula = "best";
  count_cmd->add_option("--formula", count_formula, "construction name")
      ->check(CLI::IsMember({"leibniz", "derksen3", "det4", "even", "best"}));

  // table
  auto* table_cmd = app.add_subcommand(
      "table", "rank bound against the Bell numbers, one row per order");
  int max_n = 8;
  table_cmd->add_option("--max-n", max_n, "last order to print")
      ->check(CLI::Range(2, 25));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help on --help, the problem otherwise
    return code == 0 ? 0 : 2;
  }

  if (*gen) {
    emit(write_decomposition(gen_src.load("gen")), gen_out);
    return 0;
  }

  if (*verify_cmd) {
    const VerificationReport report = verify(verify_src.load("verify"), jobs);
    std::cout << report.to_string() << "\n";
    return report.is_exact_match ? 0 : 1;
  }

  if (*eval_cmd) {
    const Decomposition d = eval_src.load("eval");
    if (!matrix_path.empty()) {
      const Matrix a = read_matrix_file(matrix_path, d.field());
      std::cout << eval_decomposition(d, a).to_string() << "\n";
      return 0;
    }
    if (trials == 0) throw UsageError("eval needs --matrix or --random-trials");
    for (int t = 0; t < trials; ++t) {
      const Matrix a =
          random_int_matrix(d.order(), d.field(), seed + static_cast<std::uint64_t>(t));
      const Scalar got = eval_decomposition(d, a);
      const Scalar want = det_oracle(a);
      if (!(got == want)) {
        std::cout << "trial " << t << ": decomposition gave " << got.to_string()
                  << ", elimination oracle gave " << want.to_string() << "\n";
        return 1;
      }
    }
    std::cout << "trials=" << trials << " n=" << d.order()
              << " field=" << d.field().to_string() << " all-match=true\n";
    return 0;
  }

  if (*chow_cmd) {
    emit(write_chow(to_chow(chow_src.load("chow"))), chow_out);
    return 0;
  }

  if (*waring_cmd) {
    emit(write_waring(chow_to_waring(to_chow(waring_src.load("waring")))), waring_out);
    return 0;
  }

  if (*count_cmd) {
    std::cout << "n=" << count_n << " formula=" << count_formula
              << " terms=" << analytic_term_count(count_formula, count_n).get_str()
              << " bound=" << rank_bound(count_n).get_str() << "\n";
    return 0;
  }

  // table
  std::cout << "n B_n C_n\n";
  for (const RankBoundRow& row : rank_bound_table(max_n)) {
    std::cout << row.n << " " << row.bell.get_str() << " " << row.c_bound.get_str()
              << (row.improved ? " <=" : "") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CharTwoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
