#include <doctest.h>

#include <cstdio>
#include <string>

#include <detdecomp/io.hpp>
#include <detdecomp/verify.hpp>

using namespace detdecomp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

}  // namespace

TEST_CASE("written text is frozen byte for byte") {
  CHECK(write_decomposition(leibniz(2, Q)) ==
        "detdecomp 1 n=2 field=Q terms=2 provenance=Leibniz\n"
        "1 | +e1 | +e2\n"
        "-1 | +e2 | +e1\n");
  CHECK(write_decomposition(even_general(1, Q)) ==
        "detdecomp 1 n=2 field=Q terms=2 provenance=EvenGeneral\n"
        "1/2 | +e1 -e2 | +e1 +e2\n"
        "-1/2 | +e1 +e2 | +e1 -e2\n");
}

TEST_CASE("prime-field rendering uses canonical residues") {
  const std::string text = write_decomposition(derksen3(F7));
  CHECK(text.rfind("detdecomp 1 n=3 field=Fp:7 terms=5 provenance=Derksen3\n", 0) == 0);
  // 1/2 reduces to 4; the residue 6 renders as the sign -e
  CHECK(text.find("4 | +e2 +e3 | +e1 -e2 | +e1 +e2\n") != std::string::npos);
}

TEST_CASE("writing is deterministic") {
  CHECK(write_decomposition(best_known(4, Q)) == write_decomposition(best_known(4, Q)));
  CHECK(write_decomposition(derksen3(F5)) == write_decomposition(derksen3(F5)));
}

TEST_CASE("reading recovers the content and normalizes provenance") {
  const auto roundtrip = [](const Decomposition& d) {
    const std::string text = write_decomposition(d);
    const Decomposition back = read_decomposition(text);
    CHECK(back == d);  // content equality, provenance not compared
    CHECK(back.provenance() == Provenance::file);
    // a second pass is a byte fixpoint
    const std::string text2 = write_decomposition(back);
    CHECK(write_decomposition(read_decomposition(text2)) == text2);
    return text2;
  };

  for (const FieldSpec& field : {Q, F5, F7}) {
    for (int n = 1; n <= 5; ++n) roundtrip(leibniz(n, field));
    roundtrip(derksen3(field));
    roundtrip(det4(field));
    roundtrip(best_known(5, field));
  }

  // the two passes differ only in the provenance token
  const std::string direct = write_decomposition(derksen3(Q));
  const std::string reread = roundtrip(derksen3(Q));
  CHECK(reread ==
        "detdecomp 1 n=3 field=Q terms=5 provenance=File\n" +
            direct.substr(direct.find('\n') + 1));
}

TEST_CASE("non-sign coefficients round trip") {
  LinearVector f;
  f.add(1, Scalar::of(2, Q));
  f.add(3, Scalar::rational(-1, 2));
  DecomposableTerm t3;
  t3.coeff = Scalar::rational(-3, 7);
  t3.factors = {f, LinearVector::basis(2, Q), f};
  const Decomposition d3(3, Q, Provenance::file, {t3});
  const std::string text = write_decomposition(d3);
  CHECK(text.find("-3/7 | 2*e1 -1/2*e3 | +e2 | 2*e1 -1/2*e3\n") != std::string::npos);
  CHECK(read_decomposition(text) == d3);
}

TEST_CASE("blank tail lines are tolerated") {
  const std::string text = write_decomposition(leibniz(2, Q)) + "\n  \n";
  CHECK(read_decomposition(text) == leibniz(2, Q));
}

TEST_CASE("header errors") {
  CHECK_THROWS_AS(read_decomposition(""), ParseError);
  CHECK_THROWS_AS(read_decomposition("detdecomp 1 n=2\n"), ParseError);
  CHECK_THROWS_AS(
      read_decomposition("detdecomp 2 n=2 field=Q terms=0 provenance=File\n"),
      ParseError);
  CHECK_THROWS_AS(
      read_decomposition("other 1 n=2 field=Q terms=0 provenance=File\n"),
      ParseError);
  CHECK_THROWS_AS(
      read_decomposition("detdecomp 1 n=x field=Q terms=0 provenance=File\n"),
      ParseError);
  CHECK_THROWS_AS(
      read_decomposition("detdecomp 1 n=2 field=R terms=0 provenance=File\n"),
      ParseError);
  CHECK_THROWS_AS(
      read_decomposition("detdecomp 1 n=2 field=Q terms=0 provenance=Banana\n"),
      ParseError);
  CHECK_THROWS_AS(
      read_decomposition("detdecomp 1 n=2 field=Fp:9 terms=0 provenance=File\n"),
      NotPrimeError);
  CHECK_THROWS_AS(
      read_decomposition("detdecomp 1 n=2 field=Fp:2 terms=2 provenance=File\n"
                         "1 | +e1 | +e2\n"
                         "1 | +e2 | +e1\n"),
      CharTwoError);
}

TEST_CASE("body errors carry line numbers") {
  const std::string head = "detdecomp 1 n=2 field=Q terms=1 provenance=File\n";

  const auto line_of = [](const std::string& text) {
    try {
      read_decomposition(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };

  CHECK(line_of(head + "1 | +e1\n") == 2);              // missing factor
  CHECK(line_of(head + "0 | +e1 | +e2\n") == 2);        // zero coefficient
  CHECK(line_of(head + "1 | +e1 -e1 | +e2\n") == 2);    // factor cancels
  CHECK(line_of(head + "1 |  | +e2\n") == 2);           // empty factor
  CHECK(line_of(head + "1 | +e3 | +e2\n") == 2);        // index out of range
  CHECK(line_of(head + "1 | +e0 | +e2\n") == 2);        // index out of range
  CHECK(line_of(head + "1 | 2e1 | +e2\n") == 2);        // missing '*'
  CHECK(line_of(head + "1 | +f1 | +e2\n") == 2);        // not a basis vector
  CHECK(line_of(head + "1 | 0*e1 | +e2\n") == 2);       // zero entry
  CHECK(line_of(head + "x | +e1 | +e2\n") == 2);        // bad coefficient
  CHECK(line_of(head + "1/2 | +e1 | +e2\nextra\n") == 3);

  // fractions are rejected in prime fields
  const std::string fhead = "detdecomp 1 n=2 field=Fp:5 terms=1 provenance=File\n";
  CHECK(line_of(fhead + "1/2 | +e1 | +e2\n") == 2);
  CHECK_NOTHROW(read_decomposition(fhead + "3 | +e1 | +e2\n"));
}

TEST_CASE("term count disagreements") {
  const std::string head2 = "detdecomp 1 n=2 field=Q terms=2 provenance=File\n";
  CHECK_THROWS_AS(read_decomposition(head2 + "1 | +e1 | +e2\n"), CountMismatch);
  const std::string head1 = "detdecomp 1 n=2 field=Q terms=1 provenance=File\n";
  CHECK_THROWS_AS(read_decomposition(head1 +
                                     "1 | +e1 | +e2\n"
                                     "-1 | +e2 | +e1\n"),
                  CountMismatch);
  // body ends at a blank line; content after it is still an error
  CHECK_THROWS_AS(read_decomposition(head1 + "1 | +e1 | +e2\n\n1 | +e1 | +e2\n"),
                  CountMismatch);
  // CountMismatch is a ParseError
  CHECK_THROWS_AS(read_decomposition(head2 + "1 | +e1 | +e2\n"), ParseError);
}

TEST_CASE("decomposition files round trip") {
  const std::string path = "/tmp/detdecomp_io_test.txt";
  const Decomposition d = best_known(4, F7);
  write_decomposition_file(d, path);
  const Decomposition back = read_decomposition_file(path);
  CHECK(back == d);
  CHECK(back.provenance() == Provenance::file);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_decomposition_file("/tmp/detdecomp_io_missing.txt"), Error);
}

TEST_CASE("matrix text round trips") {
  const std::string text = "2\n1 2\n3 4\n";
  const Matrix a = read_matrix(text, Q);
  CHECK(a.at(1, 1) == Scalar::one(Q));
  CHECK(a.at(2, 2) == Scalar::of(4, Q));
  CHECK(write_matrix(a) == text);

  const Matrix b = read_matrix("2\n\n1/2 -3\n\n0 7\n\n", Q);
  CHECK(b.at(1, 1) == Scalar::rational(1, 2));
  CHECK(write_matrix(b) == "2\n1/2 -3\n0 7\n");

  CHECK(write_matrix(Matrix::identity(2, F7)) == "2\n1 0\n0 1\n");
  // residues reduce on parse: -3 = 4 mod 7
  CHECK(read_matrix("1\n-3\n", F7).at(1, 1) == Scalar::of(4, F7));
}

TEST_CASE("matrix text errors") {
  CHECK_THROWS_AS(read_matrix("", Q), ParseError);
  CHECK_THROWS_AS(read_matrix("0\n", Q), ParseError);
  CHECK_THROWS_AS(read_matrix("x\n1\n", Q), ParseError);
  CHECK_THROWS_AS(read_matrix("2\n1 2\n", Q), ParseError);
  CHECK_THROWS_AS(read_matrix("2\n1 2 3\n4 5\n", Q), ParseError);
  CHECK_THROWS_AS(read_matrix("1\n1\njunk\n", Q), ParseError);
  CHECK_THROWS_AS(read_matrix("1\n1/2\n", F5), ParseError);

  try {
    read_matrix("2\n1 2\n3 x\n", Q);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("chow products render one line per term") {
  CHECK(write_chow(to_chow(leibniz(2, Q))) ==
        "1 * (+x[1,1]) * (+x[2,2])\n"
        "-1 * (+x[2,1]) * (+x[1,2])\n");
  const std::string text = write_chow(to_chow(derksen3(Q)));
  CHECK(text.rfind("1/2 * (+x[2,1] +x[3,1]) * (+x[1,2] -x[2,2]) * (+x[1,3] +x[2,3])\n",
                   0) == 0);

  ChowTerm t;
  t.coeff = Scalar::one(Q);
  LinearForm f;
  f.add(VarId{1, 1}, Scalar::of(2, Q));
  t.forms = {f};
  CHECK(write_chow(ChowDecomposition(1, Q, {t})) == "1 * (2*x[1,1])\n");
}

TEST_CASE("waring summands render with powers") {
  CHECK(write_waring(chow_to_waring(to_chow(leibniz(2, Q)))) ==
        "1/4 * (+x[1,1] +x[2,2])^2\n"
        "-1/4 * (+x[1,1] -x[2,2])^2\n"
        "-1/4 * (+x[1,2] +x[2,1])^2\n"
        "1/4 * (-x[1,2] +x[2,1])^2\n");
}
