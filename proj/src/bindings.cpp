// Python bindings for the detdecomp core: field and scalar arithmetic,
// decomposition generators, expansion and verification, matrix evaluation,
// the polynomial views and the text format.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <detdecomp/io.hpp>
#include <detdecomp/verify.hpp>

namespace py = pybind11;
using namespace detdecomp;

namespace {

py::int_ to_py_int(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

MultiIndex index_of(const std::vector<int>& entries) { return MultiIndex(entries); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact rank decompositions of the determinant tensor";

  // exception hierarchy; bases registered first so derived translators win
  auto err = py::register_exception<Error>(m, "Error");
  auto field_err = py::register_exception<FieldError>(m, "FieldError", err);
  py::register_exception<CharTwoError>(m, "CharTwoError", field_err);
  py::register_exception<NotPrimeError>(m, "NotPrimeError", field_err);
  py::register_exception<FieldMismatch>(m, "FieldMismatch", field_err);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", err);
  py::register_exception<InvalidPermutation>(m, "InvalidPermutation", err);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", err);
  py::register_exception<OrderMismatch>(m, "OrderMismatch", err);
  py::register_exception<CharTooSmall>(m, "CharTooSmall", err);
  py::register_exception<CapExceeded>(m, "CapExceeded", err);
  auto parse_err = py::register_exception<ParseError>(m, "ParseError", err);
  py::register_exception<CountMismatch>(m, "CountMismatch", parse_err);

  py::class_<FieldSpec>(m, "FieldSpec")
      .def_static("rationals", &FieldSpec::rationals)
      .def_static("prime_field", &FieldSpec::prime_field, py::arg("modulus"))
      .def_static("parse", &FieldSpec::parse, py::arg("text"))
      .def("is_rationals", &FieldSpec::is_rationals)
      .def("modulus", &FieldSpec::modulus)
      .def("to_string", &FieldSpec::to_string)
      .def("__repr__",
           [](const FieldSpec& f) { return "FieldSpec(" + f.to_string() + ")"; })
      .def(py::self == py::self);

  m.def("field_validate", &field_validate, py::arg("field"),
        "reject composite moduli and characteristic 2");

  py::class_<Scalar>(m, "Scalar")
      .def_static("zero", &Scalar::zero, py::arg("field"))
      .def_static("one", &Scalar::one, py::arg("field"))
      .def_static("of", &Scalar::of, py::arg("value"), py::arg("field"))
      .def_static("rational", &Scalar::rational, py::arg("num"), py::arg("den"))
      .def_static("parse", &Scalar::parse, py::arg("text"), py::arg("field"))
      .def("field", &Scalar::field)
      .def("is_zero", &Scalar::is_zero)
      .def("is_one", &Scalar::is_one)
      .def("is_minus_one", &Scalar::is_minus_one)
      .def("inverse", &Scalar::inverse)
      .def("to_string", &Scalar::to_string)
      .def("__repr__", [](const Scalar& s) { return s.to_string(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  m.def("scalar_half", &scalar_half, py::arg("field"),
        "1/2 in the given field; CharTwoError where it does not exist");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def("order", &Permutation::order)
      .def("image", &Permutation::image, py::arg("i"))
      .def("images", &Permutation::images)
      .def("compose", &Permutation::compose, py::arg("other"))
      .def("parity", &Permutation::parity)
      .def("__repr__", [](const Permutation& p) {
        std::string out = "Permutation([";
        for (std::size_t i = 0; i < p.images().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(p.images()[i]);
        }
        return out + "])";
      });

  m.def("sign", &sign, py::arg("p"), py::arg("field"),
        "permutation parity as a field element");

  py::class_<SparseTensor>(m, "SparseTensor")
      .def(py::init<int, FieldSpec>(), py::arg("order"), py::arg("field"))
      .def("order", &SparseTensor::order)
      .def("field", &SparseTensor::field)
      .def("nnz", &SparseTensor::nnz)
      .def("add_term",
           [](SparseTensor& t, const std::vector<int>& idx, const Scalar& c) {
             t.add_term(index_of(idx), c);
           },
           py::arg("index"), py::arg("value"))
      .def("find",
           [](const SparseTensor& t, const std::vector<int>& idx) -> py::object {
             const Scalar* s = t.find(index_of(idx));
             if (s == nullptr) return py::none();
             return py::cast(*s);
           },
           py::arg("index"))
      .def("entries",
           [](const SparseTensor& t) {
             py::list out;
             for (const auto& [idx, c] : t.entries()) {
               out.append(py::make_tuple(py::tuple(py::cast(idx.entries())), c));
             }
             return out;
           })
      .def("merge", &SparseTensor::merge, py::arg("other"));

  m.def("tensor_equal", &tensor_equal, py::arg("a"), py::arg("b"));

  py::class_<LinearVector>(m, "LinearVector")
      .def(py::init<>())
      .def_static("basis", &LinearVector::basis, py::arg("i"), py::arg("field"))
      .def_static("difference", &LinearVector::difference, py::arg("i"), py::arg("j"),
                  py::arg("field"))
      .def_static("sum", &LinearVector::sum, py::arg("i"), py::arg("j"),
                  py::arg("field"))
      .def("add", &LinearVector::add, py::arg("i"), py::arg("c"))
      .def("coeffs", &LinearVector::coeffs)
      .def("max_index", &LinearVector::max_index)
      .def(py::self == py::self);

  py::class_<DecomposableTerm>(m, "DecomposableTerm")
      .def_readonly("coeff", &DecomposableTerm::coeff)
      .def_readonly("factors", &DecomposableTerm::factors);

  py::class_<Decomposition>(m, "Decomposition")
      .def("order", &Decomposition::order)
      .def("field", &Decomposition::field)
      .def("term_count", &Decomposition::term_count)
      .def("terms", &Decomposition::terms)
      .def_property_readonly(
          "provenance",
          [](const Decomposition& d) { return provenance_tag(d.provenance()); })
      .def(py::self == py::self)
      .def("__repr__", [](const Decomposition& d) {
        return "Decomposition(n=" + std::to_string(d.order()) +
               ", field=" + d.field().to_string() +
               ", terms=" + std::to_string(d.term_count()) + ")";
      });

  m.def("leibniz", &leibniz, py::arg("n"), py::arg("field"),
        "signed permutation expansion, n! terms");
  m.def("derksen3", &derksen3, py::arg("field"), "five-term order-3 construction");
  m.def("det4", &det4, py::arg("field"), "twelve-term order-4 construction");
  m.def("even_general", &even_general, py::arg("k"), py::arg("field"),
        "order-2k construction from pair partitions");
  m.def("laplace_lift", &laplace_lift, py::arg("d"),
        "order n+1 construction by first-slot expansion");
  m.def("best_known", &best_known, py::arg("n"), py::arg("field"),
        "smallest construction this library knows for each order");

  py::class_<Mismatch>(m, "Mismatch")
      .def_property_readonly(
          "index", [](const Mismatch& w) { return py::tuple(py::cast(w.index.entries())); })
      .def_readonly("expected", &Mismatch::expected)
      .def_readonly("found", &Mismatch::found);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("order", &VerificationReport::order)
      .def_readonly("field", &VerificationReport::field)
      .def_readonly("term_count", &VerificationReport::term_count)
      .def_readonly("is_exact_match", &VerificationReport::is_exact_match)
      .def_readonly("mismatch", &VerificationReport::mismatch)
      .def("to_string", &VerificationReport::to_string)
      .def("__repr__", &VerificationReport::to_string);

  m.def("expand", &expand, py::arg("d"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "distribute every term into a sparse tensor");
  m.def("verify", &verify, py::arg("d"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "compare the expansion against the signed permutation tensor");

  m.def("bell_number",
        [](int n, int cap) { return to_py_int(bell_number(n, cap)); }, py::arg("n"),
        py::arg("cap") = 25);
  m.def("rank_bound", [](int n) { return to_py_int(rank_bound(n)); }, py::arg("n"));

  py::class_<RankBoundRow>(m, "RankBoundRow")
      .def_readonly("n", &RankBoundRow::n)
      .def_property_readonly("bell",
                             [](const RankBoundRow& r) { return to_py_int(r.bell); })
      .def_property_readonly(
          "c_bound", [](const RankBoundRow& r) { return to_py_int(r.c_bound); })
      .def_readonly("improved", &RankBoundRow::improved)
      .def("__repr__", [](const RankBoundRow& r) {
        return "RankBoundRow(n=" + std::to_string(r.n) + ", bell=" + r.bell.get_str() +
               ", c_bound=" + r.c_bound.get_str() +
               (r.improved ? ", improved=True)" : ", improved=False)");
      });

  m.def("rank_bound_table", &rank_bound_table, py::arg("max_n"));

  py::class_<Matrix>(m, "Matrix")
      .def(py::init<int, FieldSpec>(), py::arg("order"), py::arg("field"))
      .def_static("identity", &Matrix::identity, py::arg("order"), py::arg("field"))
      .def("order", &Matrix::order)
      .def("field", &Matrix::field)
      .def("at", &Matrix::at, py::arg("row"), py::arg("col"))
      .def("set", &Matrix::set, py::arg("row"), py::arg("col"), py::arg("value"))
      .def(py::self == py::self);

  m.def("eval_decomposition", &eval_decomposition, py::arg("d"), py::arg("a"));
  m.def("det_oracle", &det_oracle, py::arg("a"),
        "independent exact Gaussian elimination");
  m.def("eval_count_mults", &eval_count_mults, py::arg("d"));
  m.def("random_int_matrix", &random_int_matrix, py::arg("order"), py::arg("field"),
        py::arg("seed"), "entries in [-9, 9], reproducible per (seed, order, field)");

  py::class_<ChowDecomposition>(m, "ChowDecomposition")
      .def("order", &ChowDecomposition::order)
      .def("field", &ChowDecomposition::field)
      .def("term_count", &ChowDecomposition::term_count);

  py::class_<WaringDecomposition>(m, "WaringDecomposition")
      .def("order", &WaringDecomposition::order)
      .def("field", &WaringDecomposition::field)
      .def("summand_count", &WaringDecomposition::summand_count);

  py::class_<Polynomial>(m, "Polynomial")
      .def("order", &Polynomial::order)
      .def("field", &Polynomial::field)
      .def("monomial_count", &Polynomial::monomial_count)
      .def("is_zero", &Polynomial::is_zero)
      .def(py::self == py::self);

  m.def("to_chow", &to_chow, py::arg("d"),
        "read the factors as products of linear forms in matrix variables");
  m.def("expand_poly", &expand_poly, py::arg("c"));
  m.def("chow_to_waring", &chow_to_waring, py::arg("c"),
        "rewrite products as signed powers; needs the factorial invertible");
  m.def("expand_waring", &expand_waring, py::arg("w"));
  m.def("det_polynomial", &det_polynomial, py::arg("n"), py::arg("field"));
  m.def("poly_equal_det", &poly_equal_det, py::arg("p"), py::arg("n"));

  m.def("write_decomposition", &write_decomposition, py::arg("d"));
  m.def("read_decomposition", &read_decomposition, py::arg("text"));
  m.def("write_decomposition_file", &write_decomposition_file, py::arg("d"),
        py::arg("path"));
  m.def("read_decomposition_file", &read_decomposition_file, py::arg("path"));
  m.def("read_matrix", &read_matrix, py::arg("text"), py::arg("field"));
  m.def("read_matrix_file", &read_matrix_file, py::arg("path"), py::arg("field"));
  m.def("write_matrix", &write_matrix, py::arg("a"));
  m.def("write_chow", &write_chow, py::arg("c"));
  m.def("write_waring", &write_waring, py::arg("w"));

#ifdef DETDECOMP_VERSION_INFO
  m.attr("__version__") = DETDECOMP_VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
