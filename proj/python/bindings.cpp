#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hofd/jack.hpp"
#include "hofd/verify.hpp"

namespace py = pybind11;
using namespace hofd;

namespace {

std::vector<Complex> as_vector(const Weight& w) { return {w.entries().begin(), w.entries().end()}; }

ChamberPoint chamber(std::vector<double> z) {
  return ChamberPoint(std::move(z), ChamberPoint::Region::APlus, 1e-9);
}

Tolerance tolerance(double tol) {
  Tolerance t;
  if (tol > 0) t.abs_tol = t.rel_tol = tol;
  return t;
}

// Exact parameters come in as "p/q" strings or Python ints.
Rational rational(const py::object& v) {
  if (py::isinstance<py::int_>(v)) return Rational(v.cast<long>());
  return parse_rational(v.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heckman-Opdam hypergeometric functions of type A with degenerate parameter";

  static py::exception<Error> error(m, "HofdError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, ("[" + std::string(to_string(e.kind())) + "] " + e.what()).c_str());
    }
  });

  m.def("rho", [](int n, Complex k) { return as_vector(rho(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("degenerate_lambda",
        [](int n, Complex nu, Complex k) { return as_vector(degenerate_lambda(n, nu, k)); },
        py::arg("n"), py::arg("nu"), py::arg("k"));

  m.def("gauss_2f1",
        [](Complex a, Complex b, Complex c, Complex x, double tol) {
          return gauss_2f1(a, b, c, x, tolerance(tol));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("tol") = 0.0);
  m.def("fd_series",
        [](Complex alpha, std::vector<Complex> betas, Complex gamma, std::vector<Complex> y,
           double tol) { return fd_series({alpha, std::move(betas), gamma}, y, tolerance(tol)); },
        py::arg("alpha"), py::arg("betas"), py::arg("gamma"), py::arg("y"), py::arg("tol") = 0.0);
  m.def("appell_f1",
        [](Complex a, Complex b1, Complex b2, Complex g, Complex x, Complex y) {
          return appell_f1(a, b1, b2, g, x, y);
        },
        py::arg("alpha"), py::arg("beta1"), py::arg("beta2"), py::arg("gamma"), py::arg("x"),
        py::arg("y"));
  m.def("horn_g2",
        [](Complex a, Complex ap, Complex b, Complex bp, Complex x, Complex y) {
          return horn_g2(a, ap, b, bp, x, y);
        },
        py::arg("alpha"), py::arg("alpha_p"), py::arg("beta"), py::arg("beta_p"), py::arg("x"),
        py::arg("y"));

  m.def("c_func",
        [](std::vector<Complex> lambda, Complex k) { return c_func(Weight(std::move(lambda), 1e-9), k); },
        py::arg("lam"), py::arg("k"));
  m.def("phi",
        [](std::vector<Complex> lambda, Complex k, std::vector<double> z) {
          HarishChandraSeries s(Weight(std::move(lambda), 1e-9), k);
          return s.evaluate(chamber(std::move(z))).value;
        },
        py::arg("lam"), py::arg("k"), py::arg("z"),
        "Harish-Chandra series Phi(lambda, k; z) for z in the positive chamber.");
  m.def("F_connection",
        [](std::vector<Complex> lambda, Complex k, std::vector<double> z) {
          return ho_F_connection(Weight(std::move(lambda), 1e-9), k, chamber(std::move(z)));
        },
        py::arg("lam"), py::arg("k"), py::arg("z"));
  m.def("F_degenerate_connection",
        [](int n, Complex nu, Complex k, std::vector<double> z) {
          const std::vector<ChamberPoint> zs{chamber(std::move(z))};
          return ho_F_connection_batch(degenerate_lambda_quad(n, nu, k), k, zs)[0].value;
        },
        py::arg("n"), py::arg("nu"), py::arg("k"), py::arg("z"),
        "F(lambda(nu, k), k; z) by the Weyl-group sum of Harish-Chandra series.");
  m.def("F_degenerate",
        [](int n, Complex nu, Complex k, std::vector<double> z, double tol) {
          return ho_F_degenerate_eval<double>(n, nu, k, z, tolerance(tol)).value;
        },
        py::arg("n"), py::arg("nu"), py::arg("k"), py::arg("z"), py::arg("tol") = 0.0,
        "F(lambda(nu, k), k; z) by the Lauricella F_D formula; z is any positive point.");

  m.def("jack_polynomial",
        [](std::vector<int> parts, int n, const py::object& k) {
          const SymPoly p = jack_polynomial(Partition(std::move(parts)), n, rational(k));
          py::dict out;
          for (const auto& [mu, c] : p.coeffs()) {
            py::tuple key(mu.length());
            for (std::size_t i = 0; i < mu.length(); ++i) key[i] = mu.part(i);
            out[key] = to_string(c);
          }
          return out;
        },
        py::arg("partition"), py::arg("n"), py::arg("k"),
        "Monomial-basis coefficients of P_lambda^(1/k) as exact 'p/q' strings.");
  m.def("theorem31_check",
        [](int p, int q, int n, const py::object& k) {
          const auto r = theorem31_check(p, q, n, rational(k));
          return py::make_tuple(r.mismatches_x, r.mismatches_y);
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("k"),
        "Mismatch counts of the two F_D forms against the Jack polynomial.");

  m.def("suite_names", &suite_names);
  m.def("verify",
        [](const std::string& suite, std::uint64_t seed) {
          SuiteOptions opts;
          opts.seed = seed;
          py::list out;
          for (const auto& l : run_suite(suite, opts)) {
            py::dict d;
            d["suite"] = l.suite;
            d["criterion"] = l.criterion;
            d["name"] = l.name;
            d["pass"] = l.pass;
            d["measured"] = l.measured;
            d["tolerance"] = l.tolerance;
            d["detail"] = l.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("suite"), py::arg("seed") = SuiteOptions{}.seed);
}
