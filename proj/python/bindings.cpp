#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadrep/json_io.hpp"
#include "quadrep/verify.hpp"

namespace py = pybind11;
using namespace quadrep;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json py_to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<std::int64_t>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json out = json::array();
        for (auto item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw py::type_error("unsupported value in problem description");
}

RepProblem problem_from_py(const py::dict& d) { return problem_from_json(py_to_json(d)); }

py::tuple witness_tuple(const Witness& w) { return py::make_tuple(w.v[0], w.v[1], w.v[2], w.v[3]); }

}  // namespace

PYBIND11_MODULE(_quadrep, m) {
    m.doc() = "Four-term quadratic-form representations: exact thresholds, witness "
              "constructions, sumset sieves and a verified claim registry.";

    m.def("eval_form",
          [](i64 a, i64 b, bool halved, i64 x) {
              return i64(eval_form_i64(FormParams(a, b), halved, x));
          },
          py::arg("a"), py::arg("b"), py::arg("halved"), py::arg("x"),
          "x(ax+b), optionally halved; exact, throws on parity violation");

    m.def("polygonal_params",
          [](i64 m_, const std::string& variant) {
              PolygonalVariant v = variant == "second"        ? PolygonalVariant::Second
                                   : variant == "generalized" ? PolygonalVariant::Generalized
                                                              : PolygonalVariant::Standard;
              auto [p, halved] = polygonal_params(PolygonalKind{m_, v});
              py::dict out;
              out["a"] = p.a;
              out["b"] = p.b;
              out["halved"] = halved;
              return out;
          },
          py::arg("m"), py::arg("variant") = "standard");

    m.def("threshold",
          [](const std::string& theorem, i64 a, i64 b) {
              TheoremId id = theorem_from_name(theorem);
              FormParams p(a, b);
              RealBound bd = threshold(id, p);
              py::dict out;
              out["exact"] = bd.to_string();
              out["approx"] = bd.approx();
              out["least_n"] = least_n_meeting(id, p);
              return out;
          },
          py::arg("theorem"), py::arg("a"), py::arg("b"));

    m.def("interval",
          [](const std::string& id, i64 a, i64 b, i64 n) {
              IntervalId iid = id == "I" ? IntervalId::I : id == "J" ? IntervalId::J : IntervalId::K;
              return json_to_py(to_json(interval(iid, FormParams(a, b), n)));
          },
          py::arg("id"), py::arg("a"), py::arg("b"), py::arg("n"));

    m.def("interval_contains",
          [](const std::string& id, i64 a, i64 b, i64 n, i64 d) {
              IntervalId iid = id == "I" ? IntervalId::I : id == "J" ? IntervalId::J : IntervalId::K;
              return interval(iid, FormParams(a, b), n).contains(d);
          },
          py::arg("id"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));

    m.def("cauchy_solve", [](i64 c, i64 d) { return witness_tuple(cauchy_solve(c, d)); },
          py::arg("c"), py::arg("d"),
          "nonnegative w,x,y,z with squares summing to c and entries to d");
    m.def("cauchy_solve_z", [](i64 c, i64 d) { return witness_tuple(cauchy_solve_z(c, d)); },
          py::arg("c"), py::arg("d"));
    m.def("lem_ms_solve", [](i64 c, i64 d) { return witness_tuple(lem_ms_solve(c, d)); },
          py::arg("c"), py::arg("d"), "3w^2+x^2+y^2+z^2 = c with 3w+x+y+z = d");
    m.def("ks_solve",
          [](i64 m_) {
              KsSolution s = ks_solve(m_);
              return py::make_tuple(s.x, s.y, s.z);
          },
          py::arg("m"), "x^2+y^2+z^2+(x+y+z)^2/2 = m for even m outside E");
    m.def("in_E", &in_E, py::arg("n"));

    m.def("witness",
          [](i64 a, i64 b, i64 n, i64 weighted, bool halved, const std::string& domain,
             const std::string& theorem) {
              FormParams p(a, b);
              TheoremId id;
              if (!theorem.empty()) {
                  id = theorem_from_name(theorem);
              } else if (domain == "Z" || domain == "z") {
                  id = p.ab_odd() ? TheoremId::TH51
                       : p.a % 2 == 0 ? TheoremId::TH52_EVEN_A : TheoremId::TH52_EVEN_B;
              } else if (weighted == 2) {
                  id = halved ? TheoremId::COR2 : TheoremId::TH2;
              } else if (weighted == 3) {
                  id = halved ? TheoremId::COR19 : TheoremId::TH3;
              } else if (halved) {
                  id = TheoremId::TH11;
              } else {
                  id = (p.a % 2 == 0 && n % 2 == 0) ? TheoremId::TH22 : TheoremId::TH21;
              }
              return json_to_py(to_json(construct_for(id, p, n)));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), py::arg("weighted") = 1,
          py::arg("halved") = false, py::arg("domain") = "N", py::arg("theorem") = "",
          "full construction trace; tuple, window, congruence choices");

    m.def("exceptions",
          [](const py::dict& problem, i64 limit) {
              return exceptions(problem_from_py(problem), limit);
          },
          py::arg("problem"), py::arg("limit") = 200000);
    m.def("sieve_representable",
          [](const py::dict& problem, i64 limit) {
              RepSet rs = sieve_representable(problem_from_py(problem), limit);
              py::list out;
              for (i64 n = 0; n <= limit; ++n)
                  if (rs.test(n)) out.append(n);
              return out;
          },
          py::arg("problem"), py::arg("limit") = 200000);
    m.def("count_representations",
          [](const py::dict& problem, i64 n) {
              return count_representations(problem_from_py(problem), n);
          },
          py::arg("problem"), py::arg("n"));
    m.def("min_threshold_observed",
          [](const py::dict& problem, i64 limit) {
              auto obs = min_threshold_observed(problem_from_py(problem), limit);
              return py::make_tuple(obs.max_nonrepresentable, obs.stable);
          },
          py::arg("problem"), py::arg("limit") = 200000);

    m.def("list_claims", [] {
        py::list out;
        for (const Claim& c : claim_registry()) out.append(c.id);
        return out;
    });
    m.def("verify_claim",
          [](const std::string& id, i64 limit) {
              return json_to_py(report_to_json(verify_claim(id, limit), false));
          },
          py::arg("id"), py::arg("limit") = 0);
    m.def("check_conjecture",
          [](const std::string& id, i64 limit) {
              return json_to_py(report_to_json(check_conjecture(id, limit), false));
          },
          py::arg("id"), py::arg("limit") = 0);
}
