// Python bindings for the dla core: Steinitz arithmetic, descriptor
// classification, the decision procedures, and the constructive witnesses.

#include "dla/branching.hpp"
#include "dla/classify.hpp"
#include "dla/constructor.hpp"
#include "dla/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace dla;

namespace {

Rational precision_from(const std::string& lit) {
    return lit.empty() ? default_precision() : parse_rational(lit);
}

py::dict verdict_dict(const Verdict& v) {
    py::dict out;
    out["answer"] = to_string(v.answer);
    py::list conds;
    for (const auto& t : v.trace) {
        py::dict c;
        c["id"] = t.id;
        c["status"] = to_string(t.status);
        c["detail"] = t.detail;
        conds.append(c);
    }
    out["trace"] = conds;
    out["report"] = v.to_report();
    return out;
}

py::dict branching_dict(const BranchingResult& b) {
    py::dict out;
    py::dict weights;
    for (const auto& [w, m] : b.multiplicities)
        weights[py::str(weight_to_string(w.entries))] = m.str();
    out["multiplicities"] = weights;
    out["dim"] = b.total_dimension().str();
    out["d"] = d_of(b);
    return out;
}

py::list diagram_levels(const EmbeddingDiagram& d) {
    py::list out;
    for (const auto& L : d.levels) {
        py::dict lv;
        lv["i"] = L.source_level;
        lv["k"] = L.target_level;
        lv["x"] = L.x.str();
        lv["y"] = L.y.str();
        lv["u"] = L.u.str();
        out.append(lv);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_dla, m) {
    m.doc() = "diagonal locally simple Lie algebras: decisions and witnesses";

    py::class_<SteinitzNumber>(m, "Steinitz")
        .def(py::init([](const std::string& lit) { return parse_steinitz(lit); }))
        .def_static("one", &SteinitzNumber::one)
        .def("__str__", &SteinitzNumber::to_string)
        .def("__repr__",
             [](const SteinitzNumber& s) { return "Steinitz('" + s.to_string() + "')"; })
        .def("__eq__", [](const SteinitzNumber& a, const SteinitzNumber& b) { return a == b; })
        .def("__mul__", &stz_mul)
        .def("divides", [](const SteinitzNumber& a, const SteinitzNumber& b) {
            return divides(a, b);
        })
        .def("gcd", &stz_gcd)
        .def("quot", [](const SteinitzNumber& b, const SteinitzNumber& a) {
            return quotst(b, a);
        })
        .def("is_finite", [](const SteinitzNumber& s) { return is_finite(s); })
        .def("to_int",
             [](const SteinitzNumber& s) { return py::int_(py::str(to_integer(s).str())); })
        .def("q_equivalent", [](const SteinitzNumber& a, const SteinitzNumber& b) {
            return q_equivalent(a, b, nullptr);
        })
        .def("ratio_contains", [](const SteinitzNumber& a, const std::string& q,
                                  const SteinitzNumber& b) {
            return ratio_contains(parse_rational(q), a, b);
        });

    py::class_<ExhaustionDescriptor>(m, "Descriptor")
        .def(py::init([](const std::string& text) { return parse_descriptor(text); }))
        .def("__str__", &descriptor_to_string)
        .def("__eq__", [](const ExhaustionDescriptor& a, const ExhaustionDescriptor& b) {
            return a == b;
        })
        .def("S", &stz_S)
        .def("C", &stz_C);

    py::class_<AlgebraProfile>(m, "Profile")
        .def(py::init([](const std::string& text) { return parse_profile(text); }))
        .def("__str__", &profile_to_string)
        .def_property_readonly("finitary", [](const AlgebraProfile& p) { return p.finitary; })
        .def_property_readonly("density",
                               [](const AlgebraProfile& p) { return to_string(p.density); })
        .def_property_readonly("symmetry",
                               [](const AlgebraProfile& p) { return to_string(p.symmetry); })
        .def_property_readonly("delta",
                               [](const AlgebraProfile& p) { return to_string(p.delta); })
        .def_property_readonly("sigma",
                               [](const AlgebraProfile& p) { return to_string(p.sigma); });

    m.def("profile_of", [](const ExhaustionDescriptor& d, const std::string& precision) {
        return profile_of(d, precision_from(precision));
    }, py::arg("descriptor"), py::arg("precision") = "");

    m.def("isomorphic", [](const AlgebraProfile& a, const AlgebraProfile& b,
                           const std::string& precision) {
        return verdict_dict(isomorphic(a, b, precision_from(precision)));
    }, py::arg("a"), py::arg("b"), py::arg("precision") = "");
    m.def("embeds", [](const AlgebraProfile& a, const AlgebraProfile& b,
                       const std::string& precision) {
        return verdict_dict(embeds(a, b, precision_from(precision)));
    }, py::arg("a"), py::arg("b"), py::arg("precision") = "");
    m.def("equivalent", [](const AlgebraProfile& a, const AlgebraProfile& b,
                           const std::string& precision) {
        return verdict_dict(equivalent(a, b, precision_from(precision)));
    }, py::arg("a"), py::arg("b"), py::arg("precision") = "");
    m.def("is_universal", &is_universal);

    m.def("build_diagram", [](const ExhaustionDescriptor& a, const ExhaustionDescriptor& b,
                              std::size_t depth) {
        EmbeddingDiagram d = build_diagram(a, b, depth);
        py::dict out;
        out["levels"] = diagram_levels(d);
        out["text"] = diagram_to_string(d);
        return out;
    }, py::arg("source"), py::arg("target"), py::arg("depth") = 4);
    m.def("verify_diagram", [](const std::string& text) {
        VerifyReport rep = verify_diagram(parse_diagram(text));
        return py::make_tuple(rep.ok, rep.failures);
    });

    m.def("build_triangle", [](std::uint64_t q, const std::string& target, std::size_t depth) {
        Triangle t = build_triangle(BigInt(q), parse_steinitz(target), depth);
        py::dict out;
        py::list rows;
        for (const auto& row : t.rows) {
            py::list r;
            for (const auto& a : row) r.append(a.str());
            rows.append(r);
        }
        out["rows"] = rows;
        py::list bs;
        for (const auto& b : t.b) bs.append(to_string(b));
        out["b"] = bs;
        out["text"] = triangle_to_string(t);
        return out;
    }, py::arg("q"), py::arg("target"), py::arg("depth") = 4);

    m.def("gt_branch", [](const std::string& w) {
        return branching_dict(gt_branch(HighestWeight{parse_weight(w)}));
    });
    m.def("restrict_diagonal", [](const std::string& w, std::size_t k, std::size_t n) {
        return branching_dict(restrict_diagonal(HighestWeight{parse_weight(w)}, k, n));
    });
    m.def("lr_coefficient", [](const std::string& mu, const std::string& nu,
                               const std::string& lambda) {
        return lr_coefficient(HighestWeight{parse_weight(mu)}, HighestWeight{parse_weight(nu)},
                              HighestWeight{parse_weight(lambda)})
            .str();
    });
    m.def("weyl_dim",
          [](const std::string& w) { return weyl_dim(HighestWeight{parse_weight(w)}).str(); });
    m.def("dynkin_index", [](const std::string& w) {
        return to_string(dynkin_index_module(HighestWeight{parse_weight(w)}));
    });
}
