#include "obddlab/certify.hpp"
#include "obddlab/cnf.hpp"
#include "obddlab/dimacs.hpp"
#include "obddlab/errors.hpp"
#include "obddlab/graph.hpp"
#include "obddlab/lab.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/ordering.hpp"
#include "obddlab/random_models.hpp"
#include "obddlab/sat2.hpp"
#include "obddlab/theta.hpp"
#include "obddlab/width.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace obddlab;

namespace {

Cnf makeCnf(std::size_t n, const std::vector<std::pair<int, int>>& clauses, bool allowDuplicates) {
    std::vector<Clause> cs;
    cs.reserve(clauses.size());
    for (const auto& [a, b] : clauses)
        cs.emplace_back(Literal::fromDimacs(a), Literal::fromDimacs(b));
    return Cnf(n, std::move(cs), allowDuplicates ? Duplicates::Allowed : Duplicates::Forbidden);
}

std::vector<std::pair<int, int>> clauseList(const Cnf& f) {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : f.clauses())
        out.emplace_back(c.first().toDimacs(), c.second().toDimacs());
    return out;
}

Assignment makeAssignment(std::size_t n, const std::vector<int>& literals) {
    Assignment a(n);
    for (int l : literals)
        a.set(Literal::fromDimacs(l));
    return a;
}

std::vector<int> literalList(const Assignment& a) {
    std::vector<int> out;
    for (const auto& l : a.literals())
        out.push_back(l.toDimacs());
    return out;
}

VarOrder orderFrom(const Cnf& f, const py::object& order, std::uint64_t seed) {
    if (order.is_none())
        return VarOrder::identity(f.n());
    if (py::isinstance<py::str>(order))
        return heuristicOrder(f, order.cast<std::string>(), seed);
    return VarOrder(order.cast<std::vector<Var>>());
}

py::int_ toPy(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "random 2-CNF to OBDD laboratory";

    static py::exception<Error> base(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const CapacityExceeded& e) {
            py::set_error(base, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::class_<Cnf>(m, "Cnf")
        .def(py::init(&makeCnf), py::arg("n"), py::arg("clauses"), py::arg("allow_duplicates") = true)
        .def_property_readonly("n", &Cnf::n)
        .def_property_readonly("clauses", &clauseList)
        .def_property_readonly("variables", &Cnf::variables)
        .def("__len__", &Cnf::size)
        .def("__eq__", [](const Cnf& a, const Cnf& b) { return a == b; })
        .def("__repr__", [](const Cnf& f) {
            return "Cnf(n=" + std::to_string(f.n()) + ", m=" + std::to_string(f.size()) + ")";
        });

    m.def("parse_dimacs", [](const std::string& text) { return parseDimacs(text); });
    m.def("write_dimacs", &writeDimacs);

    m.def(
        "solve_2sat",
        [](const Cnf& f, const std::vector<int>& units) -> py::object {
            const SatResult r = solve2Sat(f, makeAssignment(f.n(), units));
            if (!r.satisfiable)
                return py::none();
            return py::cast(literalList(*r.witness));
        },
        py::arg("f"), py::arg("units") = std::vector<int>{},
        "None when unsatisfiable, otherwise a model as DIMACS literals");
    m.def(
        "extends_to_sat",
        [](const Cnf& f, const std::vector<int>& alpha) { return extendsToSat(f, makeAssignment(f.n(), alpha)); });
    m.def("theta", [](const Cnf& h, const Cnf& f) {
        const ThetaCount c = thetaCount(h, f);
        const Fraction v = c.value();
        return py::make_tuple(v.num(), v.den());
    });
    m.def("is_matching_formula", [](const Cnf& f) { return isMatchingFormula(f); });
    m.def("is_simple", &isSimple);
    m.def("count_non_unique", &countNonUnique);

    m.def(
        "sample",
        [](const std::string& dist, std::size_t n, std::size_t clauses, std::uint64_t master, std::uint64_t stream) {
            return sample(parseDistribution(dist), n, clauses, Seed{master, stream});
        },
        py::arg("dist"), py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("stream") = 0);
    m.def(
        "sample_matching_formula",
        [](std::size_t n, std::size_t k, std::uint64_t master) { return sampleMatchingFormula(n, k, Seed{master, 0}); },
        py::arg("n"), py::arg("k"), py::arg("seed") = 0);

    m.def("max_degree", [](const Cnf& f) { return maxDegree(primalGraph(f)); });
    m.def("tw_upper", [](const Cnf& f, std::uint64_t seed) { return twUpper(primalGraph(f), seed); },
          py::arg("f"), py::arg("seed") = 0);
    m.def("tw_exact", [](const Cnf& f) { return twExact(primalGraph(f)); });
    m.def("pw_exact", [](const Cnf& f) { return pwExact(primalGraph(f)); });
    m.def("mmw_linear", [](const Cnf& f, const std::vector<Var>& order) {
        return mmwLinear(primalGraph(f), VarOrder(order));
    });

    m.def(
        "heuristic_order",
        [](const Cnf& f, const std::string& strategy, std::uint64_t seed) {
            return heuristicOrder(f, strategy, seed).perm();
        },
        py::arg("f"), py::arg("strategy") = "minfill", py::arg("seed") = 0);

    py::class_<Obdd>(m, "Obdd")
        .def_property_readonly("size", &Obdd::size)
        .def_property_readonly("order", [](const Obdd& b) { return b.order().perm(); })
        .def_property_readonly("width_per_level", &Obdd::widthPerLevel)
        .def("model_count", [](const Obdd& b) { return toPy(modelCount(b)); })
        .def("evaluate",
             [](const Obdd& b, const std::vector<bool>& values) {
                 Assignment a(b.n());
                 if (values.size() != b.n())
                     throw PartialAssignment("expected " + std::to_string(b.n()) + " values");
                 for (std::size_t i = 0; i < values.size(); ++i)
                     a.set(static_cast<Var>(i + 1), values[i]);
                 return evaluate(b, a);
             })
        .def("semantic_width", [](const Obdd& b, std::size_t k) { return semanticWidth(b, k); })
        .def("dump", &dumpObdd);

    m.def(
        "compile",
        [](const Cnf& f, const py::object& order, std::size_t capacity, std::uint64_t seed) {
            return compile(f, orderFrom(f, order, seed), capacity);
        },
        py::arg("f"), py::arg("order") = py::none(), py::arg("capacity") = kDefaultNodeCapacity,
        py::arg("seed") = 0, "order: None (identity), a strategy name or a permutation of 1..n");
    m.def("exact_min_size", [](const Cnf& f) {
        const ExactSize e = exactMinSize(f);
        return py::make_tuple(e.size, e.order.perm());
    });

    m.def(
        "certified_lower_bound",
        [](const Cnf& f, const py::object& order, std::uint64_t seed) {
            const VarOrder pi = orderFrom(f, order, seed);
            const CertifiedBound cb = certifiedLowerBound(f, pi);
            py::dict d;
            d["floor"] = toPy(cb.floor);
            d["cut_position"] = cb.cutPosition;
            d["matching_size"] = cb.matchingSize;
            d["theta"] = py::make_tuple(cb.theta.num(), cb.theta.den());
            if (cb.certificate) {
                d["witness_size"] = cb.certificate->witnessSize;
                d["verified"] = verifyCertificate(f, pi, *cb.certificate).ok;
                d["certificate"] = serializeCertificate(*cb.certificate);
            }
            return d;
        },
        py::arg("f"), py::arg("order") = py::none(), py::arg("seed") = 0);

    m.def(
        "run_trials",
        [](const std::string& configJson, std::size_t threads) {
            return toCsv(runTrials(parseSweepConfig(configJson), threads));
        },
        py::arg("config_json"), py::arg("threads") = 1, "CSV text of all trials");
    m.def("estimate_extension_probability",
          [](std::size_t n, const std::string& delta, std::size_t k, std::size_t trials, std::uint64_t seed) {
              return estimateExtensionProbability(n, Fraction::parseDecimal(delta), k, trials, seed).fraction();
          });
    m.def("estimate_theta_prefix", [](std::size_t n, const std::string& delta, std::size_t trials, std::uint64_t seed) {
        return estimateThetaPrefix(n, Fraction::parseDecimal(delta), trials, seed).fraction();
    });
}
