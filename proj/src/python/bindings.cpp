#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusionkit/adjoint_rules.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/oracle.hpp"
#include "fusionkit/tadpole.hpp"
#include "fusionkit/verify.hpp"

namespace py = pybind11;
using namespace fusionkit;

namespace {

RootSystemPtr system_of(const std::string& name) { return RootSystem::build(AlgebraId::parse(name)); }

long long as_int(Int128 v) {
    if (v > Int128(std::numeric_limits<long long>::max()) || v < Int128(std::numeric_limits<long long>::min()))
        throw Overflow("value does not fit in 64 bits");
    return static_cast<long long>(v);
}

py::dict entries(const FusionDecomposition& d) {
    py::dict out;
    for (const auto& [nu, m] : d.entries) out[py::tuple(py::cast(nu.labels))] = m;
    return out;
}

FormulaVariant variant_of(bool as_printed) { return as_printed ? FormulaVariant::printed : FormulaVariant::corrected; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Adjoint affine fusion coefficients and fusion tadpoles";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NoClosedForm>(m, "NoClosedForm", PyExc_LookupError);
    py::register_exception<LevelTooSmall>(m, "LevelTooSmall", PyExc_ValueError);

    m.def("comarks", [](const std::string& name) {
        auto rs = system_of(name);
        return std::vector<int>(rs->comarks().begin(), rs->comarks().end());
    }, py::arg("algebra"), "Affine comarks, m_0 first.");
    m.def("dual_coxeter", [](const std::string& name) { return system_of(name)->dual_coxeter(); }, py::arg("algebra"));
    m.def("positive_root_count", [](const std::string& name) { return system_of(name)->positive_roots().size(); },
          py::arg("algebra"));

    m.def("fuse", [](const std::string& name, int level, const std::vector<int>& labels, const std::string& engine) {
        auto rs = system_of(name);
        const AffineWeight mu = affinize(*rs, Weight(labels), level);
        if (engine == "rule") return entries(AdjointRules(rs).decompose(mu));
        if (engine == "oracle") return entries(Oracle(rs).kac_walton_fusion(mu));
        throw ParseError("engine must be 'rule' or 'oracle'");
    }, py::arg("algebra"), py::arg("level"), py::arg("labels"), py::arg("engine") = "rule",
       "Level-k fusion of the adjoint with the finite weight `labels`: {nu: multiplicity}.");

    m.def("tensor", [](const std::string& name, const std::vector<int>& labels, const std::string& engine) {
        auto rs = system_of(name);
        const Weight mu(labels);
        if (engine == "rule") return entries(AdjointRules(rs).decompose_tensor(mu));
        if (engine == "oracle") return entries(Oracle(rs).racah_speiser_tensor(mu));
        throw ParseError("engine must be 'rule' or 'oracle'");
    }, py::arg("algebra"), py::arg("labels"), py::arg("engine") = "rule");

    m.def("tadpole", [](const std::string& name, int level, const std::string& method, bool zero, bool as_printed) {
        const AlgebraId id = AlgebraId::parse(name);
        if (method == "formula")
            return as_int(zero ? zero_tadpole_formula(id, level) : adjoint_tadpole_formula(id, level, variant_of(as_printed)));
        auto rs = RootSystem::build(id);
        if (method == "enum") return as_int(zero ? zero_tadpole_enum(*rs, level) : adjoint_tadpole_enum(*rs, level));
        if (method == "oracle") {
            const Oracle oracle(rs);
            return as_int(zero ? zero_tadpole_oracle(oracle, level) : adjoint_tadpole_oracle(oracle, level));
        }
        throw ParseError("method must be 'enum', 'formula' or 'oracle'");
    }, py::arg("algebra"), py::arg("level"), py::arg("method") = "enum", py::arg("zero") = false,
       py::arg("as_printed") = false);

    m.def("verify", [](int max_rank, int max_level, unsigned threads) {
        VerifyOptions options;
        options.max_rank = max_rank;
        options.max_level = max_level;
        options.threads = threads;
        const VerifyReport report = run_verify(options);
        py::dict out;
        for (const auto& s : report.suites) {
            py::list failures;
            for (const auto& f : s.failures) failures.append(f.algebra + ": " + f.detail);
            out[py::str(to_string(s.suite))] = py::make_tuple(s.checks, failures);
        }
        return out;
    }, py::arg("max_rank") = 4, py::arg("max_level") = 6, py::arg("threads") = 1,
       "Runs every suite; returns {suite: (checks, failures)}.");
}
