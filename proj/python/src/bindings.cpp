#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/cycles.hpp"
#include "koszul/harness.hpp"
#include "koszul/homology.hpp"
#include "koszul/io.hpp"
#include "koszul/veronese.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

IdealPtr parse_ideal(const std::string& text) { return std::make_shared<const MonomialIdeal>(ideal_from_json(Json::parse(text))); }

std::string homology_json(const std::string& ideal_text, int t, const MultiDegree& degree, const std::string& field)
{
    auto ideal = parse_ideal(ideal_text);
    if (static_cast<int>(degree.size()) != ideal->ring().nblocks())
        throw std::invalid_argument("degree needs one entry per block");
    KoszulComplex k(ideal, CoefficientModule{}, FieldContext::parse(field));
    return Json{{"chains", chain_dim(k, t, degree)},
                {"cycles", cycle_dim(k, t, degree)},
                {"boundaries", boundary_dim(k, t, degree)},
                {"homology", homology_dim(k, t, degree)}}
        .dump();
}

std::string suite_json(const std::string& name, std::uint64_t seed, std::optional<std::size_t> size, int cap,
                       const std::string& field)
{
    HarnessOptions o;
    o.seed = seed;
    o.size = size;
    o.slack = cap;
    o.field = FieldContext::parse(field);
    py::gil_scoped_release release;
    return run_suite(name, o).to_json().dump();
}

std::string betti_json(const std::vector<int>& blocks, const MultiDegree& c, int imax, const std::string& field)
{
    SegreVeroneseSpec spec(blocks, c, FieldContext::parse(field));
    py::gil_scoped_release release;
    return betti_to_json(veronese_betti(spec, imax)).dump();
}

std::string index_text(const std::vector<int>& blocks, const MultiDegree& c, int imax, const std::string& field)
{
    SegreVeroneseSpec spec(blocks, c, FieldContext::parse(field));
    py::gil_scoped_release release;
    return green_lazarsfeld_index(spec, imax).render();
}

std::string families_json(const std::string& family, int n, int c, const std::string& field)
{
    auto ideal = std::make_shared<const MonomialIdeal>(power_ideal(RingConfig::standard(n), {c}));
    std::vector<CycleFamily> fams;
    if (family == "z1")
        fams = z1_generators(ideal);
    else if (family == "gen2")
        fams = gen2_families(ideal, FieldContext::parse(field));
    else
        throw std::invalid_argument("family must be z1 or gen2");
    Json out = Json::array();
    for (const auto& f : fams)
        out.push_back(family_to_json(f));
    return out.dump();
}

py::tuple regularity(const std::string& ideal_text)
{
    auto r = reg_monomial_ideal(*parse_ideal(ideal_text));
    return py::make_tuple(r.value, r.certified, r.method);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Koszul cycles, regularity and Veronese syzygies";

    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_ValueError);
    py::register_exception<RingError>(m, "RingError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    m.def("suite_names", &suite_names);
    m.def("_homology", &homology_json, py::arg("ideal"), py::arg("t"), py::arg("degree"), py::arg("field") = "rat");
    m.def("_run_suite", &suite_json, py::arg("name"), py::arg("seed") = 1, py::arg("size") = py::none(),
          py::arg("cap") = 2, py::arg("field") = "rat");
    m.def("_betti", &betti_json, py::arg("blocks"), py::arg("c"), py::arg("imax"), py::arg("field") = "rat");
    m.def("green_lazarsfeld_index", &index_text, py::arg("blocks"), py::arg("c"), py::arg("imax"),
          py::arg("field") = "rat");
    m.def("_families", &families_json, py::arg("family"), py::arg("n"), py::arg("c"), py::arg("field") = "rat");
    m.def("_regularity", &regularity, py::arg("ideal"));
}
