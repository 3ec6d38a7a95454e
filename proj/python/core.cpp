#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kantorkit/catalog.hpp"
#include "kantorkit/classify.hpp"
#include "kantorkit/constructions.hpp"
#include "kantorkit/error.hpp"
#include "kantorkit/identities.hpp"
#include "kantorkit/io.hpp"
#include "kantorkit/kantor.hpp"
#include "kantorkit/un_algebra.hpp"
#include "kantorkit/witt.hpp"

namespace py = pybind11;
using namespace kantorkit;

namespace {

// Algebras cross the boundary in the JSON file format.
Algebra load(const std::string& source)
{
    if (source.rfind("catalog:", 0) == 0) return catalog_entry(source.substr(8)).algebra;
    return parse_algebra(source);
}

Element vector_of(const std::optional<std::string>& u, std::size_t dim)
{
    return parse_vector(u.value_or("symbolic"), dim);
}

Algebra single(const Algebra& from, std::string name, Multiplication m)
{
    Algebra out = make_algebra(std::move(name), std::move(m), from.params);
    out.basis = from.basis;
    out.constraints = from.constraints;
    return out;
}

std::vector<Multiplication> operations(const Algebra& a, const std::vector<std::string>& slots)
{
    std::vector<Multiplication> out;
    if (slots.empty())
        for (auto& s : a.slots) out.push_back(s.mult);
    for (auto& s : slots) out.push_back(a.slot(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Kantor products and related classifications.";

    // Messages read "Kind: detail"; the Python package exposes the kind.
    py::register_exception<Error>(m, "KantorkitError", PyExc_ValueError);

    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (auto& e : load_catalog()) out.push_back(e.algebra.name);
        return out;
    });
    m.def("catalog_json", [](const std::string& name) { return render_algebra(catalog_entry(name).algebra); },
          py::arg("name"));
    m.def("catalog_selftest", [](const std::string& name) { return self_test(catalog_entry(name)); },
          py::arg("name"), "Failure messages; empty when every stored claim re-verifies.");

    m.def("normalize", [](const std::string& source) { return render_algebra(load(source)); }, py::arg("source"));
    m.def("table", [](const std::string& source, const std::string& slot) {
        Algebra a = load(source);
        return render_table(slot.empty() ? a.mult() : a.slot(slot), a.basis);
    }, py::arg("source"), py::arg("slot") = "");

    m.def("kantor_square", [](const std::string& source, std::optional<std::string> u, bool right) {
        Algebra a = load(source);
        Element v = vector_of(u, a.dim());
        return render_algebra(single(a, a.name + "_square", right ? right_kantor_square(a.mult(), v)
                                                                  : kantor_square(a.mult(), v)));
    }, py::arg("source"), py::arg("u") = py::none(), py::arg("right") = false);

    m.def("kantor_product", [](const std::string& source, const std::string& first, const std::string& second,
                               std::optional<std::string> u) {
        Algebra a = load(source);
        Element v = vector_of(u, a.dim());
        return render_algebra(single(a, a.name + "_product", kantor_product(a.slot(first), a.slot(second), v)));
    }, py::arg("source"), py::arg("first"), py::arg("second"), py::arg("u") = py::none());

    m.def("identity_names", &builtin_names);
    m.def("check", [](const std::string& source, const std::string& identity, const std::vector<std::string>& slots) {
        Algebra a = load(source);
        Verdict v = check_identity(operations(a, slots), builtin(identity));
        std::vector<std::string> obs;
        for (auto& p : v.obstructions) obs.push_back(p.to_string());
        return std::make_pair(v.holds, obs);
    }, py::arg("source"), py::arg("identity"), py::arg("slots") = std::vector<std::string>{},
       "(holds, obstructions) for a built-in identity.");

    m.def("classify", [](const std::string& kind, const std::string& source, std::optional<std::string> fixed_u,
                         std::size_t max_depth) {
        Algebra a = load(source);
        ClassifyOptions opt;
        opt.max_depth = max_depth;
        if (fixed_u) opt.fixed_u = parse_vector(*fixed_u, a.dim());
        Classification c;
        if (kind == "poisson") c = poisson_structures(a, opt);
        else if (kind == "generic-poisson") c = generic_poisson_structures(a, opt);
        else if (kind == "postlie") c = postlie_structures(a, true, opt);
        else throw Error(ErrorKind::ParseError, "unknown classification '" + kind + "'");
        return render_classification_json(c, a);
    }, py::arg("kind"), py::arg("source"), py::arg("fixed_u") = py::none(), py::arg("max_depth") = 16);

    m.def("un_table", [](std::size_t n, std::optional<std::string> u) {
        std::optional<Element> v;
        if (u) v = parse_vector(*u, n);
        return render_un_table_json(un_table(n, v));
    }, py::arg("n"), py::arg("u") = py::none());

    m.def("witt", [](const std::string& op, const std::string& x, const std::string& y, const std::string& u,
                     const std::string& w, const std::string& a, bool direct) {
        WittConfig cfg{parse_rational(a), parse_graded(w)};
        auto gx = parse_graded(x), gy = parse_graded(y), gu = parse_graded(u);
        if (op == "star") return (direct ? witt_star_direct(gx, gy, gu, cfg) : witt_star(gx, gy, gu, cfg)).to_string();
        if (op == "curly") return (direct ? witt_curly_direct(gx, gy, gu, cfg) : witt_curly(gx, gy, gu, cfg)).to_string();
        throw Error(ErrorKind::ParseError, "unknown operation '" + op + "'");
    }, py::arg("op"), py::arg("x"), py::arg("y"), py::arg("u"), py::arg("w"), py::arg("a") = "0",
       py::arg("direct") = false);
}
