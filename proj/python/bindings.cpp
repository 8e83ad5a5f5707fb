#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "vgb/errors.hpp"
#include "vgb/io.hpp"
#include "vgb/toric.hpp"

namespace py = pybind11;
using namespace vgb;

namespace {

RingPtr ring_for(const py::object& ring) {
    if (py::isinstance<py::int_>(ring)) return Ring::base(ring.cast<std::size_t>());
    return Ring::custom(ring.cast<std::vector<std::string>>());
}

TermOrder order_for(const std::string& name, const RingPtr& ring) {
    if (name == "lex") return TermOrder::lex(ring->nvars());
    if (name == "grevlex") return TermOrder::grevlex(ring->nvars());
    throw DomainError("order must be 'lex' or 'grevlex'");
}

std::vector<Polynomial> parse_list(const std::vector<std::string>& texts, const RingPtr& ring, const TermOrder& order) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring, order));
    return out;
}

std::vector<std::string> texts(std::span<const Polynomial> polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(to_string(p));
    return out;
}

std::vector<std::tuple<std::string, bool, std::string>> checks(std::span<const Check> cs) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : cs) out.emplace_back(c.name, c.passed, c.detail);
    return out;
}

std::vector<Exponent> entries(const MultiIndex& m) { return {m.entries().begin(), m.entries().end()}; }

py::dict pullback_dict(const PullbackResult& r) {
    py::dict d;
    d["basis"] = texts(r.groebner_basis);
    d["reduced_basis"] = texts(r.reduced_basis);
    d["order"] = r.order.fingerprint();
    d["method"] = to_string(r.method);
    d["max_degree"] = r.max_degree;
    d["bound"] = r.bound;
    d["bound_met"] = r.bound_met;
    d["certificate"] = checks(r.certificate);
    d["passed"] = all_passed(r.certificate);
    return d;
}

MonomialIdeal monomial_ideal(const std::vector<std::vector<Exponent>>& gens, std::size_t s) {
    std::vector<MultiIndex> ms;
    for (const auto& g : gens) {
        if (g.size() != s) throw DimensionError("generator length differs from s");
        ms.emplace_back(g);
    }
    return MonomialIdeal(Ring::base(s), ms);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quadratic Groebner bases for Veronese subrings, with exact rational arithmetic.";

    auto base = py::register_exception<Error>(m, "VgbError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<NotAConfiguration>(m, "NotAConfiguration", base.ptr());

    m.def("enumerate_nds", [](std::size_t s, std::size_t d) {
        std::vector<std::vector<Exponent>> out;
        for (const auto& a : enumerate_nds(s, d)) out.push_back(entries(a));
        return out;
    }, py::arg("s"), py::arg("d"), "N_d^s in ascending Gamma order.");

    m.def("gamma", [](const std::vector<Exponent>& a) { return entries(gamma(MultiIndex(a))); });

    m.def("cmp_gamma_vars", [](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
        auto c = cmp_gamma_vars(MultiIndex(a), MultiIndex(b));
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }, "Returns -1, 0 or 1 comparing x_a with x_b.");

    m.def("build_g_gamma", [](std::size_t s, std::size_t d) { return texts(build_g_gamma(s, d)); },
          py::arg("s"), py::arg("d"));

    m.def("verify_quad_gb", [](std::size_t s, std::size_t d) {
        auto cert = verify_quad_gb(s, d);
        py::dict out;
        out["basis"] = texts(cert.basis);
        out["checks"] = checks(cert.checks);
        out["passed"] = cert.passed();
        return out;
    }, py::arg("s"), py::arg("d"));

    m.def("groebner_basis", [](const std::vector<std::string>& polys, const py::object& ring, const std::string& order) {
        auto R = ring_for(ring);
        auto ord = order_for(order, R);
        py::gil_scoped_release release;
        return texts(buchberger(parse_list(polys, R, ord), ord).basis);
    }, py::arg("polys"), py::arg("ring"), py::arg("order") = "grevlex",
       "Reduced basis. `ring` is s (for y1..ys) or a list of variable names.");

    m.def("find_weight_vector", [](const std::vector<std::string>& polys, std::size_t s, const std::string& order) {
        auto R = Ring::base(s);
        auto ord = order_for(order, R);
        return find_weight_vector(Ideal(R, parse_list(polys, R, ord)), ord);
    }, py::arg("polys"), py::arg("s"), py::arg("order") = "grevlex");

    m.def("pullback_monomial", [](const std::vector<std::vector<Exponent>>& gens, std::size_t s, std::size_t d,
                                  bool cross_check) {
        auto M = monomial_ideal(gens, s);
        PullbackOptions opts;
        opts.cross_check = cross_check;
        return pullback_dict(pullback_monomial(M, d, opts));
    }, py::arg("generators"), py::arg("s"), py::arg("d"), py::arg("cross_check") = false);

    m.def("pullback_homogeneous", [](const std::vector<std::string>& polys, std::size_t s, std::size_t d,
                                     const std::vector<std::int64_t>& omega) {
        auto R = Ring::base(s);
        return pullback_dict(pullback_homogeneous(Ideal(R, parse_list(polys, R, R->default_order())), d, omega));
    }, py::arg("polys"), py::arg("s"), py::arg("d"), py::arg("omega"));

    m.def("bounds", [](const std::vector<std::vector<Exponent>>& gens, std::size_t s) {
        auto b = bounds(monomial_ideal(gens, s));
        py::dict out;
        out["a"] = b.a;
        out["delta"] = b.delta;
        out["paper"] = b.paper;
        out["ert_rough"] = to_string(b.ert_rough);
        out["ert_stated"] = b.ert_stated;
        out["paper_below_rough"] = b.paper_below_rough;
        out["a_plus_2_le_delta"] = b.a_plus_2_le_delta;
        return out;
    }, py::arg("generators"), py::arg("s"));

    m.def("toric_ideal", [](const std::vector<LatticePoint>& points) {
        auto A = make_configuration(points);
        auto S = Ring::base(A.size());
        return texts(toric_ideal(A).groebner_basis(S->default_order()));
    }, py::arg("points"));

    m.def("verify_toric_veronese", [](const std::vector<LatticePoint>& points, std::size_t d) {
        auto cert = verify_toric_veronese(make_configuration(points), d);
        py::dict out = pullback_dict(cert.pullback);
        out["toric_basis"] = texts(cert.toric_basis);
        out["omega"] = cert.omega;
        out["checks"] = checks(cert.checks);
        out["passed"] = cert.passed();
        return out;
    }, py::arg("points"), py::arg("d"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = vgb::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs a vgb command; returns (exit code, stdout, stderr).");
}
