#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braceforge/brace.hpp"
#include "braceforge/census.hpp"
#include "braceforge/error.hpp"
#include "braceforge/io.hpp"
#include "braceforge/ring.hpp"
#include "braceforge/structure_group.hpp"

namespace py = pybind11;
using namespace braceforge;

namespace {

// mpl crosses the boundary as int or None (infinite)
py::object mpl_obj(const MplResult& r) {
    if (r.finite)
        return py::int_(r.level);
    return py::none();
}

} // namespace

PYBIND11_MODULE(_braceforge, m) {
    m.doc() = "finite set-theoretic YBE solutions and left braces";

    py::register_exception<Error>(m, "BraceForgeError");

    py::class_<Perm>(m, "Perm")
        .def(py::init<std::vector<int>>())
        .def_static("identity", &Perm::identity)
        .def_static("from_cycle", &Perm::from_cycle)
        .def_property_readonly("images", &Perm::images)
        .def("order", &Perm::order)
        .def("inverse", &Perm::inverse)
        .def("__call__", [](const Perm& p, int x) { return p(x); })
        .def("__mul__", [](const Perm& a, const Perm& b) { return a * b; })
        .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
        .def("__repr__", [](const Perm& p) {
            std::string s = "Perm([";
            for (size_t i = 0; i < p.images().size(); ++i)
                s += (i ? "," : "") + std::to_string(p.images()[i]);
            return s + "])";
        });

    py::class_<PermGroup>(m, "PermGroup")
        .def_readonly("degree", &PermGroup::degree)
        .def_readonly("generators", &PermGroup::generators)
        .def_readonly("elements", &PermGroup::elements)
        .def("order", &PermGroup::order);

    m.def("closure", &closure, py::arg("generators"), py::arg("cap") = 1000000);
    m.def("commutator", &commutator);
    m.def("is_engel_group", &is_engel_group);
    m.def("is_nilpotent",
          [](const PermGroup& G, long long cap) {
              auto r = is_nilpotent(G, cap);
              return py::make_tuple(r.nilpotent,
                                    r.nilpotent ? py::object(py::int_(r.nilpotency_class))
                                                : py::object(py::none()));
          },
          py::arg("G"), py::arg("cap") = 1000000);

    py::class_<Solution>(m, "Solution")
        .def_readonly("size", &Solution::size)
        .def_readonly("lam", &Solution::lambda)
        .def_readonly("rho", &Solution::rho)
        .def("is_trivial", &Solution::is_trivial)
        .def("__eq__", [](const Solution& a, const Solution& b) { return a == b; })
        .def("__repr__",
             [](const Solution& s) { return "Solution(size=" + std::to_string(s.size) + ")"; });

    m.def("validate_solution",
          [](const std::vector<std::vector<int>>& lam,
             std::optional<std::vector<std::vector<int>>> rho) {
              return validate_solution(lam, rho ? &*rho : nullptr);
          },
          py::arg("lam"), py::arg("rho") = py::none());
    m.def("trivial_solution", &trivial_solution);
    m.def("retract", [](const Solution& S) {
        RetractQuotient q = retract(S);
        return py::make_tuple(q.retracted, q.class_of);
    });
    m.def("mpl", [](const Solution& S) { return mpl_obj(mpl(S)); });
    m.def("isomorphism", &isomorphism);
    m.def("is_isomorphic", &is_isomorphic);
    m.def("permutation_generators", &permutation_generators);
    m.def("subsolution", &subsolution);
    m.def("canonical_lambda", &canonical_lambda);

    py::class_<FiniteBrace>(m, "FiniteBrace")
        .def_static("from_tables", &FiniteBrace::from_tables)
        .def_static("from_vector_form", &FiniteBrace::from_vector_form)
        .def_static("trivial", &FiniteBrace::trivial)
        .def("order", &FiniteBrace::order)
        .def("zero", &FiniteBrace::zero)
        .def("add", &FiniteBrace::add)
        .def("neg", &FiniteBrace::neg)
        .def("sub", &FiniteBrace::sub)
        .def("lam", &FiniteBrace::lambda)
        .def("mul", &FiniteBrace::mul)
        .def("inv", &FiniteBrace::inv)
        .def("star", &FiniteBrace::star)
        .def("__repr__", [](const FiniteBrace& B) {
            return "FiniteBrace(order=" + std::to_string(B.order()) + ")";
        });

    m.def("validate_brace", [](const FiniteBrace& B) {
        auto r = validate_brace(B);
        return py::make_tuple(r.ok, r.failure, r.witness);
    });
    m.def("socle", &socle);
    m.def("is_ideal", &is_ideal);
    m.def("quotient", [](const FiniteBrace& B, const Subset& I) {
        auto q = quotient(B, I);
        return py::make_tuple(q.brace, q.projection);
    });
    m.def("star_span", &star_span);
    m.def("right_series",
          [](const FiniteBrace& B, long long cap) {
              auto r = right_series(B, cap);
              return py::make_tuple(r.terms, r.nilpotent);
          },
          py::arg("B"), py::arg("cap") = 1000000);
    m.def("left_series",
          [](const FiniteBrace& B, long long cap) {
              auto r = left_series(B, cap);
              return py::make_tuple(r.terms, r.nilpotent);
          },
          py::arg("B"), py::arg("cap") = 1000000);
    m.def("associated_solution", &associated_solution);
    m.def("mpl_of_associated", [](const FiniteBrace& B) { return mpl_obj(mpl_of_associated(B)); });
    m.def("is_two_sided", [](const FiniteBrace& B) {
        auto r = is_two_sided(B);
        return py::make_tuple(r.two_sided, r.witness);
    });
    m.def("check_socle_commutator", &check_socle_commutator);
    m.def("check_proposition_five",
          [](const FiniteBrace& B, long long cap) {
              auto v = check_proposition_five(B, cap);
              return py::make_tuple(v.consistent, mpl_obj(v.mpl),
                                    v.right_nilpotency ? py::object(py::int_(*v.right_nilpotency))
                                                       : py::object(py::none()));
          },
          py::arg("B"), py::arg("cap") = 1000000);
    m.def("retract_iso_check", &retract_iso_check);

    m.def("socle_index", &socle_index, py::arg("S"), py::arg("cap") = 1000000);
    m.def("embed_finite_brace",
          [](const Solution& S, long long cap) {
              EmbeddingResult e = embed_finite_brace(S, cap);
              py::dict d;
              d["brace"] = e.brace;
              d["modulus"] = e.modulus;
              d["inject"] = e.inject;
              d["solution_image"] = e.solution_image;
              return d;
          },
          py::arg("S"), py::arg("cap") = 1000000);
    m.def("check_theorem_one", &check_theorem_one);
    m.def("check_nonabelian", &check_nonabelian);

    py::class_<FiniteRing>(m, "FiniteRing")
        .def_static("strictly_upper_triangular", &FiniteRing::strictly_upper_triangular)
        .def_static("zero_ring", &FiniteRing::zero_ring)
        .def("order", &FiniteRing::order)
        .def("zero", &FiniteRing::zero)
        .def("add", &FiniteRing::add)
        .def("mul", &FiniteRing::mul)
        .def("adjoint", &FiniteRing::adjoint)
        .def("__repr__", [](const FiniteRing& R) {
            return "FiniteRing(order=" + std::to_string(R.order()) + ")";
        });

    m.def("is_jacobson_radical", &is_jacobson_radical);
    m.def("brace_from_radical_ring", &brace_from_radical_ring);
    m.def("ring_from_two_sided_brace", &ring_from_two_sided_brace);
    m.def("embed_group_adjoint", [](const PermGroup& G, int k) {
        auto e = embed_group_adjoint(G, k);
        return py::make_tuple(e.morphism, e.injective, e.image.size());
    });

    m.def("enumerate_solutions", &enumerate_solutions, py::arg("m"), py::arg("up_to_iso"),
          py::arg("max_size") = 5);

    m.def("solution_to_json",
          [](const Solution& S, bool with_rho) { return solution_to_json(S, with_rho).dump(); },
          py::arg("S"), py::arg("with_rho") = false);
    m.def("solution_from_json",
          [](const std::string& s) { return solution_from_json(Json::parse(s)); });
    m.def("brace_to_json", [](const FiniteBrace& B) { return brace_to_json(B).dump(); });
    m.def("brace_from_json", [](const std::string& s) { return brace_from_json(Json::parse(s)); });
}
