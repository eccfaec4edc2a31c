#include "braceforge/io.hpp"

#include "braceforge/error.hpp"

namespace braceforge {

Json solution_to_json(const Solution& S, bool with_rho) {
    Json j;
    j["size"] = S.size;
    j["lambda"] = S.lambda;
    if (with_rho)
        j["rho"] = S.rho;
    return j;
}

Solution solution_from_json(const Json& j) {
    if (!j.contains("lambda"))
        throw Error("Usage", "solution JSON needs a lambda table");
    auto lambda = j.at("lambda").get<std::vector<std::vector<int>>>();
    if (j.contains("size") && j.at("size").get<int>() != (int)lambda.size())
        throw Error("SizeMismatch", "declared size differs from lambda table");
    if (j.contains("rho")) {
        auto rho = j.at("rho").get<std::vector<std::vector<int>>>();
        return validate_solution(lambda, &rho);
    }
    return validate_solution(lambda);
}

Json group_to_json(const PermGroup& G) {
    Json j;
    j["degree"] = G.degree;
    Json gens = Json::array();
    for (const Perm& g : G.generators)
        gens.push_back(g.images());
    j["generators"] = gens;
    return j;
}

PermGroup group_from_json(const Json& j, long long cap) {
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) {
        auto img = g.get<std::vector<int>>();
        if ((int)img.size() != degree)
            throw Error("DegreeMismatch", "generator degree differs from declared degree");
        gens.emplace_back(std::move(img));
    }
    if (gens.empty())
        gens.push_back(Perm::identity(degree));
    return closure(gens, cap);
}

Json brace_to_json(const FiniteBrace& B) {
    Json j;
    if (B.repr() == FiniteBrace::Repr::Vector) {
        j["repr"] = "vector";
        j["modulus"] = B.modulus();
        j["dim"] = B.dim();
        Json lam = Json::array();
        for (int a = 0; a < B.order(); ++a)
            lam.push_back(B.coord_perm(a).images());
        j["lambda"] = lam;
        return j;
    }
    j["repr"] = "table";
    j["order"] = B.order();
    Json add = Json::array(), lam = Json::array();
    for (int a = 0; a < B.order(); ++a) {
        Json arow = Json::array(), lrow = Json::array();
        for (int b = 0; b < B.order(); ++b) {
            arow.push_back(B.add(a, b));
            lrow.push_back(B.lambda(a, b));
        }
        add.push_back(arow);
        lam.push_back(lrow);
    }
    j["add"] = add;
    j["lambda"] = lam;
    j["zero"] = B.zero();
    return j;
}

FiniteBrace brace_from_json(const Json& j) {
    std::string repr = j.at("repr").get<std::string>();
    if (repr == "vector") {
        int modulus = j.at("modulus").get<int>();
        int dim = j.at("dim").get<int>();
        std::vector<Perm> perms;
        for (const auto& p : j.at("lambda"))
            perms.emplace_back(p.get<std::vector<int>>());
        return FiniteBrace::from_vector_form(modulus, dim, std::move(perms));
    }
    if (repr == "table") {
        return FiniteBrace::from_tables(j.at("add").get<std::vector<std::vector<int>>>(),
                                        j.at("lambda").get<std::vector<std::vector<int>>>(),
                                        j.at("zero").get<int>());
    }
    throw Error("Usage", "unknown brace repr: " + repr);
}

Json embedding_to_json(const EmbeddingResult& E) {
    Json j = brace_to_json(E.brace);
    j["modulus"] = E.modulus;
    Json inject = Json::array();
    for (int idx : E.inject)
        inject.push_back(E.brace.element_vector(idx));
    j["inject"] = inject;
    return j;
}

Json ring_to_json(const FiniteRing& R) {
    if (R.dim() == 0)
        throw Error("Usage", "only structure-constant rings serialize");
    Json j;
    j["k"] = R.coeff_modulus();
    j["dim"] = R.dim();
    j["mul"] = R.structure_constants();
    j["unital"] = R.unital();
    if (R.unital())
        j["one"] = R.element_vector(R.one());
    return j;
}

FiniteRing ring_from_json(const Json& j) {
    int k = j.at("k").get<int>();
    int dim = j.at("dim").get<int>();
    auto sc = j.at("mul").get<std::vector<std::vector<std::vector<int>>>>();
    bool unital = j.value("unital", false);
    std::optional<std::vector<int>> one;
    if (unital)
        one = j.at("one").get<std::vector<int>>();
    return FiniteRing::from_structure_constants(k, dim, std::move(sc), unital, one);
}

Json mpl_to_json(const MplResult& r) {
    if (r.finite)
        return Json(r.level);
    return Json("infinite");
}

Json census_record_to_json(const CensusRecord& rec) {
    Json j;
    j["solution"] = solution_to_json(rec.solution);
    j["mpl"] = mpl_to_json(rec.mpl);
    j["perm_group_order"] = rec.perm_group_order;
    j["embedded_brace_order"] = rec.embedded_brace_order;
    j["right_nilpotent"] = rec.right_nilpotent;
    j["left_nilpotent"] = rec.left_nilpotent;
    j["two_sided"] = rec.two_sided;
    if (!rec.error.empty())
        j["error"] = rec.error;
    return j;
}

} // namespace braceforge
