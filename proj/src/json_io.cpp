#include "fmzv/json_io.hpp"

#include "fmzv/error.hpp"

#include <fstream>

namespace fmzv {

std::pair<Tree, IndexMap> tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("root"))
        throw Error("BadTreeJson", "expected object with vertices, edges, root");

    std::vector<Vertex> vertices;
    for (const auto& jv : j.at("vertices")) {
        if (!jv.contains("id") || !jv.at("id").is_string())
            throw Error("BadTreeJson", "vertex without string id");
        std::string id = jv.at("id").get<std::string>();
        if (id.find('#') != std::string::npos)
            throw Error("ReservedVertexId", "'" + id + "' contains the reserved marker '#'");
        std::string color = jv.value("color", std::string{});
        if (color != "bullet" && color != "circle")
            throw Error("BadTreeJson", "vertex " + id + " color must be \"bullet\" or \"circle\"");
        vertices.push_back({std::move(id), color == "bullet" ? Color::bullet : Color::circle});
    }

    std::vector<EdgeKey> edges;
    IndexMap k;
    for (const auto& je : j.at("edges")) {
        if (!je.contains("a") || !je.contains("b") || !je.contains("k"))
            throw Error("BadTreeJson", "edge needs a, b and k");
        if (!je.at("k").is_number_integer() || je.at("k").get<long long>() < 0)
            throw Error("BadTreeJson", "edge index k must be a nonnegative integer");
        EdgeKey e = make_edge(je.at("a").get<std::string>(), je.at("b").get<std::string>());
        edges.push_back(e);
        k[e] = je.at("k").get<int>();
    }

    if (!j.at("root").is_string()) throw Error("BadTreeJson", "root must be a string");
    Tree t = make_tree(std::move(vertices), std::move(edges), j.at("root").get<std::string>());
    validate(t);
    validate_index(t, k);
    return {std::move(t), std::move(k)};
}

std::pair<Tree, IndexMap> load_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadTreeJson", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("BadTreeJson", std::string("parse failure: ") + e.what());
    }
    return tree_from_json(j);
}

json tree_to_json(const Tree& t, const IndexMap& k) {
    json j;
    j["vertices"] = json::array();
    for (const Vertex& v : t.vertices)
        j["vertices"].push_back({{"id", v.id}, {"color", to_string(v.color)}});
    j["edges"] = json::array();
    for (const EdgeKey& e : t.edges)
        j["edges"].push_back({{"a", e.first}, {"b", e.second}, {"k", k.at(e)}});
    j["root"] = t.root;
    return j;
}

json lincomb_words_json(const LinComb& a) {
    json terms = json::array();
    for (const auto& [w, c] : a)
        terms.push_back({{"word", w.str()}, {"coeff", c.to_string()}});
    return terms;
}

json lincomb_zform_json(const LinComb& a) {
    json terms = json::array();
    for (const auto& [w, c] : a)
        terms.push_back({{"index", word_to_ztuple(w)}, {"coeff", c.to_string()}});
    return terms;
}

json reduction_to_json(const SignedReduction& r) {
    json j;
    j["sign"] = r.sign;
    j["terms"] = lincomb_zform_json(r.comb);
    return j;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["pass"] = r.pass;
    j["primes"] = json::array();
    for (const PrimeCheck& c : r.primes)
        j["primes"].push_back({{"p", c.p}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    return j;
}

} // namespace fmzv
