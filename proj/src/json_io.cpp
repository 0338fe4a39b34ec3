#include "matspl/json_io.hpp"

#include "matspl/constructions.hpp"

namespace matspl::io {

namespace {

Json labels_json(const GroundSet& ground, Mask subset) {
    Json out = Json::array();
    for (const auto& l : ground.labels_of(subset)) out.push_back(l);
    return out;
}

Mask mask_from_json(const GroundSet& ground, const Json& names) {
    std::vector<std::string> labels = names.get<std::vector<std::string>>();
    return ground.mask_of(labels);
}

}  // namespace

Json matroid_to_json(const Matroid& m, bool with_summary) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["ground"] = m.ground().labels();
    Json def;
    def["type"] = "rank_table";
    Json table = Json::array();
    for (auto v : m.rank_table()) table.push_back(static_cast<int>(v));
    def["table"] = std::move(table);
    doc["def"] = std::move(def);
    if (with_summary) {
        Json summary;
        summary["rank"] = m.rank();
        summary["loops"] = labels_json(m.ground(), m.loops());
        summary["isthmuses"] = labels_json(m.ground(), m.isthmuses());
        Json zs = Json::array();
        for (Mask z : m.family(FamilyKind::cyclic_flats)) {
            Json entry;
            entry["set"] = labels_json(m.ground(), z);
            entry["rank"] = m.rank(z);
            zs.push_back(std::move(entry));
        }
        summary["cyclic_flats"] = std::move(zs);
        summary["bases_count"] = m.family(FamilyKind::bases).size();
        doc["summary"] = std::move(summary);
    }
    return doc;
}

Matroid matroid_from_json(const Json& doc) {
    if (!doc.contains("def")) throw Error("matroid document needs a def object");
    const Json& def = doc.at("def");
    std::string type = def.at("type").get<std::string>();

    // Self-grounding constructions may omit the ground list.
    if (type == "projective")
        return constructions::projective_geometry(def.at("rank").get<int>(), def.at("p").get<int>());
    if (type == "wheel") return constructions::wheel(def.at("spokes").get<int>());
    if (type == "whirl") return constructions::whirl(def.at("spokes").get<int>());
    if (type == "vamos") return constructions::vamos();
    if (type == "gf_matrix") return gf::column_matroid(gf_matrix_from_json(def));
    if (type == "graphic") {
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : def.at("edges"))
            edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        std::vector<std::string> labels;
        if (doc.contains("ground")) labels = doc.at("ground").get<std::vector<std::string>>();
        return constructions::graphic(edges, std::move(labels));
    }

    GroundSet ground(doc.at("ground").get<std::vector<std::string>>());
    if (type == "rank_table")
        return from_rank_table(ground, def.at("table").get<std::vector<int>>());
    if (type == "bases") {
        std::vector<Mask> bases;
        for (const auto& b : def.at("bases")) bases.push_back(mask_from_json(ground, b));
        return from_bases(ground, bases);
    }
    if (type == "cyclic_flats") {
        std::vector<std::pair<Mask, int>> flats;
        for (const auto& f : def.at("flats"))
            flats.emplace_back(mask_from_json(ground, f.at("set")), f.at("rank").get<int>());
        return from_cyclic_flats(ground, flats);
    }
    if (type == "uniform") return uniform(ground, def.at("rank").get<int>());
    if (type == "free") return free_matroid(ground);
    if (type == "loops") return rank_zero(ground);
    if (type == "transversal") {
        constructions::SetSystem system{ground, {}};
        for (const auto& s : def.at("sets")) system.sets.push_back(mask_from_json(ground, s));
        return constructions::transversal(system);
    }
    throw Error("unknown matroid definition type: " + type);
}

Json family_to_json(const SubsetFamily& family) {
    Json out;
    out["kind"] = family_kind_name(family.kind);
    Json members = Json::array();
    for (Mask m : family.members) members.push_back(labels_json(family.ground, m));
    out["members"] = std::move(members);
    return out;
}

Json gf_matrix_to_json(const gf::GFMatrix& mat) {
    Json out;
    out["type"] = "gf_matrix";
    out["p"] = mat.p;
    out["rows"] = mat.rows;
    out["cols"] = mat.cols;
    out["entries"] = Json::array();
    for (auto v : mat.entries) out["entries"].push_back(static_cast<int>(v));
    out["labels"] = mat.col_labels;
    return out;
}

gf::GFMatrix gf_matrix_from_json(const Json& doc) {
    gf::GFMatrix mat;
    mat.p = doc.at("p").get<int>();
    gf::check_prime(mat.p);
    mat.rows = doc.at("rows").get<int>();
    mat.cols = doc.at("cols").get<int>();
    for (const auto& v : doc.at("entries"))
        mat.entries.push_back(static_cast<std::uint8_t>(v.get<int>() % mat.p));
    mat.col_labels = doc.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(mat.entries.size()) != mat.rows * mat.cols)
        throw Error("gf_matrix entries do not match the shape");
    if (static_cast<int>(mat.col_labels.size()) != mat.cols)
        throw Error("gf_matrix labels do not match the shape");
    return mat;
}

Json factor_tree_to_json(const factor::FactorTree& tree) {
    auto emit = [](auto&& self, const factor::FactorTree::Node& node) -> Json {
        Json out;
        if (node.leaf) {
            Json leaf;
            leaf["label"] = node.leaf_label;
            leaf["kind"] = node.leaf_is_loop ? "loop" : "isthmus";
            out["leaf"] = std::move(leaf);
            return out;
        }
        Json inner;
        inner["a"] = node.a;
        inner["b"] = node.b;
        inner["left"] = self(self, *node.left);
        inner["right"] = self(self, *node.right);
        out["node"] = std::move(inner);
        return out;
    };
    return tree.root ? emit(emit, *tree.root) : Json();
}

Json separator_to_json(const GroundSet& ground, const factor::FreeSeparator& sep) {
    Json out;
    out["a"] = labels_json(ground, sep.a);
    out["b"] = labels_json(ground, sep.b);
    out["nontrivial"] = sep.nontrivial;
    out["minimal"] = sep.minimal;
    return out;
}

Json triple_report_to_json(const algebra::TripleReport& report) {
    Json out;
    Json matched;
    matched["m_n"] = report.pair_mn;
    matched["mn_p"] = report.pair_mn_p;
    matched["n_p"] = report.pair_np;
    matched["m_np"] = report.pair_m_np;
    out["matched"] = std::move(matched);
    out["overlap_empty"] = report.overlap_empty;
    out["cond_isthmus"] = report.cond_isthmus;
    out["cond_loop"] = report.cond_loop;
    out["cond_modular"] = report.cond_modular;
    out["predicted_associative"] = report.predicted;
    out["actually_associative"] = report.actual;
    out["left_product"] = matroid_to_json(report.left_product);
    out["right_product"] = matroid_to_json(report.right_product);
    out["left_middle"] = matroid_to_json(report.mid_left);
    out["right_middle"] = matroid_to_json(report.mid_right);
    return out;
}

}  // namespace matspl::io
