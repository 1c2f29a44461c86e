#include "spinor/json_io.hpp"

#include <string>

namespace spinor {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::int64_t int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field '") + name + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_vector(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer()) {
            throw ParseError(std::string(what) + " must contain only integers");
        }
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

} // namespace

Json gamma_to_json(const GammaClass& x) {
    return Json{{"n", x.rank()}, {"b", x.brackets()}};
}

GammaClass gamma_from_json(const Json& j) {
    const std::int64_t n = int_field(j, "n");
    auto b = int_vector(field(j, "b"), "'b'");
    if (n < 2 || n > 1'000) throw ParseError("rank out of range");
    try {
        return GammaClass(static_cast<int>(n), std::move(b));
    } catch (const LengthMismatch& e) {
        throw ParseError(e.what());
    }
}

Json comm_algebra_to_json(const CommAlgebra& a) {
    Json comps = Json::array();
    for (const auto& c : a.components()) comps.push_back(Json::array({c.ramification, c.inertia}));
    return Json{{"components", comps}};
}

CommAlgebra comm_algebra_from_json(const Json& j) {
    const Json& comps = field(j, "components");
    if (!comps.is_array() || comps.empty()) {
        throw ParseError("'components' must be a nonempty array");
    }
    std::vector<CommAlgebra::Component> parsed;
    for (const auto& c : comps) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer()) {
            throw ParseError("each component must be a pair [e, f]");
        }
        parsed.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    try {
        return CommAlgebra(std::move(parsed));
    } catch (const LengthMismatch& e) {
        throw ParseError(e.what());
    }
}

Json block_to_json(const Block& host) {
    if (const auto* grid = std::get_if<GridBlock>(&host)) {
        return gamma_to_json(grid->bounds());
    }
    return comm_algebra_to_json(std::get<CommBlock>(host).algebra());
}

Block block_from_json(const Json& j) {
    if (j.is_object() && j.contains("components")) {
        return comm_block(comm_algebra_from_json(j));
    }
    try {
        return geo_block(GeoType(gamma_from_json(j)));
    } catch (const InvalidGeoType& e) {
        throw ParseError(e.what());
    }
}

Json coset_set_to_json(const CosetSet& s) {
    return Json{{"modulus", s.modulus}, {"residues", s.residues}, {"group", s.group}};
}

CosetSet coset_set_from_json(const Json& j) {
    return CosetSet::from_residues(int_field(j, "modulus"),
                                   int_vector(field(j, "residues"), "'residues'"));
}

Json placements_to_json(const std::vector<Placement>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) {
        out.push_back(Json{{"c", p.c.brackets()}, {"d", p.d.brackets()}});
    }
    return out;
}

Json dvr_matrix_to_json(const DvrMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_fraction_string());
        rows.push_back(std::move(row));
    }
    return Json{{"prime", m.prime()}, {"entries", rows}};
}

DvrMatrix dvr_matrix_from_json(const Json& j) {
    const std::int64_t p = int_field(j, "prime");
    const Json& rows = field(j, "entries");
    if (!rows.is_array() || rows.empty()) throw ParseError("'entries' must be a nonempty array");
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    if (cols == 0) throw ParseError("matrix rows must be nonempty arrays");
    DvrMatrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& cell = rows[i][c];
            if (!cell.is_string()) throw ParseError("matrix entries must be 'num/den' strings");
            m.set(i, c, LocalizedRational::parse(cell.get<std::string>(), p));
        }
    }
    return m;
}

Json abelian_group_to_json(const AbelianGroup& g) { return Json(g.factors()); }

AbelianGroup abelian_group_from_json(const Json& j) {
    try {
        return AbelianGroup(int_vector(j, "'group'"));
    } catch (const ElementOutOfRange& e) {
        throw ParseError(e.what());
    }
}

Json genus_input_to_json(const GenusInput& input) {
    Json places = Json::array();
    for (const auto& pl : input.places) {
        Json entry{{"id", pl.id},
                   {"kind", pl.kind == PlaceData::Kind::finite ? "finite" : "real"},
                   {"frobenius", pl.frobenius},
                   {"capacity", pl.capacity}};
        entry["geo_type"] = pl.geo_type ? gamma_to_json(*pl.geo_type) : Json(nullptr);
        places.push_back(std::move(entry));
    }
    Json flags = Json::array();
    for (bool unramified : input.arch_unramified) {
        flags.push_back(unramified ? "unramified" : "ramified");
    }
    return Json{{"n", input.degree},
                {"group", abelian_group_to_json(input.group)},
                {"places", places},
                {"arch_flags", flags}};
}

GenusInput genus_input_from_json(const Json& j) {
    GenusInput input;
    input.degree = int_field(j, "n");
    input.group = abelian_group_from_json(field(j, "group"));

    const Json& places = field(j, "places");
    if (!places.is_array()) throw ParseError("'places' must be an array");
    for (const auto& entry : places) {
        PlaceData pl;
        const Json& id = field(entry, "id");
        if (!id.is_string()) throw ParseError("place 'id' must be a string");
        pl.id = id.get<std::string>();
        const Json& kind = field(entry, "kind");
        if (kind == "finite") {
            pl.kind = PlaceData::Kind::finite;
        } else if (kind == "real") {
            pl.kind = PlaceData::Kind::real;
        } else {
            throw ParseError("place 'kind' must be \"finite\" or \"real\"");
        }
        pl.frobenius = int_vector(field(entry, "frobenius"), "'frobenius'");
        pl.capacity = int_field(entry, "capacity");
        if (entry.contains("geo_type") && !entry.at("geo_type").is_null()) {
            pl.geo_type = gamma_from_json(entry.at("geo_type"));
        }
        input.places.push_back(std::move(pl));
    }

    if (j.contains("arch_flags")) {
        const Json& flags = j.at("arch_flags");
        if (!flags.is_array()) throw ParseError("'arch_flags' must be an array");
        for (const auto& f : flags) {
            if (f == "unramified") {
                input.arch_unramified.push_back(true);
            } else if (f == "ramified") {
                input.arch_unramified.push_back(false);
            } else {
                throw ParseError("arch flags must be \"ramified\" or \"unramified\"");
            }
        }
    }
    input.validate();
    return input;
}

Json quotient_to_json(const Quotient& q) {
    return Json{{"invariant_factors", q.group().factors()}, {"order", q.group().order()}};
}

Json labeled_complex_to_json(const LabeledComplex& c) {
    Json vertices = Json::array();
    for (const auto& v : c.vertices) {
        vertices.push_back(Json{{"coords", v.coordinates},
                                {"label", v.label},
                                {"extreme", v.extreme}});
    }
    return Json{{"places", c.place_ids}, {"shape", c.shape}, {"vertices", vertices}};
}

Json oracle_report_to_json(const OracleReport& r) {
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back(Json{{"check", m.check}, {"b", m.b}, {"p", m.p}, {"detail", m.detail}});
    }
    return Json{{"checks", r.checks}, {"match", r.ok()}, {"mismatches", mismatches}};
}

} // namespace spinor
