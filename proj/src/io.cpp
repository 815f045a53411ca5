#include "sympmat/io.hpp"

#include <sstream>

#include "sympmat/error.hpp"

namespace sympmat::io {

using sympmat::to_string;

Json pair_to_json(const Pair& p, int n) {
    GroundSet e{n};
    return Json::array({e.to_signed(p.lo), e.to_signed(p.hi)});
}

Json bases_to_json(const BasisSet& b, int n) {
    Json out = Json::array();
    for (const Pair& p : b) out.push_back(pair_to_json(p, n));
    return out;
}

BasisSet bases_from_json(const Json& j, int n) {
    GroundSet e{n};
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "bases must be an array of pairs");
    BasisSet out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw Error(ErrorKind::InvalidInput, "each basis must be a pair of signed integer labels");
        out.push_back(make_pair(e.from_signed(item[0].get<int>()), e.from_signed(item[1].get<int>())));
    }
    return normalize(std::move(out));
}

BasisSet read_matroid_document(const Json& doc, int& n_out) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("bases") || !doc["n"].is_number_integer())
        throw Error(ErrorKind::InvalidInput, R"(matroid document needs {"n": int, "bases": [[int, int], ...]})");
    n_out = doc["n"].get<int>();
    if (n_out < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    return bases_from_json(doc["bases"], n_out);
}

Json to_json(const SymmetricMatroid& m) {
    GroundSet e = m.ground();
    Json bags = Json::array();
    for (const auto& bag : m.bags()) {
        Json b = Json::array();
        for (Position p : bag) b.push_back(e.to_signed(p));
        bags.push_back(std::move(b));
    }
    Json loops = Json::array();
    for (Position p : m.loops()) loops.push_back(e.to_signed(p));
    return Json{{"n", m.n()}, {"bags", std::move(bags)}, {"loops", std::move(loops)}, {"degree", degree(m)}};
}

Json to_json(const LatticePolytope& p) {
    Json pts = Json::array();
    for (const auto& x : p.points) pts.push_back(x);
    Json out{{"dim_ambient", p.dim_ambient}, {"points", std::move(pts)}};
    if (!p.points.empty()) out["affine_dim"] = affine_dim(p);
    return out;
}

Json to_json(const PluckerWitness& w) {
    Json matrix = Json::array();
    for (std::size_t r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < w.matrix().cols(); ++c) row.push_back(to_string(w.matrix()(r, c)));
        matrix.push_back(std::move(row));
    }
    GroundSet e{w.n()};
    Json pl = Json::array();
    for (Position i = 1; i <= e.size(); ++i)
        for (Position j = i + 1; j <= e.size(); ++j)
            pl.push_back(Json{{"pair", pair_to_json({i, j}, w.n())}, {"value", to_string(w.coordinate(i, j))}});
    return Json{{"n", w.n()},
                {"matrix", std::move(matrix)},
                {"plucker", std::move(pl)},
                {"symplectic_sum", to_string(symplectic_sum(w))}};
}

PluckerWitness witness_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("matrix"))
        throw Error(ErrorKind::InvalidInput, "witness needs n and matrix");
    const int n = j["n"].get<int>();
    const auto& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != 2) throw Error(ErrorKind::InvalidInput, "matrix must have two rows");
    RationalMatrix m(2, 2 * n);
    for (std::size_t r = 0; r < 2; ++r) {
        if (!rows[r].is_array() || rows[r].size() != m.cols())
            throw Error(ErrorKind::InvalidInput, "matrix row has wrong length");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(rows[r][c].get<std::string>());
    }
    if (!j.contains("plucker")) return PluckerWitness(n, std::move(m));
    GroundSet e{n};
    const std::size_t size = static_cast<std::size_t>(2 * n);
    std::vector<Rational> pl(size * (size - 1) / 2);
    for (const auto& entry : j["plucker"]) {
        Pair p = make_pair(e.from_signed(entry["pair"][0].get<int>()), e.from_signed(entry["pair"][1].get<int>()));
        pl[plucker_index(p.lo, p.hi, n)] = parse_rational(entry["value"].get<std::string>());
    }
    return PluckerWitness(n, std::move(m), std::move(pl));
}

Json to_json(const CertificateCheck& c) { return Json{{"ok", c.ok}, {"reason", std::string(to_string(c.reason))}}; }

std::string_view to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::None: return "none";
        case Trichotomy::OnlyDeg0: return "only_degree_0";
        case Trichotomy::OnlyDegGe2: return "only_degree_ge_2";
        case Trichotomy::Both: return "both";
    }
    return "?";
}

std::string_view to_string(Torus t) { return t == Torus::Full ? "T'" : "T"; }

std::string_view to_string(DimensionCase c) {
    switch (c) {
        case DimensionCase::LengthTwo: return "length_two";
        case DimensionCase::DegreeZero: return "degree_zero";
        case DimensionCase::DegreeAtLeastTwo: return "degree_at_least_two";
    }
    return "?";
}

Json to_json(const RepresentabilityReport& r, int n) {
    Json lifts = Json::array();
    for (const auto& l : r.liftings) lifts.push_back(to_json(l.matroid));
    Json normal = Json::array();
    for (const auto& m : r.normal_liftings) normal.push_back(to_json(m));
    Json out{{"n", n},
             {"representable", r.representable},
             {"trichotomy", std::string(to_string(r.trichotomy))},
             {"max_lifting", r.witness_lifting ? to_json(*r.witness_lifting) : Json(nullptr)},
             {"multiple_maximal", r.multiple_maximal},
             {"normal_liftings", std::move(normal)},
             {"liftings", std::move(lifts)}};
    return out;
}

Json to_json(const StabilizerReport& s) {
    return Json{{"torus", std::string(to_string(s.torus))}, {"dim", s.dim}, {"components", s.components}};
}

Json to_json(const CellDimensions& d) {
    return Json{{"total", d.total},
                {"fiber", d.fiber},
                {"quotient", d.quotient},
                {"formula",
                 Json{{"case", std::string(to_string(d.formula.kase))},
                      {"first", d.formula.first},
                      {"second", d.formula.second},
                      {"total", d.formula.total()}}},
                {"agrees", d.agrees},
                {"flagged", d.flagged}};
}

Json to_json(const StratumReport& r) {
    const int n = r.matroid.n();
    Json out{{"bases", bases_to_json(r.matroid.bases(), n)},
             {"representable", r.representable},
             {"trichotomy", std::string(to_string(r.trichotomy))},
             {"max_lifting", to_json(r.dims.max_lifting)},
             {"degree", r.degree},
             {"weight", r.weight},
             {"length", r.length},
             {"dims", to_json(r.dims)},
             {"stabilizer", Json::array({to_json(r.stabilizer_full), to_json(r.stabilizer_symplectic)})},
             {"homology", r.homology ? Json(std::string(to_string(*r.homology))) : Json(nullptr)},
             {"orbit", r.orbit_index},
             {"orbit_representative", bases_to_json(r.orbit_representative, n)}};
    return out;
}

Json to_json(const Classification& c) {
    Json strata = Json::array();
    for (const auto& r : c.strata) strata.push_back(to_json(r));
    Json out{{"n", c.n}, {"strata", std::move(strata)}};
    if (!c.types.empty()) {
        Json types = Json::array();
        for (const auto& t : c.types)
            types.push_back(Json{{"stratum", bases_to_json(t.stratum, c.n)},
                                 {"closed_point_orbit", t.closed_point_orbit},
                                 {"dim", t.dim},
                                 {"homology", std::string(to_string(t.homology))}});
        out["types"] = std::move(types);
    }
    return out;
}

Json to_json(const SchubertVariety& s, int n) {
    return Json{{"pair", pair_to_json(s.pair, n)}, {"dim", s.dim}, {"vanishing", bases_to_json(s.vanishing, n)}};
}

std::string bases_text(const BasisSet& b, int n) { return bases_to_json(b, n).dump(); }

std::string bags_text(const SymmetricMatroid& m) {
    GroundSet e = m.ground();
    std::string out;
    for (const auto& bag : m.bags()) {
        out += "{";
        for (std::size_t k = 0; k < bag.size(); ++k) out += (k ? "," : "") + e.name(bag[k]);
        out += "}";
    }
    return out;
}

std::string strata_csv(const Classification& c) {
    std::ostringstream os;
    os << "bases,trichotomy,max_lifting,degree,weight,length,dim_total,dim_fiber,dim_quotient,dim_formula,"
          "formula_case,formula_agrees,flagged,stab_full_dim,stab_full_components,stab_sym_dim,stab_sym_components,"
          "homology,orbit\n";
    for (const auto& r : c.strata) {
        os << '"' << bases_text(r.matroid.bases(), c.n) << "\"," << to_string(r.trichotomy) << ',' << '"'
           << bags_text(r.dims.max_lifting) << "\"," << r.degree << ',' << r.weight << ',' << r.length << ','
           << r.dims.total << ',' << r.dims.fiber << ',' << r.dims.quotient << ',' << r.dims.formula.total() << ','
           << to_string(r.dims.formula.kase) << ',' << (r.dims.agrees ? "true" : "false") << ','
           << (r.dims.flagged ? "true" : "false") << ',' << r.stabilizer_full.dim << ','
           << r.stabilizer_full.components << ',' << r.stabilizer_symplectic.dim << ','
           << r.stabilizer_symplectic.components << ',' << (r.homology ? to_string(*r.homology) : "") << ','
           << r.orbit_index << '\n';
    }
    return os.str();
}

}  // namespace sympmat::io
