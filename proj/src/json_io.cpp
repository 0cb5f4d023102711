#include "kst/json_io.hpp"

namespace kst {

Json algnum_to_json(const AlgNum& x) {
    switch (x.field().kind) {
    case FieldKind::Rational:
        return rational_to_string(x.coords()[0]);
    case FieldKind::Quad: {
        Json j;
        j["d"] = x.field().d;
        j["a"] = rational_to_string(x.coords()[0]);
        j["b"] = rational_to_string(x.coords()[1]);
        return j;
    }
    case FieldKind::Biquad: {
        Json j;
        j["p"] = x.field().p;
        j["q"] = x.field().q;
        Json c = Json::array();
        for (const auto& r : x.coords()) c.push_back(rational_to_string(r));
        j["c"] = c;
        return j;
    }
    }
    throw std::logic_error("unreachable");
}

AlgNum algnum_from_json(const Json& j) {
    if (j.is_string()) return AlgNum(rational_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return AlgNum(static_cast<long>(j.get<long long>()));
    if (j.is_object() && j.contains("d")) {
        return AlgNum::quad(j.at("d").get<long>(),
                            rational_from_string(j.at("a").get<std::string>()),
                            rational_from_string(j.at("b").get<std::string>()));
    }
    if (j.is_object() && j.contains("p") && j.contains("q")) {
        const auto& c = j.at("c");
        if (!c.is_array() || c.size() != 4)
            throw std::invalid_argument("biquad coordinate array must have 4 entries");
        std::vector<Rational> coords;
        for (const auto& e : c) coords.push_back(rational_from_string(e.get<std::string>()));
        return AlgNum::biquad(j.at("p").get<long>(), j.at("q").get<long>(), std::move(coords));
    }
    throw std::invalid_argument("unrecognized AlgNum encoding: " + j.dump());
}

Json field_to_json(const FieldDesc& f) {
    Json j;
    switch (f.kind) {
    case FieldKind::Rational:
        j["kind"] = "rational";
        break;
    case FieldKind::Quad:
        j["kind"] = "quad";
        j["d"] = f.d;
        break;
    case FieldKind::Biquad:
        j["kind"] = "biquad";
        j["p"] = f.p;
        j["q"] = f.q;
        break;
    }
    return j;
}

FieldDesc field_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDesc::rationals();
    if (kind == "quad") return FieldDesc::quad(j.at("d").get<long>());
    if (kind == "biquad") return FieldDesc::biquad(j.at("p").get<long>(), j.at("q").get<long>());
    throw std::invalid_argument("unknown field kind: " + kind);
}

namespace {

// The Gram field descriptor of a lattice: the widest coefficient field.
FieldDesc lattice_field(const IntersectionLattice& lat) {
    FieldDesc f = FieldDesc::rationals();
    for (const auto& row : lat.gram())
        for (const auto& e : row) f = field_unify(f, e.field());
    return f;
}

} // namespace

Json lattice_to_json(const IntersectionLattice& lat) {
    Json j;
    j["field"] = field_to_json(lattice_field(lat));
    j["classes"] = lat.classes();
    Json gram = Json::array();
    for (const auto& row : lat.gram()) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(algnum_to_json(e));
        gram.push_back(r);
    }
    j["gram"] = gram;
    return j;
}

IntersectionLattice lattice_from_json(const Json& j) {
    std::vector<std::string> classes = j.at("classes").get<std::vector<std::string>>();
    std::vector<std::vector<AlgNum>> gram;
    for (const auto& row : j.at("gram")) {
        std::vector<AlgNum> r;
        for (const auto& e : row) r.push_back(algnum_from_json(e));
        gram.push_back(std::move(r));
    }
    if (j.contains("field")) {
        FieldDesc declared = field_from_json(j.at("field"));
        for (const auto& row : gram)
            for (const auto& e : row)
                if (!field_embeds(e.field(), declared))
                    throw std::invalid_argument("Gram entry " + e.str() +
                                                " does not lie in the declared field " +
                                                declared.str());
    }
    return IntersectionLattice(std::move(classes), std::move(gram));
}

Json model_to_json(const SurfaceBlowupModel& m) {
    Json j = lattice_to_json(m.lattice);
    j["logDiscrepancy"] = algnum_to_json(m.log_discrepancy);
    Json diff = Json::array();
    for (const auto& [label, c] : m.diff_points)
        diff.push_back(Json{{"point", label}, {"coeff", algnum_to_json(c)}});
    j["diffPoints"] = diff;
    Json inc;
    for (const auto& [curve, pts] : m.incidence) {
        Json arr = Json::array();
        for (const auto& [label, mult] : pts)
            arr.push_back(Json{{"point", label}, {"mult", algnum_to_json(mult)}});
        inc[curve] = arr;
    }
    j["incidence"] = inc;
    j["polarizationVolume"] = algnum_to_json(m.polarization_volume);
    return j;
}

SurfaceBlowupModel model_from_json(const Json& j) {
    IntersectionLattice lat = lattice_from_json(j);
    AlgNum a = algnum_from_json(j.at("logDiscrepancy"));
    std::vector<std::pair<std::string, AlgNum>> diff;
    if (j.contains("diffPoints"))
        for (const auto& e : j.at("diffPoints"))
            diff.push_back({e.at("point").get<std::string>(), algnum_from_json(e.at("coeff"))});
    std::map<std::string, std::vector<std::pair<std::string, AlgNum>>> inc;
    if (j.contains("incidence"))
        for (const auto& [curve, arr] : j.at("incidence").items()) {
            std::vector<std::pair<std::string, AlgNum>> pts;
            for (const auto& e : arr)
                pts.push_back({e.at("point").get<std::string>(), algnum_from_json(e.at("mult"))});
            inc[curve] = std::move(pts);
        }
    SurfaceBlowupModel m(std::move(lat), std::move(a), std::move(diff), std::move(inc));
    if (j.contains("polarizationVolume")) {
        AlgNum declared = algnum_from_json(j.at("polarizationVolume"));
        if (!(declared == m.polarization_volume))
            throw std::invalid_argument("declared polarizationVolume disagrees with (P0^2)");
    }
    return m;
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(algnum_to_json(c));
    return arr;
}

Json piecewise_to_json(const PiecewisePoly& f) {
    Json j;
    Json bps = Json::array();
    for (const auto& b : f.breakpoints()) bps.push_back(algnum_to_json(b));
    j["breakpoints"] = bps;
    Json pieces = Json::array();
    for (const auto& p : f.pieces()) pieces.push_back(poly_to_json(p));
    j["pieces"] = pieces;
    return j;
}

Json chambers_to_json(const IntersectionLattice& lat, const std::vector<ZariskiChamber>& chs) {
    Json arr = Json::array();
    for (const auto& ch : chs) {
        Json j;
        j["interval"] = Json::array({algnum_to_json(ch.t_lo), algnum_to_json(ch.t_hi)});
        Json support = Json::array();
        Json coeffs = Json::array();
        for (std::size_t i = 0; i < ch.support.size(); ++i) {
            support.push_back(lat.classes()[ch.support[i]]);
            coeffs.push_back(Json{{"curve", lat.classes()[ch.support[i]]},
                                  {"c0", algnum_to_json(ch.neg_coeffs[i].coeff(0))},
                                  {"c1", algnum_to_json(ch.neg_coeffs[i].coeff(1))}});
        }
        j["support"] = support;
        j["negCoeffs"] = coeffs;
        j["volPiece"] = poly_to_json(ch.vol_piece);
        arr.push_back(j);
    }
    return arr;
}

Json summary_to_json(const RefinementSummary& s) {
    Json j;
    j["S"] = algnum_to_json(s.s_value);
    j["T"] = algnum_to_json(s.t_value);
    j["volume"] = piecewise_to_json(s.volume);
    j["restrictedVolume"] = piecewise_to_json(s.restricted_volume);
    Json f;
    for (const auto& [label, v] : s.fixed_part_mults) f[label] = algnum_to_json(v);
    j["fixedPartMults"] = f;
    j["c1Degree"] = algnum_to_json(s.c1_degree);
    j["beta"] = algnum_to_json(s.beta);
    return j;
}

Json adjunction_to_json(const AdjunctionReport& r) {
    Json j;
    j["lambda"] = algnum_to_json(r.lambda);
    Json pair = Json::array();
    for (const auto& [label, c] : r.induced.points)
        pair.push_back(Json{{"point", label}, {"coeff", algnum_to_json(c)}});
    j["inducedPair"] = pair;
    j["degenerate"] = r.degenerate;
    if (!r.degenerate) {
        j["r"] = algnum_to_json(r.r);
        j["lowerBound"] = algnum_to_json(r.lower_bound);
        j["tight"] = r.tight;
    }
    return j;
}

Json eckardt_to_json(const EckardtReport& r) {
    Json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["S_H"] = algnum_to_json(r.s_h);
    j["F_coeff"] = algnum_to_json(r.f_coeff);
    j["delta_H"] = algnum_to_json(r.delta_h);
    if (r.has_delta_x) j["delta_X"] = algnum_to_json(r.delta_x);
    Json vp = Json::array();
    for (const auto& [iv, formula] : r.volume_pieces)
        vp.push_back(Json{{"interval", iv}, {"formula", formula}});
    j["volumePieces"] = vp;
    if (r.volume) j["volume"] = piecewise_to_json(*r.volume);
    j["volumeIntegralS"] = algnum_to_json(r.volume_integral_s);
    j["assumesConeBaseKSemistable"] = r.assumes_cone_base_ks;
    return j;
}

Json index_two_to_json(const IndexTwoReport& r) {
    Json j;
    j["n"] = r.n;
    j["sTail"] = algnum_to_json(r.s_tail);
    j["c1TailDeg"] = algnum_to_json(r.c1_tail_deg);
    j["curveBound"] = algnum_to_json(r.curve_bound);
    j["etaBound"] = algnum_to_json(r.eta_bound);
    j["pointBound"] = algnum_to_json(r.point_bound);
    j["checks"] = Json{{"sTail<n/(n+1)", r.s_tail_ok},
                       {"c1TailDeg<4n/(n+1)", r.c1_tail_ok},
                       {"curveBound>=(n+1)/n", r.curve_ok},
                       {"pointBound<n", r.point_ok}};
    return j;
}

} // namespace kst
