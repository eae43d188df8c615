#include "ech/serialize.hpp"

#include <limits>

namespace ech {

Json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(to_string(n));
}

Json orbit_set_to_json(const OrbitSet& s) {
    Json out = Json::array();
    for (const auto& e : s.entries()) {
        Json rec;
        rec["label"] = e.orbit.label();
        if (const auto* el = std::get_if<Elliptic>(&e.orbit.kind())) {
            rec["kind"] = "elliptic";
            rec["rotation"] = {{"value", el->rotation.value.str()}, {"tilt", tilt_str(el->rotation.tilt)}};
        } else {
            rec["kind"] = "hyperbolic";
            rec["eigenvalue_sign"] = static_cast<int>(std::get<Hyperbolic>(e.orbit.kind()).eigenvalue_sign);
        }
        rec["action"] = e.orbit.action().str();
        rec["multiplicity"] = e.multiplicity;
        out.push_back(std::move(rec));
    }
    return out;
}

OrbitSet orbit_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("orbit set must be a JSON array");
    OrbitSet out;
    try {
        for (const auto& rec : j) {
            const auto label = rec.at("label").get<std::string>();
            const auto kind = rec.at("kind").get<std::string>();
            const auto act = Rational::parse(rec.at("action").get<std::string>());
            const auto mult = rec.at("multiplicity").get<std::int64_t>();
            if (kind == "elliptic") {
                const auto& rot = rec.at("rotation");
                PerturbedRational theta{Rational::parse(rot.at("value").get<std::string>()),
                                        parse_tilt(rot.at("tilt").get<std::string>())};
                out.add(ReebOrbit::elliptic(label, std::move(theta), act), mult);
            } else if (kind == "hyperbolic") {
                const int sign = rec.at("eigenvalue_sign").get<int>();
                if (sign != 1 && sign != -1) throw ParseError("eigenvalue_sign must be +1 or -1");
                out.add(ReebOrbit::hyperbolic(label, static_cast<EigenvalueSign>(sign), act), mult);
            } else {
                throw ParseError("unknown orbit kind '" + kind + "'");
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed orbit set: ") + ex.what());
    }
    return out;
}

namespace {

Json record_to_json(const GeneratorRecord& r) {
    Json rec;
    rec["m1"] = r.generator.m1;
    rec["m2"] = r.generator.m2;
    rec["grading"] = integer_to_json(r.grading);
    rec["action"] = r.action.str();
    return rec;
}

std::string record_to_csv(const GeneratorRecord& r) {
    return std::to_string(r.generator.m1) + ',' + std::to_string(r.generator.m2) + ',' + to_string(r.grading) +
           ',' + r.action.str() + '\n';
}

constexpr const char* kGeneratorHeader = "m1,m2,grading,action\n";

}  // namespace

Json generators_to_json(std::span<const GeneratorRecord> records) {
    Json out = Json::array();
    for (const auto& r : records) out.push_back(record_to_json(r));
    return out;
}

std::string generators_to_csv(std::span<const GeneratorRecord> records) {
    std::string out = kGeneratorHeader;
    for (const auto& r : records) out += record_to_csv(r);
    return out;
}

Json homology_to_json(const HomologyTable& table) {
    Json out = Json::array();
    for (const auto& [grade, gens] : table.by_grading)
        for (const auto& r : gens) out.push_back(record_to_json(r));
    return out;
}

std::string homology_to_csv(const HomologyTable& table) {
    std::string out = kGeneratorHeader;
    for (const auto& [grade, gens] : table.by_grading)
        for (const auto& r : gens) out += record_to_csv(r);
    return out;
}

Json capacities_to_json(const CapacitySequence& seq) {
    Json out;
    out["a"] = seq.a.str();
    out["b"] = seq.b.str();
    Json values = Json::array();
    for (const auto& v : seq.values) values.push_back(v.str());
    out["values"] = std::move(values);
    return out;
}

std::string capacities_to_csv(const CapacitySequence& seq) {
    std::string out = "k,value\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i)
        out += std::to_string(i + 1) + ',' + seq.values[i].str() + '\n';
    return out;
}

}  // namespace ech
