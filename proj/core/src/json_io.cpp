#include "aslab/json_io.hpp"

#include <stdexcept>

namespace aslab {

Json to_json(const Rational& r) { return Json::array({r.num().get_str(), r.den().get_str()}); }

Rational rational_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("rational: expected [num, den]");
        return Rational(mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()));
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

Json to_json(const RootValue& v) {
    Json j;
    j["radicand"] = to_json(v.radicand());
    j["root"] = v.root();
    return j;
}

RootValue root_value_from_json(const Json& j) {
    return RootValue(rational_from_json(j.at("radicand")), j.at("root").get<unsigned>());
}

Json to_json(const CertInterval& iv) {
    Json j;
    j["lo"] = iv.lo().str();
    j["hi"] = iv.hi().str();
    j["bits"] = iv.bits();
    return j;
}

Json to_json(const NormValue& v) {
    Json j;
    if (v.is_exact()) {
        j["exact"] = to_json(v.exact());
    } else {
        j["enclosure"] = to_json(v.enclosure());
    }
    return j;
}

Json to_json(const SchreierSet& f) {
    Json j;
    j["k"] = f.order;
    j["elements"] = f.elements;
    return j;
}

SchreierSet schreier_from_json(const Json& j) {
    return SchreierSet(j.at("elements").get<std::vector<std::int64_t>>(), j.at("k").get<int>());
}

Json to_json(const WeightMap& w) {
    Json j = Json::object();
    for (const auto& [i, r] : w) j[std::to_string(i)] = to_json(r);
    return j;
}

Json to_json(const FinVec& v) {
    Json coords = Json::object();
    bool rational_kind = v.kind() == CoordKind::Rational;
    for (const auto& [i, c] : v.coords()) {
        if (rational_kind) {
            coords[std::to_string(i)] = to_json(c.coeff());
        } else {
            Json entry;
            entry["coeff"] = to_json(c.coeff());
            entry["base"] = to_json(c.base());
            coords[std::to_string(i)] = entry;
        }
    }
    Json j;
    j["coords"] = coords;
    j["kind"] = rational_kind ? "rational" : "proot";
    j["q"] = v.q();
    if (v.dual()) j["dual"] = true;
    return j;
}

FinVec finvec_from_json(const Json& j) {
    unsigned q = j.value("q", 1u);
    bool dual = j.value("dual", false);
    FinVec v(q, dual);
    std::string kind = j.value("kind", "rational");
    for (const auto& [key, entry] : j.at("coords").items()) {
        std::int64_t i = std::stoll(key);
        if (kind == "rational") {
            v.set(i, rational_from_json(entry));
        } else {
            v.set(i, PthRootCoord(rational_from_json(entry.at("coeff")),
                                  rational_from_json(entry.at("base")), q));
        }
    }
    return v;
}

Json to_json(const NormParams& p) {
    Json j;
    j["family"] = p.family == Family::T ? "T" : "U";
    j["theta"] = to_json(p.theta);
    j["q"] = p.q;
    j["M"] = p.m_prefix;
    j["convention"] = p.convention == Convention::ThetaToQ ? "theta_to_q" : "theta_direct";
    return j;
}

NormParams params_from_json(const Json& j) {
    NormParams p;
    std::string fam = j.value("family", "T");
    p.family = fam == "U" ? Family::U : Family::T;
    if (j.contains("theta")) p.theta = rational_from_json(j.at("theta"));
    p.q = j.value("q", 1u);
    if (j.contains("M")) p.m_prefix = j.at("M").get<std::vector<std::int64_t>>();
    std::string conv = j.value("convention", "theta_to_q");
    p.convention = conv == "theta_direct" ? Convention::ThetaDirect : Convention::ThetaToQ;
    p.validate();
    return p;
}

namespace {

Json lr_to_json(const LrNorm& n) {
    Json j;
    switch (n.r) {
        case LrNorm::R::L1: j["lr"] = "1"; break;
        case LrNorm::R::L2: j["lr"] = "2"; break;
        case LrNorm::R::Linf: j["lr"] = "inf"; break;
    }
    if (!n.weights.empty()) {
        Json w = Json::object();
        for (const auto& [i, r] : n.weights) w[std::to_string(i)] = to_json(r);
        j["weights"] = w;
    }
    return j;
}

LrNorm lr_from_json(const Json& j) {
    LrNorm n;
    std::string r = j.at("lr").get<std::string>();
    if (r == "1") {
        n.r = LrNorm::R::L1;
    } else if (r == "2") {
        n.r = LrNorm::R::L2;
    } else if (r == "inf") {
        n.r = LrNorm::R::Linf;
    } else {
        throw std::invalid_argument("lr norm: r must be 1, 2, or inf");
    }
    if (j.contains("weights")) {
        for (const auto& [key, entry] : j.at("weights").items())
            n.weights.emplace(std::stoll(key), rational_from_json(entry));
    }
    return n;
}

Json tag_to_json(const BlockNormTag& t) {
    if (const auto* lr = std::get_if<LrNorm>(&t)) return lr_to_json(*lr);
    return to_json(std::get<NormParams>(t));
}

BlockNormTag tag_from_json(const Json& j) {
    if (j.contains("lr")) return lr_from_json(j);
    return params_from_json(j);
}

}  // namespace

Json to_json(const BlockStructure& s) {
    Json j;
    j["blocks"] = s.block_sizes;
    j["base"] = tag_to_json(s.base);
    j["outer"] = tag_to_json(s.outer);
    return j;
}

BlockStructure block_structure_from_json(const Json& j) {
    BlockStructure s;
    s.block_sizes = j.at("blocks").get<std::vector<int>>();
    s.base = tag_from_json(j.at("base"));
    s.outer = tag_from_json(j.at("outer"));
    s.validate();
    return s;
}

Json to_json(const GameTranscript& t) {
    Json spec;
    switch (t.spec.kind) {
        case GameKind::N: spec["kind"] = "N"; break;
        case GameKind::A: spec["kind"] = "A"; break;
        case GameKind::Phi: spec["kind"] = "Phi"; break;
    }
    spec["threshold"] = to_json(t.spec.threshold);
    spec["rounds"] = t.spec.rounds;
    spec["space"] = to_json(t.spec.space);
    spec["side"] = t.spec.side == SpaceSide::Primal ? "primal" : "dual";

    Json moves = Json::array();
    for (const auto& mv : t.moves) {
        Json m;
        m["by"] = mv.by == PlayerId::I ? "I" : "II";
        if (const auto* tc = std::get_if<TailConstraint>(&mv.payload)) {
            m["tail"] = tc->min_index;
        } else {
            const auto& v = std::get<VecMove>(mv.payload);
            if (v.m) m["m"] = *v.m;
            if (!v.x.empty() || !v.m) m["x"] = to_json(v.x);
        }
        moves.push_back(m);
    }

    Json payoff;
    payoff["lower"] = to_json(t.payoff.lower);
    if (t.payoff.upper) {
        payoff["upper"] = to_json(*t.payoff.upper);
    } else {
        payoff["upper"] = "unknown";
    }
    payoff["exact"] = t.payoff.exact;

    Json j;
    j["spec"] = spec;
    j["seed"] = t.seed;
    j["moves"] = moves;
    j["F"] = t.schreier;
    j["payoff"] = payoff;
    switch (t.winner) {
        case Winner::PlayerI: j["winner"] = "PlayerI"; break;
        case Winner::PlayerII: j["winner"] = "PlayerII"; break;
        case Winner::Uncertified: j["winner"] = "Uncertified"; break;
    }
    if (t.forfeit_by) {
        j["forfeit"] = Json{{"by", *t.forfeit_by == PlayerId::I ? "I" : "II"},
                            {"reason", t.forfeit_reason}};
    }
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["suite"] = r.suite;
    j["version"] = r.version;
    j["config"] = Json::parse(r.config_echo);
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json cj;
        cj["index"] = c.index;
        cj["statement"] = c.statement;
        cj["inputs"] = c.inputs;
        switch (c.verdict) {
            case Verdict::PassCertified: cj["verdict"] = "pass-certified"; break;
            case Verdict::FailCertified: cj["verdict"] = "fail-certified"; break;
            case Verdict::Undecided: cj["verdict"] = "undecided"; break;
        }
        if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
        cases.push_back(cj);
    }
    j["cases"] = cases;
    j["summary"] = Json{{"pass", r.passed}, {"fail", r.failed}, {"undecided", r.undecided}};
    return j;
}

}  // namespace aslab
