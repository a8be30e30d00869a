#include "cmreg/io.hpp"

#include "cmreg/errors.hpp"

namespace cmreg {

using nlohmann::json;

namespace {

json int_str(const Int& v) { return v.str(); }

json rat_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

json int_list(const std::vector<Int>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_str(x));
    return out;
}

json zpoly_json(const ZPoly& p) {
    json out = json::array();
    for (const auto& a : p.c) out.push_back(a.str());
    return out;
}

Int parse_int_field(const json& v, const char* what) {
    try {
        if (v.is_string()) return Int(v.get<std::string>());
        if (v.is_number_integer()) return Int(v.get<long long>());
    } catch (const std::exception&) {
    }
    throw invalid_spec(std::string("expected an integer for ") + what);
}

int parse_small_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw invalid_spec(std::string("expected an integer for ") + what);
    return v.get<int>();
}

FamilySpec parse_family(const json& doc, int n);

FamilySpec parse_family_kind(const json& ideal, int n) {
    if (!ideal.is_object() || !ideal.contains("kind") || !ideal["kind"].is_string()) {
        throw invalid_spec("ideal: missing kind");
    }
    const std::string kind = ideal["kind"].get<std::string>();
    FamilySpec fam;
    fam.n = n;
    if (kind == "completeIntersection") {
        fam.kind = FamilySpec::Kind::CompleteIntersection;
        if (!ideal.contains("degrees") || !ideal["degrees"].is_array()) {
            throw invalid_spec("completeIntersection: missing degrees list");
        }
        for (const auto& v : ideal["degrees"]) fam.degrees.push_back(parse_small_int(v, "degrees"));
    } else if (kind == "powers") {
        fam.kind = FamilySpec::Kind::Powers;
        if (!ideal.contains("c") || !ideal.contains("a")) throw invalid_spec("powers: need c and a");
        fam.c = parse_small_int(ideal["c"], "c");
        fam.a = parse_small_int(ideal["a"], "a");
    } else if (kind == "cyclicPolytope") {
        fam.kind = FamilySpec::Kind::CyclicPolytope;
        if (!ideal.contains("d")) throw invalid_spec("cyclicPolytope: need d");
        fam.d = parse_small_int(ideal["d"], "d");
    } else if (kind == "lexOf") {
        fam.kind = FamilySpec::Kind::LexOf;
        if (!ideal.contains("of")) throw invalid_spec("lexOf: need inner ideal under 'of'");
        fam.inner = std::make_shared<FamilySpec>(parse_family(ideal["of"], n));
    } else if (kind == "explicit") {
        fam.kind = FamilySpec::Kind::Explicit;
        if (!ideal.contains("generators") || !ideal["generators"].is_array()) {
            throw invalid_spec("explicit: missing generators");
        }
        std::vector<Monomial> gens;
        for (const auto& row : ideal["generators"]) {
            if (!row.is_array()) throw invalid_spec("explicit: generator must be an exponent list");
            Monomial m;
            for (const auto& v : row) {
                const int exp = parse_small_int(v, "exponent");
                if (exp < 0) throw invalid_spec("explicit: negative exponent");
                m.exps.push_back(exp);
            }
            if (m.vars() != n) throw invalid_spec("explicit: exponent list length must equal ring.vars");
            gens.push_back(std::move(m));
        }
        try {
            fam.ideal = minimalize(n, std::move(gens));
        } catch (const unit_ideal&) {
            throw invalid_spec("explicit: a generator has degree 0");
        }
    } else {
        throw invalid_spec("ideal: unknown kind '" + kind + "'");
    }
    return fam;
}

FamilySpec parse_family(const json& doc, int n) { return parse_family_kind(doc, n); }

json family_to_json(const FamilySpec& fam) {
    json out;
    switch (fam.kind) {
        case FamilySpec::Kind::CompleteIntersection:
            out["kind"] = "completeIntersection";
            out["degrees"] = fam.degrees;
            break;
        case FamilySpec::Kind::Powers:
            out["kind"] = "powers";
            out["c"] = fam.c;
            out["a"] = fam.a;
            break;
        case FamilySpec::Kind::CyclicPolytope:
            out["kind"] = "cyclicPolytope";
            out["d"] = fam.d;
            break;
        case FamilySpec::Kind::LexOf:
            out["kind"] = "lexOf";
            out["of"] = family_to_json(*fam.inner);
            break;
        case FamilySpec::Kind::Explicit: {
            out["kind"] = "explicit";
            json gens = json::array();
            for (const auto& g : fam.ideal.gens) gens.push_back(g.exps);
            out["generators"] = gens;
            break;
        }
    }
    return out;
}

} // namespace

InputSpec parse_input(const json& doc) {
    if (!doc.is_object()) throw invalid_spec("input: expected an object");
    InputSpec spec;
    if (doc.contains("version")) {
        if (!doc["version"].is_string() || doc["version"].get<std::string>() != "1") {
            throw invalid_spec("input: unsupported version");
        }
    }
    if (!doc.contains("ring") || !doc["ring"].is_object() || !doc["ring"].contains("vars")) {
        throw invalid_spec("input: missing ring.vars");
    }
    const int n = parse_small_int(doc["ring"]["vars"], "ring.vars");
    if (n < 1) throw invalid_spec("input: ring.vars must be >= 1");
    if (!doc.contains("ideal")) throw invalid_spec("input: missing ideal");
    spec.family = parse_family(doc["ideal"], n);

    if (doc.contains("options")) {
        const json& opt = doc["options"];
        if (!opt.is_object()) throw invalid_spec("options: expected an object");
        if (opt.contains("ell")) {
            spec.options.ell = parse_int_field(opt["ell"], "options.ell");
            if (spec.options.ell < 1) throw invalid_spec("options.ell must be >= 1");
        }
        if (opt.contains("depthPositive")) {
            const json& dp = opt["depthPositive"];
            if (dp.is_boolean()) {
                spec.options.depth = dp.get<bool>() ? Options::Depth::True : Options::Depth::False;
            } else if (dp.is_string() && dp.get<std::string>() == "auto") {
                spec.options.depth = Options::Depth::Auto;
            } else {
                throw invalid_spec("options.depthPositive must be true, false or \"auto\"");
            }
        }
        if (opt.contains("maxLexDegree")) {
            spec.options.max_lex_degree = parse_small_int(opt["maxLexDegree"], "options.maxLexDegree");
            if (spec.options.max_lex_degree < 1) throw invalid_spec("options.maxLexDegree must be >= 1");
        }
        if (opt.contains("levels")) {
            if (!opt["levels"].is_array()) throw invalid_spec("options.levels must be a list");
            for (const auto& v : opt["levels"]) spec.options.levels.push_back(parse_small_int(v, "levels"));
        }
    }
    return spec;
}

InputSpec parse_input_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw invalid_spec(std::string("input is not valid JSON: ") + ex.what());
    }
    return parse_input(doc);
}

json input_to_json(const InputSpec& spec) {
    json out;
    out["version"] = spec.version;
    out["ring"] = json{{"vars", spec.family.n}};
    out["ideal"] = family_to_json(spec.family);
    json opt;
    opt["ell"] = spec.options.ell.str();
    switch (spec.options.depth) {
        case Options::Depth::True: opt["depthPositive"] = true; break;
        case Options::Depth::False: opt["depthPositive"] = false; break;
        case Options::Depth::Auto: opt["depthPositive"] = "auto"; break;
    }
    if (spec.options.max_lex_degree >= 0) opt["maxLexDegree"] = spec.options.max_lex_degree;
    if (!spec.options.levels.empty()) opt["levels"] = spec.options.levels;
    out["options"] = opt;
    return out;
}

json report_to_json(const Report& rep) {
    json out;
    out["version"] = "1";
    out["input"] = input_to_json(rep.input);

    json hil;
    hil["numerator"] = zpoly_json(rep.hilbert.numerator);
    hil["vars"] = rep.hilbert.n;
    hil["reduced"] = zpoly_json(rep.hilbert.q);
    hil["dimension"] = rep.hilbert.d;
    hil["codimension"] = rep.hilbert.c;
    hil["postulation"] = rep.hilbert.postulation;
    hil["h"] = int_list(rep.hilbert.h);
    hil["polynomial"] = rep.hilbert.polynomial;
    out["hilbert"] = hil;

    if (rep.coeffs) {
        json co;
        co["e"] = int_list(rep.coeffs->e);
        co["cumulative"] = int_list(rep.cumulative->e);
        co["ell"] = rep.coeffs->ell.str();
        out["coefficients"] = co;
    }
    if (rep.gotzmann) {
        json go;
        go["counts"] = int_list(rep.gotzmann->b);
        json runs = json::array();
        for (const auto& [value, mult] : rep.gotzmann->c_runs) {
            runs.push_back(json::array({value, mult.str()}));
        }
        go["cRuns"] = runs;
        if (rep.gotzmann->s <= 64) {
            json clist = json::array();
            for (const auto& [value, mult] : rep.gotzmann->c_runs) {
                for (Int i = 0; i < mult; ++i) clist.push_back(value);
            }
            go["c"] = clist;
        }
        go["s"] = rep.gotzmann->s.str();
        go["verified"] = rep.gotzmann->verified;
        out["gotzmann"] = go;
    }

    if (rep.dimension_zero) {
        out["bounds"] = "DimensionZero";
    } else if (rep.bounds) {
        const BoundsPart& bp = *rep.bounds;
        json bo;
        bo["xi"] = int_list(bp.xi);
        json upper, gotz;
        for (const auto& [p, v] : bp.upper) upper[std::to_string(p)] = v.str();
        for (const auto& [p, v] : bp.gotzmann) gotz[std::to_string(p)] = v.str();
        bo["upper"] = upper;
        bo["gotzmann"] = gotz;
        bo["gradedGeneral"] = bp.graded_general.str();
        bo["gradedDepthPositive"] = bp.graded_depth_positive ? json(bp.graded_depth_positive->str()) : json();
        json ineqs = json::array();
        for (const auto& rec : bp.coeff_inequalities) {
            ineqs.push_back(json{{"i", rec.index},
                                 {"lhs", rec.lhs.str()},
                                 {"rhs", rat_str(rec.rhs)},
                                 {"holds", rec.holds}});
        }
        bo["coeffInequalities"] = ineqs;
        bo["lowerRoots"] = bp.lower_roots ? json(Int(*bp.lower_roots).str()) : json();
        bo["lowerBinomial"] = bp.lower_binomial ? json(Int(*bp.lower_binomial).str()) : json();
        bo["multiplicity"] = bp.multiplicity
            ? json{{"holds", bp.multiplicity->holds}, {"isEquality", bp.multiplicity->is_equality}}
            : json();
        bo["extremalSeriesMatch"] = bp.extremal_series_match ? json(*bp.extremal_series_match) : json();
        bo["coeffGrowth"] = bp.coeff_growth ? json(*bp.coeff_growth) : json();
        bo["question"] = bp.question
            ? json{{"t", bp.question->t},
                   {"regHolds", bp.question->reg_holds},
                   {"coeffsHold", bp.question->coeffs_hold}}
            : json();
        out["bounds"] = bo;
    }

    if (rep.oracle) {
        const char* method = "none";
        switch (rep.oracle->method) {
            case OracleResult::Method::ClosedForm: method = "closedForm"; break;
            case OracleResult::Method::EliahouKervaire: method = "eliahouKervaire"; break;
            case OracleResult::Method::None: method = "none"; break;
        }
        out["oracle"] = json{{"method", method},
                             {"reg", Int(rep.oracle->reg).str()},
                             {"reg1", Int(rep.oracle->reg1).str()}};
    } else {
        out["oracle"] = "none";
    }
    if (rep.depth_positive) out["depthPositive"] = *rep.depth_positive;

    json verdicts = json::array();
    for (const auto& v : rep.verdicts) {
        const char* status = v.status == Verdict::Status::Pass ? "pass"
                           : v.status == Verdict::Status::Fail ? "fail" : "no-oracle";
        verdicts.push_back(json{{"claim", v.claim}, {"status", status}});
    }
    out["verdicts"] = verdicts;
    return out;
}

json sweep_to_json(const SweepResult& res) {
    json out;
    out["version"] = "1";
    json cfg;
    cfg["generator"] = kGeneratorId;
    cfg["seed"] = res.config.seed;
    cfg["count"] = res.config.count;
    cfg["nMin"] = res.config.n_min;
    cfg["nMax"] = res.config.n_max;
    cfg["maxDegree"] = res.config.max_degree;
    cfg["maxGens"] = res.config.max_gens;
    cfg["stableOnly"] = res.config.stable_only;
    out["config"] = cfg;

    out["instances"] = res.instances;
    out["discardedDimensionZero"] = res.discarded_dim_zero;
    out["stronglyStable"] = res.strongly_stable;
    out["saturated"] = res.saturated;

    json checks;
    for (const auto& [claim, stat] : res.checks) {
        checks[claim] = json{{"checked", stat.checked}, {"failures", stat.failures}};
    }
    out["checks"] = checks;

    out["sharpness"] = res.sharpness ? json(rat_str(*res.sharpness)) : json();
    out["question"] = json{{"checked", res.question_checked},
                           {"regHolds", res.question_reg_holds},
                           {"coeffsHold", res.question_coeffs_hold}};

    json failures = json::array();
    for (const auto& f : res.failures) {
        json item;
        item["index"] = f.index;
        item["vars"] = f.n;
        item["generators"] = f.generators;
        item["claims"] = f.claims;
        item["seed"] = res.config.seed;
        // replayable: the counterexample in the full report schema
        try {
            InputSpec spec;
            spec.family.kind = FamilySpec::Kind::Explicit;
            spec.family.n = f.n;
            std::vector<Monomial> gens;
            for (const auto& e : f.generators) gens.push_back(Monomial{e});
            spec.family.ideal = minimalize(f.n, std::move(gens));
            item["report"] = report_to_json(analyze(spec));
        } catch (const std::exception& ex) {
            item["report"] = std::string("analysis failed: ") + ex.what();
        }
        failures.push_back(item);
    }
    out["failures"] = failures;
    return out;
}

std::string canonical_dump(const json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace cmreg
