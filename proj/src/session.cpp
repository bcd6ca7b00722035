#include "gradelink/session.hpp"

#include <chrono>

#include "gradelink/fixtures.hpp"
#include "gradelink/session_impl.hpp"

namespace gradelink {

using json = nlohmann::ordered_json;

int exit_code_for(const Error& e) {
    static const std::set<std::string> input_errors = {
        "parse-error",  "bad-coefficient", "unknown-variable", "inhomogeneous", "not-prime",
        "too-many-vars", "bad-grading",    "unknown-name",     "schema",        "unknown-command",
        "bad-argument", "grade-mismatch",  "undefined",        "empty-candidate", "bad-map",
        "not-artinian", "not-cm",          "unknown-fixture",  "division-by-zero", "pre-not-qg",
        "not-epi"};
    if (input_errors.count(e.code)) return 2;
    return 3;  // degree-cap, budgets, regular-sequence search, internal limits
}

static json field_of(const json& ring) {
    if (!ring.contains("field")) throw Error("schema", "ring.field missing");
    return ring.at("field");
}

json run_session(const json& input) {
    auto t0 = std::chrono::steady_clock::now();
    if (!input.is_object()) throw Error("schema", "session input must be a JSON object");
    if (!input.contains("command")) throw Error("schema", "missing command");
    std::string cmd = input.at("command").get<std::string>();
    if (cmd == "fixtures") {
        std::string name = input.contains("args") && input.at("args").contains("fixture")
                               ? input.at("args").at("fixture").get<std::string>()
                               : throw Error("bad-argument", "fixtures needs args.fixture");
        return fixture_document(name);
    }
    if (!input.contains("ring")) throw Error("schema", "missing ring");
    json f = field_of(input.at("ring"));
    json out;
    if (f.is_string() && f.get<std::string>() == "Q") {
        SessionRunner<RationalField> runner(RationalField{}, input);
        out = runner.run();
    } else {
        uint32_t p = 0;
        if (f.is_string()) {
            std::string s = f.get<std::string>();
            if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) p = uint32_t(std::stoul(s.substr(1)));
            else throw Error("schema", "field must be \"Q\" or \"F<p>\" or {\"p\": <prime>}");
        } else if (f.is_object() && f.contains("p")) {
            p = f.at("p").get<uint32_t>();
        } else {
            throw Error("schema", "field must be \"Q\" or \"F<p>\" or {\"p\": <prime>}");
        }
        SessionRunner<PrimeField> runner(PrimeField(p), input);
        out = runner.run();
    }
    auto t1 = std::chrono::steady_clock::now();
    out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return out;
}

/* ---------- built-in fixtures ---------- */

template <class K>
static json module_doc(const FPModule<K>& M) {
    json m;
    m["degrees"] = M.gen_degrees;
    json rows = json::array();
    if (!M.relations.empty())
        for (int i = 0; i < M.ngens(); ++i) {
            json row = json::array();
            for (auto& col : M.relations) {
                const Poly<K>* e = col.at(i);
                row.push_back(e ? poly_str(M.ring->poly, *e) : "0");
            }
            rows.push_back(row);
        }
    m["matrix"] = rows;
    return m;
}

json fixture_document(const std::string& name) {
    json doc;
    if (name == "koszul-kxy") {
        doc["ring"] = {{"field", "Q"},
                       {"vars", {"x", "y"}},
                       {"order", "grevlex"},
                       {"ideal", json::array()},
                       {"grading", {1, 1}}};
        auto mat = [](std::vector<std::vector<std::string>> rows) {
            json m = json::array();
            for (auto& r : rows) {
                json row = json::array();
                for (auto& e : r) row.push_back(e);
                m.push_back(row);
            }
            return m;
        };
        json mods;
        mods["R"] = {{"degrees", {0}}, {"matrix", json::array()}};
        mods["k"] = {{"degrees", {0}}, {"matrix", mat({{"x", "y"}})}};
        mods["Rx"] = {{"degrees", {0}}, {"matrix", mat({{"x"}})}};
        mods["m"] = {{"degrees", {1, 1}}, {"matrix", mat({{"-y"}, {"x"}})}};
        doc["modules"] = mods;
        doc["maps"] = json::object();
        doc["command"] = "grade";
        doc["args"] = {{"module", "k"}, {"coefficient", "R"}};
        return doc;
    }
    if (name == "artinian-level1") {
        auto t = tower_level1(RationalField{});
        doc["ring"] = {{"field", "Q"},
                       {"vars", {"X", "Y"}},
                       {"order", "grevlex"},
                       {"ideal", {"X^2", "X*Y", "Y^2"}},
                       {"grading", {1, 1}}};
        json mods;
        mods["R"] = module_doc(t.free1);
        mods["k"] = module_doc(t.k);
        mods["omega"] = module_doc(t.omega);
        mods["kR"] = module_doc(direct_sum(t.k, t.free1));
        mods["Romega"] = module_doc(direct_sum(t.free1, t.omega));
        doc["modules"] = mods;
        doc["maps"] = json::object();
        doc["command"] = "semidualizing";
        doc["args"] = {{"candidate", "omega"}, {"bound", 6}};
        return doc;
    }
    if (name == "artinian-level2") {
        auto t = tower_level2(PrimeField(32003));
        doc["ring"] = {{"field", "F32003"},
                       {"vars", {"X", "Y", "U", "V"}},
                       {"order", "grevlex"},
                       {"ideal", {"X^2", "X*Y", "Y^2", "U^2", "U*V", "V^2"}},
                       {"grading", {1, 1, 1, 1}}};
        json mods;
        mods["S"] = module_doc(t.free1);
        mods["C1"] = module_doc(t.c1);
        mods["C2"] = module_doc(t.c2);
        mods["omegaS"] = module_doc(t.omega);
        mods["R"] = module_doc(t.rmod);
        mods["k"] = module_doc(t.k);
        mods["SR"] = module_doc(direct_sum(t.free1, t.rmod));
        mods["Sk"] = module_doc(direct_sum(t.free1, t.k));
        doc["modules"] = mods;
        doc["maps"] = json::object();
        doc["command"] = "semidualizing";
        doc["args"] = {{"candidate", "C1"}, {"bound", 6}};
        return doc;
    }
    throw Error("unknown-fixture", "unknown fixture: " + name +
                                       " (expected koszul-kxy, artinian-level1, artinian-level2)");
}

}  // namespace gradelink
