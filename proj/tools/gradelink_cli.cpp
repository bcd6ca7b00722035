#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradelink/session.hpp"

using json = nlohmann::ordered_json;
using gradelink::Error;

namespace {

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw Error("schema", "cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw Error("parse-error", std::string("bad JSON input: ") + e.what());
    }
}

void write_output(const json& doc, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw Error("schema", "cannot open output file: " + path);
        out << doc.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gradelink: graded module homology and linkage over quotient rings\n"
        "Reads a JSON session (ring, modules, maps, command, args) and writes a report."};
    std::string command, in_path, out_path, fixture;
    int bound = -1, budget = -1, degree_cap = -1, jarg = INT32_MIN, garg = INT32_MIN,
        narg = INT32_MIN, length = INT32_MIN, index = INT32_MIN;
    long long seed = -1;
    std::string module_name, coefficient_name, qmodule_name, other_name, omega_name, map_name,
        candidate_name;
    app.add_option("command", command,
                   "command to run (overrides the input document); `fixtures` emits a "
                   "built-in session document");
    app.add_option("--in", in_path, "input JSON path ('-' = stdin, default)");
    app.add_option("--out", out_path, "output path ('-' = stdout, default)");
    app.add_option("--fixture", fixture, "fixture name for the fixtures command");
    app.add_option("--bound", bound, "Ext-vanishing verification bound (default 6)");
    app.add_option("--budget", budget, "search budget for iso/surjection hunts (default 32)");
    app.add_option("--seed", seed, "RNG seed (GRADELINK_SEED env overrides)");
    app.add_option("--degree-cap", degree_cap, "Groebner degree cap");
    app.add_option("--j", jarg, "intermediate dimension level j");
    app.add_option("--g", garg, "grade parameter g");
    app.add_option("--n", narg, "Serre condition index n");
    app.add_option("--length", length, "resolution length");
    app.add_option("--index", index, "Ext index");
    app.add_option("--module", module_name, "name of the module argument");
    app.add_option("--coefficient", coefficient_name, "name of the coefficient module");
    app.add_option("--q-module", qmodule_name, "name of the (quasi-Gorenstein) linking module");
    app.add_option("--other", other_name, "name of the second module (linked-pair)");
    app.add_option("--omega", omega_name, "name of the canonical module");
    app.add_option("--map", map_name, "name of the map argument (link)");
    app.add_option("--candidate", candidate_name, "name of the semidualizing candidate");
    CLI11_PARSE(app, argc, argv);

    try {
        json input;
        if (command == "fixtures") {
            input = json::object();
            input["command"] = "fixtures";
            input["args"] = json::object();
            if (!fixture.empty()) input["args"]["fixture"] = fixture;
        } else {
            input = read_input(in_path);
            if (!command.empty()) input["command"] = command;
        }
        if (!input.contains("args") || !input["args"].is_object()) input["args"] = json::object();
        auto& args = input["args"];
        auto set_if = [&](const char* key, auto value, auto sentinel) {
            if (value != sentinel) args[key] = value;
        };
        set_if("bound", bound, -1);
        set_if("budget", budget, -1);
        set_if("degree_cap", degree_cap, -1);
        set_if("j", jarg, INT32_MIN);
        set_if("g", garg, INT32_MIN);
        set_if("n", narg, INT32_MIN);
        set_if("length", length, INT32_MIN);
        set_if("index", index, INT32_MIN);
        if (seed >= 0) args["seed"] = seed;
        if (const char* env = std::getenv("GRADELINK_SEED")) args["seed"] = std::stoll(env);
        auto set_name = [&](const char* key, const std::string& v) {
            if (!v.empty()) args[key] = v;
        };
        set_name("module", module_name);
        set_name("coefficient", coefficient_name);
        set_name("q_module", qmodule_name);
        set_name("other", other_name);
        set_name("omega", omega_name);
        set_name("map", map_name);
        set_name("candidate", candidate_name);
        if (!fixture.empty()) args["fixture"] = fixture;

        json report = gradelink::run_session(input);
        write_output(report, out_path);
        return 0;
    } catch (const Error& e) {
        json err;
        err["error"] = {{"code", e.code}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return gradelink::exit_code_for(e);
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"code", "internal"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 3;
    }
}
