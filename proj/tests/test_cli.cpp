#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <unistd.h>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const std::string& suffix) {
    std::string tmpl = "/tmp/bbwcheck_test_XXXXXX";
    const int fd = mkstemp(tmpl.data());
    REQUIRE(fd >= 0);
    close(fd);
    std::remove(tmpl.c_str());
    return tmpl + suffix;
}

std::string binary() {
    const char* bin = std::getenv("BBWCHECK_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "BBWCHECK_BIN must point at the bbwcheck binary");
    return bin;
}

std::string schema_path() {
    const char* p = std::getenv("BBWCHECK_SCHEMA");
    REQUIRE_MESSAGE(p != nullptr, "BBWCHECK_SCHEMA must point at schema/report.schema.json");
    return p;
}

RunResult run(const std::string& args) {
    const std::string out_path = temp_path(".out");
    const std::string cmd = binary() + " " + args + " > " + out_path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    std::ifstream is(out_path);
    std::stringstream ss;
    ss << is.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// Minimal JSON-schema checker for the subset used by report.schema.json:
// type, enum, required, properties, items, $ref into #/definitions.
bool validates(const json& schema, const json& root, const json& node, std::string* why) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"];
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return validates(root["definitions"][ref.substr(prefix.size())], root, node, why);
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        const bool ok = (type == "object" && node.is_object()) ||
                        (type == "array" && node.is_array()) ||
                        (type == "string" && node.is_string()) ||
                        (type == "integer" && node.is_number_integer()) ||
                        (type == "number" && node.is_number()) ||
                        (type == "boolean" && node.is_boolean());
        if (!ok) {
            *why = "expected type " + type + ", got " + node.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& v : schema["enum"]) hit = hit || v == node;
        if (!hit) {
            *why = "value " + node.dump() + " not in enum";
            return false;
        }
    }
    if (node.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!node.contains(key.get<std::string>())) {
                    *why = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (node.contains(key) && !validates(sub, root, node[key], why)) {
                    *why = key + ": " + *why;
                    return false;
                }
    }
    if (node.is_array() && schema.contains("items"))
        for (const auto& item : node)
            if (!validates(schema["items"], root, item, why)) return false;
    return true;
}

void check_schema(const std::string& report_path) {
    const json schema = json::parse(slurp(schema_path()));
    const json report = json::parse(slurp(report_path));
    std::string why;
    const bool ok = validates(schema, schema, report, &why);
    CHECK_MESSAGE(ok, why);
}

}  // namespace

TEST_CASE("verify: pass, JSON report, schema validation") {
    const std::string path = temp_path(".json");
    const auto r = run("verify --family sgr --m 2 --json " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    const json j = json::parse(slurp(path));
    CHECK(j["verdict"] == "pass");
    CHECK(j["doubled"] == true);
    CHECK(j["lengths"]["collection"] == 4);
    CHECK(j["lengths"]["rank_k0"] == 4);
    check_schema(path);
    std::remove(path.c_str());
}

TEST_CASE("verify: parameter too small exits 2") {
    const auto r = run("verify --family gr --n 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify: a broken custom collection exits 1 with a witness") {
    const std::string path = temp_path(".json");
    const auto r = run("verify --family gr --n 4 --first-block \"O(1);O\" --partition 2 --json " +
                       path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    const json j = json::parse(slurp(path));
    CHECK(j["verdict"] == "fail");
    CHECK(!j["violations"].empty());
    check_schema(path);
    std::remove(path.c_str());
}

TEST_CASE("ext output matches the Gr(2,6) middle line") {
    const auto r = run("ext --space gr --n 6 --from \"Sym^2 U*\" --to \"Sym^2 U*(-3)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("deg 4: dim 1") != std::string::npos);
}

TEST_CASE("cohomology reports singular vanishing") {
    const auto r = run("cohomology --space ogr --m 3 --bundle \"Spin(-1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("zero") != std::string::npos);
}

TEST_CASE("complex-check and spinor relations") {
    const std::string path = temp_path(".json");
    const auto r = run("complex-check --space gr --n 5 --kind crucial --k 1 --json " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    check_schema(path);
    std::remove(path.c_str());
    const auto rs = run("complex-check --space ogr --m 3 --kind spinor");
    CHECK(rs.exit_code == 0);
}

TEST_CASE("reduced-mode verify of the big orthogonal case") {
    const std::string path = temp_path(".json");
    const auto r = run("verify --family ogr --m 4 --mode reduced --json " + path);
    CHECK(r.exit_code == 0);
    const json j = json::parse(slurp(path));
    CHECK(j["mode"] == "reduced");
    CHECK(j["verdict"] == "pass");
    check_schema(path);
    std::remove(path.c_str());
}

TEST_CASE("k-decompose prints an integral decomposition") {
    const std::string path = temp_path(".json");
    const auto r =
        run("k-decompose --family gr --n 6 --target \"Sym^2 U*(3)\" --json " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    const json j = json::parse(slurp(path));
    CHECK(j["verdict"] == "pass");
    check_schema(path);
    std::remove(path.c_str());
}

TEST_CASE("clifford-check JSON validates") {
    const std::string path = temp_path(".json");
    const auto r = run("clifford-check --n 5 --samples 3 --json " + path);
    CHECK(r.exit_code == 0);
    check_schema(path);
    std::remove(path.c_str());
}

TEST_CASE("JSON output is byte-identical across parallelism degrees") {
    const std::string p1 = temp_path(".json");
    const std::string p4 = temp_path(".json");
    CHECK(run("verify --family ogr --m 3 --threads 1 --json " + p1).exit_code == 0);
    CHECK(run("verify --family ogr --m 3 --threads 4 --json " + p4).exit_code == 0);
    CHECK(slurp(p1) == slurp(p4));
    CHECK(!slurp(p1).empty());
    std::remove(p1.c_str());
    std::remove(p4.c_str());
}
