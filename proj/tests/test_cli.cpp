#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permfix/cli.hpp"
#include "permfix/embeddings.hpp"
#include "permfix/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace permfix;

namespace {

struct RunResult {
    int rc = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = run_command(args, out, err);
    return {rc, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("character table subcommand") {
    RunResult r = run({"chartable", "3", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["values"][0] == Json::array({"1", "1", "1"}));
    CHECK(doc["values"][1] == Json::array({"-1", "0", "2"}));
    CHECK(doc["class_sizes"] == Json::array({"2", "3", "1"}));

    RunResult trivial = run({"chartable", "1", "--json"});
    Json tdoc = Json::parse(trivial.out);
    CHECK(tdoc["values"] == Json::array({Json::array({"1"})}));

    RunResult csv = run({"chartable", "3", "--csv"});
    CHECK(csv.rc == 0);
    CHECK(csv.out.find("irrep,") == 0);

    RunResult again = run({"chartable", "3", "--json"});
    CHECK(again.out == r.out); // byte-stable output
}

TEST_CASE("decomposition subcommand") {
    RunResult r = run({"decompose", "4", "3", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["m"] == 4);
    CHECK(doc["n"] == 3);
    CHECK(doc["entries"][0]["multiplicity"] == "20");
    CHECK(doc["entries"][1]["multiplicity"] == "20");
    CHECK(doc["entries"][2]["multiplicity"] == "4");
    CHECK(doc["fixed_point_shape"] == Json::array({"20", "20", "4"}));
    CHECK(doc["commutant_dimension"] == "816");
    CHECK(doc["total_dimension"] == "64");
}

TEST_CASE("divisibility subcommand exit codes and shadow flag") {
    RunResult sharp = run({"check-lemma", "2", "2", "2", "1", "--json"});
    CHECK(sharp.rc == 0); // hypotheses fail, so nothing is violated
    Json sdoc = Json::parse(sharp.out);
    CHECK(sdoc["hypotheses"]["hold"] == false);
    CHECK(sdoc["violated"] == false);
    CHECK(sdoc["counterexamples"][0]["partition"] == Json::array({2}));
    CHECK(sdoc["counterexamples"][0]["multiplicity"] == "3");
    CHECK(sdoc["uhf_shadow"].is_null());

    RunResult good = run({"check-lemma", "4", "3", "2", "2", "--json"});
    CHECK(good.rc == 0);
    Json gdoc = Json::parse(good.out);
    CHECK(gdoc["hypotheses"]["hold"] == true);
    CHECK(gdoc["all_multiplicities_divisible"] == true);
    CHECK(gdoc["uhf_shadow"]["prime"] == 2);
    CHECK(gdoc["uhf_shadow"]["exponent"] == "infinity");
}

TEST_CASE("sweep subcommand") {
    RunResult r = run({"sweep", "--max-m", "3", "--max-n", "3", "--max-k", "1", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["violations"] == Json::array());
    CHECK(doc["tuples_checked"] == 3 * 3 * 5 * 1);
}

TEST_CASE("matrix embedding subcommand round-trips through its JSON") {
    RunResult r = run({"embed-mp", "3", "2", "3", "--mode", "exact", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["mode"] == "exact");
    CHECK(doc["verification"]["valid"] == true);
    CHECK(doc["verification"]["unital"]["exact_zero"] == true);

    EmbeddingCertificate loaded = certificate_from_json(doc);
    EmbedOptions opts;
    opts.mode = EmbedMode::Exact;
    EmbeddingCertificate direct = construct_Mp_embedding(3, 2, 3, opts);
    REQUIRE(loaded.images.size() == direct.images.size());
    for (std::size_t i = 0; i < loaded.images.size(); ++i)
        CHECK(loaded.images[i] == direct.images[i]);
}

TEST_CASE("numeric embedding output is deterministic") {
    RunResult a = run({"embed-mp", "3", "2", "3", "--seed", "5", "--json"});
    RunResult b = run({"embed-mp", "3", "2", "3", "--seed", "5", "--json"});
    REQUIRE(a.rc == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("stored certificates re-verify, and tampering is caught") {
    auto path = temp_file("permfix_cert_numeric.json");
    RunResult build = run({"embed-mp", "3", "2", "3", "--output", path.string()});
    REQUIRE(build.rc == 0);

    RunResult ok = run({"verify", path.string()});
    CHECK(ok.rc == 0);
    Json vdoc = Json::parse(run({"verify", path.string(), "--json"}).out);
    CHECK(vdoc["valid"] == true);

    // Perturb one off-diagonal image entry by 1e-6.
    std::ifstream in(path);
    Json doc;
    in >> doc;
    in.close();
    std::string entry = doc["images"][1]["entries"][0][2].get<std::string>();
    doc["images"][1]["entries"][0][2] = rat_str(rat_parse(entry) + Rat(1, 1000000));
    auto tampered_path = temp_file("permfix_cert_tampered.json");
    std::ofstream outf(tampered_path);
    outf << doc.dump();
    outf.close();

    RunResult bad = run({"verify", tampered_path.string()});
    CHECK(bad.rc == 2);
    // A looser explicit tolerance accepts the perturbed certificate again.
    RunResult rescued = run({"verify", tampered_path.string(), "--tol", "1e-3"});
    CHECK(rescued.rc == 0);

    std::filesystem::remove(path);
    std::filesystem::remove(tampered_path);
}

TEST_CASE("sum embedding subcommand") {
    RunResult r = run({"embed-sum", "3", "5", "8", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["parameters"]["a"] == 1);
    CHECK(doc["parameters"]["b"] == 1);
    CHECK(doc["verification"]["valid"] == true);

    RunResult wide = run({"embed-sum", "3", "5", "16", "--json"});
    Json wdoc = Json::parse(wide.out);
    CHECK(wdoc["parameters"]["a"] == 2);
    CHECK(wdoc["parameters"]["b"] == 2);

    RunResult absent = run({"embed-sum", "3", "5", "15", "--json"});
    CHECK(absent.rc == 2);
    Json adoc = Json::parse(absent.out);
    CHECK(adoc["witness"]["representable"] == false);
    CHECK(adoc["threshold"] == 16);
}

TEST_CASE("block embedding subcommand") {
    RunResult r = run({"embed-block", "3", "5", "2", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["kind"] == "block-embedding");
    CHECK(doc["verification"]["rank"] == 34);
    CHECK(doc["verification"]["valid"] == true);

    auto path = temp_file("permfix_cert_block.json");
    RunResult stored = run({"embed-block", "3", "5", "2", "--output", path.string()});
    REQUIRE(stored.rc == 0);
    CHECK(run({"verify", path.string()}).rc == 0);
    std::filesystem::remove(path);
}

TEST_CASE("isotropy subcommand") {
    RunResult r = run({"isotropy", "0,0,1", "--json"});
    REQUIRE(r.rc == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["isotropy_group"] == "S_2 × S_1");
    CHECK(doc["multiplicity_partition"] == Json::array({2, 1}));

    CHECK(run({"isotropy", "0,2"}).rc == 1);
    CHECK(run({"isotropy", "0,1e-3"}).rc == 1);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({}).rc == 1);
    CHECK(run({"no-such-command"}).rc == 1);
    CHECK(run({"chartable"}).rc == 1);
    CHECK(run({"chartable", "abc"}).rc == 1);
    CHECK(run({"chartable", "13"}).rc == 1); // past the table cap
    CHECK(run({"embed-mp", "2", "2", "2"}).rc == 1); // hypotheses fail
    CHECK(run({"verify", "/nonexistent/cert.json"}).rc == 1);

    RunResult help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("chartable") != std::string::npos);
}
