#include "gallai/cli.hpp"
#include "gallai/constructions.hpp"
#include "gallai/gcg.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gallai;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run forge(std::vector<std::string> args)
{
    args.insert(args.begin(), "gallai-forge");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "gallai-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string put(const std::string& name, const std::string& text)
{
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("construct")
{
    const auto file = (scratch() / "sp43.gcg").string();
    auto r = forge({"construct", "--family", "star-plus", "-t", "4", "-k", "3", "-o", file});
    CHECK(r.code == 0);
    CHECK(r.report()["exit"] == 0);
    CHECK(r.report()["result"]["order"] == 15);
    CHECK(read_gcg_file(file) == lower_bound_construction(4, 3));
    CHECK(slurp(file).find("# recipe: blowup5(uniform(3,1),2,3)") != std::string::npos);

    const auto two = (scratch() / "pp52.gcg").string();
    r = forge({"construct", "--family", "path-plus", "-t", "5", "-k", "2", "-o", two});
    CHECK(r.code == 0);
    CHECK(read_gcg_file(two) == two_clique_example(5, 1, 2));

    r = forge({"construct", "--family", "star-plus", "-k", "3"});
    CHECK(r.code == 2);
    CHECK(r.report()["exit"] == 2);

    CHECK(forge({"construct", "--family", "star-plus", "-t", "3", "-k", "3"}).code == 2);
    CHECK(forge({"construct", "--family", "wheel", "-t", "4", "-k", "3"}).code == 2);
    CHECK(forge({"bogus"}).code == 2);
    CHECK(forge({}).code == 2);
}

TEST_CASE("verify")
{
    const auto lb = put("lb.gcg", encode(lower_bound_construction(4, 3)));
    auto r = forge({"verify", "-i", lb, "--family", "star-plus", "-t", "4"});
    CHECK(r.code == 0);
    CHECK(forge({"verify", lb, "--family", "both", "-t", "4"}).code == 0);

    const auto k6 = put("k6.gcg", encode(new_uniform(6, 1, 1)));
    r = forge({"verify", "-i", k6, "--family", "star-plus", "-t", "4"});
    CHECK(r.code == 1);
    const auto report = r.report();
    const auto& w = report["result"]["monochromatic"]["star-plus"];
    CHECK(w["pattern"] == "star-plus");
    CHECK(w["color"] == 1);

    const auto rb = put("rainbow.gcg", "gcg 1\n3 3\n1\n2 3\n");
    r = forge({"verify", "-i", rb, "--family", "star-plus", "-t", "4"});
    CHECK(r.code == 1);
    CHECK(r.report()["result"]["rainbow"]["color"] == "rainbow");
    CHECK(forge({"verify", "-i", rb, "--rainbow-only"}).code == 1);
    CHECK(forge({"verify", "-i", k6, "--rainbow-only"}).code == 0);

    CHECK(forge({"verify", "-i", k6, "--family", "star-plus"}).code == 2);
    const auto bad = put("bad.gcg", "gcg 1\n3 2\n0\n2 1\n");
    r = forge({"verify", "-i", bad, "--family", "star-plus", "-t", "4"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(forge({"verify", "-i", (scratch() / "missing.gcg").string(), "--rainbow-only"}).code == 2);
}

TEST_CASE("decompose")
{
    const auto pent = put("pent.gcg", encode(pentagon_k5(1, 2)));
    auto r = forge({"decompose", "-i", pent});
    CHECK(r.code == 0);
    CHECK(r.report()["result"]["partition"]["parts"].size() == 5);

    const auto tc = put("tc.gcg", encode(two_clique_example(4, 1, 2)));
    r = forge({"decompose", "-i", tc});
    CHECK(r.code == 0);
    CHECK(r.report()["result"]["partition"]["parts"].size() == 2);
    CHECK(r.report()["result"]["reduced"]["order"] == 2);

    const auto rg = put("rg.gcg", encode(random_gallai(40, 4, 8)));
    r = forge({"decompose", "-i", rg});
    CHECK(r.code == 0);
    CHECK(r.report()["result"]["valid"] == true);

    const auto rb = put("rainbow2.gcg", "gcg 1\n3 3\n1\n2 3\n");
    r = forge({"decompose", "-i", rb});
    CHECK(r.code == 1);
}

TEST_CASE("ramsey")
{
    const auto dir = (scratch() / "witness").string();
    auto r = forge({"ramsey", "--family", "star-plus", "-t", "4", "--witness-dir", dir});
    CHECK(r.code == 0);
    auto j = r.report();
    CHECK(j["result"]["value"] == 7);
    CHECK(j["result"]["pass"] == true);
    const fs::path wf = j["result"]["witness_file"].get<std::string>();
    CHECK(read_gcg_file(wf).order() == 6);
    CHECK(fs::exists(j["result"]["certificate_file"].get<std::string>()));

    r = forge({"ramsey", "--family", "path-plus", "-s", "4", "-t", "5", "--witness-dir", dir});
    CHECK(r.code == 0);
    CHECK(r.report()["result"]["value"] == 9);

    r = forge({"ramsey", "--family", "star-plus", "-t", "3", "--witness-dir", dir});
    CHECK(r.code == 1);
    CHECK(r.report()["result"]["value"] == 6);
    CHECK(r.report()["result"].contains("divergence"));

    r = forge({"ramsey", "--family", "star-plus", "-t", "6", "--max-nodes", "1000", "--witness-dir", dir});
    CHECK(r.code == 3);
    CHECK(r.report()["exit"] == 3);

    r = forge({"ramsey", "--family", "star-plus", "-t", "7", "--max-seconds", "1", "--witness-dir", dir});
    CHECK(r.code == 3);

    CHECK(forge({"ramsey", "--family", "star-plus"}).code == 2);
}

TEST_CASE("formula")
{
    auto r = forge({"formula", "gr", "--family", "star-plus", "-t", "4", "-k", "3"});
    CHECK(r.code == 0);
    CHECK(r.report()["result"]["value"] == 16);
    CHECK(forge({"formula", "ramsey", "--family", "path-plus", "-s", "4", "-t", "6"}).report()["result"]["value"] ==
          11);
    CHECK(forge({"formula", "cycle", "-m", "4", "-n", "7"}).report()["result"]["value"] == 8);
    CHECK(forge({"formula", "gr", "--family", "star-plus", "-t", "3", "-k", "3"}).code == 2);
    CHECK(forge({"formula", "gr", "--family", "star-plus", "-t", "4", "-k", "300"}).code == 2);
}

TEST_CASE("random is seeded and reproducible")
{
    const auto a = (scratch() / "ra.gcg").string();
    const auto b = (scratch() / "rb.gcg").string();
    CHECK(forge({"random", "-n", "30", "-k", "4", "--seed", "5", "-o", a}).code == 0);
    CHECK(forge({"random", "-n", "30", "-k", "4", "--seed", "5", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(read_gcg_file(a) == random_gallai(30, 4, 5));
    const auto c = (scratch() / "rc.gcg").string();
    const auto x = forge({"random", "-n", "12", "-k", "3", "--seed", "2", "--kind", "uniform", "-o", c});
    CHECK(x.out == forge({"random", "-n", "12", "-k", "3", "--seed", "2", "--kind", "uniform", "-o", c}).out);
    CHECK(read_gcg_file(c) == random_coloring(12, 3, 2));
}
