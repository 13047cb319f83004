#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using gallagher::cli::dispatch;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gallagher_lab");
    std::ostringstream out, err;
    Run r;
    r.code = dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("weight evaluation") {
    const auto r = run({"weight", "--spec", "cesaro:j=2,delta=1", "--eval", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.3333333333333333\n");
    const auto s = run({"weight", "--spec", "unit:delta=1", "--spline"});
    CHECK(s.code == 0);
    CHECK(s.out.find("-1,1,1") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"weight", "--spec", "unit:delta=1", "--nope"}).code == 2);
    CHECK(run({"weight"}).code == 2);
    CHECK(run({"weight", "--spec", "lanczos:delta=1,Delta=2", "--eval", "0"}).code == 2);
    CHECK(run({"verify-lemma", "--weight", "unit:delta=1", "--T", "-1", "--random", "5"}).code == 2);
    const auto sel = run({"selberg", "--fn", "d2", "--N", "100", "--h", "5", "--kind", "jth", "--j", "2"});
    CHECK(sel.code == 2);
    CHECK_FALSE(sel.err.empty());
}

TEST_CASE("verify-lemma on a frequency file") {
    const std::string path = "cli_freqs.csv";
    {
        std::ofstream f(path);
        f << "nu,re,im\n0,1,0\n3.5,0.5,-0.25\n7.25,-1,0.5\n20,0.3,0.3\n";
    }
    const auto r = run({"verify-lemma", "--weight", "cesaro:j=1,delta=0.025", "--T", "10", "--frequencies", path});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("statement,lhs,m,rhs,slack,holds,trivial\n", 0) == 0);
    CHECK(r.out.find("lemma,") != std::string::npos);
    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    int count = 0;
    while (std::getline(rows, line)) {
        const auto cells = line.substr(0, line.rfind(','));  // drop "trivial"
        CHECK(cells.substr(cells.rfind(',') + 1) == "true");
        ++count;
    }
    CHECK(count >= 1);
    std::remove(path.c_str());
}

TEST_CASE("compare verdict") {
    const auto r = run({"compare", "--v", "cesaro:j=1,delta=0.045", "--w", "unit:delta=0.045", "--T", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict=almost_T_better") != std::string::npos);
}

TEST_CASE("selberg and correlate outputs") {
    const auto s = run({"selberg", "--fn", "d1", "--N", "500", "--h", "10", "--kind", "original"});
    CHECK(s.code == 0);
    CHECK(s.out.find("500,10,") != std::string::npos);
    const auto c = run({"correlate", "--weight", "step:delta=4", "--emit", "table"});
    CHECK(c.code == 0);
    CHECK(c.out.find("0,4,0") != std::string::npos);
    CHECK(c.out.find("-0") == std::string::npos);
}

TEST_CASE("output is deterministic for the same arguments") {
    const std::vector<std::string> args{"--seed", "9", "verify-lemma", "--weight", "lanczos:delta=0.03,Delta=0.01",
                                        "--T", "10", "--random", "40"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto d1 = run({"--seed", "3", "dirichlet", "--random", "1:30", "--T", "100"});
    const auto d2 = run({"--seed", "3", "dirichlet", "--random", "1:30", "--T", "100"});
    CHECK(d1.code == 0);
    CHECK(d1.out == d2.out);
    const auto other = run({"--seed", "4", "dirichlet", "--random", "1:30", "--T", "100"});
    CHECK(other.out != d1.out);
}

TEST_CASE("file output writes a manifest") {
    const std::string path = "cli_out.csv";
    const auto r = run({"--out", path, "dirichlet", "--random", "1:10", "--T", "50"});
    CHECK(r.code == 0);
    const auto csv = slurp(path);
    CHECK(csv.rfind("T,lhs,main,remainder,ratio\n", 0) == 0);
    const auto manifest = slurp(path + ".manifest.txt");
    CHECK(manifest.find("subcommand=dirichlet") != std::string::npos);
    CHECK(manifest.find("output=" + path) != std::string::npos);
    std::remove(path.c_str());
    std::remove((path + ".manifest.txt").c_str());
}

TEST_CASE("suite runs a single criterion") {
    const auto r = run({"suite", "quick", "--criterion", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}
