#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RIPBOUND_CLI_PATH
#error "RIPBOUND_CLI_PATH must point at the built command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string tmp = std::string(RIPBOUND_CLI_PATH) + ".out.tmp";
    const std::string cmd =
        std::string(RIPBOUND_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
    return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string field(const std::string& csv, const std::string& key) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + ",", 0) == 0) return line.substr(key.size() + 1);
    return "";
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/ripbound_test_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("bounds command prints the expected keys") {
    const RunResult r = run_cli("bounds --n 3 --m 2 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(field(r.output, "structural") == "3");
    CHECK(field(r.output, "packing_binding") == "false");
    CHECK(std::stod(field(r.output, "covering")) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(std::stod(field(r.output, "delta_structural")) ==
          doctest::Approx(0.5).epsilon(1e-12));

    const RunResult big = run_cli("bounds --n 100 --m 3 --k 2");
    CHECK(std::stod(field(big.output, "packing")) ==
          doctest::Approx(9604.0 / 396.0).epsilon(1e-9));
    CHECK(std::stod(field(big.output, "covering")) == doctest::Approx(99.0).epsilon(1e-9));

    const RunResult k3 = run_cli("bounds --n 10 --m 5 --k 3");
    CHECK(k3.exit_code == 0);
    CHECK(field(k3.output, "packing").empty());
    CHECK(field(k3.output, "covering").empty());
}

TEST_CASE("bounds command rejects bad sizes with exit 2") {
    CHECK(run_cli("bounds --n 3 --m 5 --k 2").exit_code == 2);
    CHECK(run_cli("bounds --n 3 --m 2").exit_code == 2);  // missing flag
}

TEST_CASE("eval command") {
    const std::string mb = write_temp(
        "mb.txt",
        "# three equiangular unit columns\n"
        "2 3\n"
        "1 -0.5 -0.5\n"
        "0 0.86602540378443865 -0.86602540378443865\n");

    SUBCASE("certifies the equiangular frame") {
        const RunResult r = run_cli("eval --matrix " + mb + " --k 2");
        CHECK(r.exit_code == 0);
        CHECK(std::stod(field(r.output, "ratio")) == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(field(r.output, "etf") == "true");
        CHECK(std::stod(field(r.output, "coherence")) ==
              doctest::Approx(0.5).epsilon(1e-9));
        CHECK(field(r.output, "argmax_subset") == "0 1");
    }
    SUBCASE("orthonormal columns give ratio 1") {
        const std::string id3 = write_temp("id3.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
        const RunResult r = run_cli("eval --matrix " + id3 + " --k 2");
        CHECK(std::stod(field(r.output, "ratio")) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("duplicate columns render inf") {
        const std::string dup = write_temp("dup.txt", "2 3\n1 0 1\n0 1 0\n");
        const RunResult r = run_cli("eval --matrix " + dup + " --k 2");
        CHECK(field(r.output, "ratio") == "inf");
    }
    SUBCASE("parse failure exits 2") {
        const std::string bad = write_temp("bad.txt", "2 2\n1 2\n3 x\n");
        CHECK(run_cli("eval --matrix " + bad + " --k 2").exit_code == 2);
        CHECK(run_cli("eval --matrix /nonexistent.txt --k 2").exit_code == 2);
    }
    SUBCASE("budget exhaustion exits 3") {
        const RunResult r = run_cli("eval --matrix " + mb + " --k 2 --budget 1");
        CHECK(r.exit_code == 3);
    }
}

TEST_CASE("curve command") {
    const std::string out1 = std::string(RIPBOUND_CLI_PATH) + ".curve1.csv";
    const std::string out2 = std::string(RIPBOUND_CLI_PATH) + ".curve2.csv";

    SUBCASE("deterministic bytes and monotone structural column") {
        const RunResult r1 =
            run_cli("curve --m 3 --k 2 --n 4..30 --trials 5 --seed 9 --out " + out1);
        const RunResult r2 =
            run_cli("curve --m 3 --k 2 --n 4..30 --trials 5 --seed 9 --out " + out2);
        CHECK(r1.exit_code == 0);
        CHECK(r2.exit_code == 0);
        const std::string a = slurp(out1), b = slurp(out2);
        CHECK(a == b);

        std::istringstream in(a);
        std::string line;
        std::getline(in, line);
        CHECK(line == "n,structural,packing,covering,gaussian_geomean,delta_structural");
        int rows = 0;
        double prev = 0.0;
        while (std::getline(in, line)) {
            ++rows;
            std::istringstream ls(line);
            std::string ntok, stok;
            std::getline(ls, ntok, ',');
            std::getline(ls, stok, ',');
            const double s = std::stod(stok);
            CHECK(s >= prev - 1e-12);
            prev = s;
        }
        CHECK(rows == 27);
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }
    SUBCASE("trials=0 leaves the gaussian column empty") {
        const RunResult r =
            run_cli("curve --m 3 --k 2 --n 5..7 --trials 0 --out " + out1);
        CHECK(r.exit_code == 0);
        std::istringstream in(slurp(out1));
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            // gaussian_geomean is the 5th field; expect ",," before the last
            const auto pos = line.rfind(",");
            const auto pos2 = line.rfind(",", pos - 1);
            CHECK(pos2 + 1 == pos);
        }
        std::remove(out1.c_str());
    }
    SUBCASE("k=3 rows carry no packing/covering values") {
        const RunResult r =
            run_cli("curve --m 4 --k 3 --n 5..7 --trials 2 --seed 3 --out " + out1);
        CHECK(r.exit_code == 0);
        std::istringstream in(slurp(out1));
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string ntok, stok, ptok, ctok, gtok;
            std::getline(ls, ntok, ',');
            std::getline(ls, stok, ',');
            std::getline(ls, ptok, ',');
            std::getline(ls, ctok, ',');
            std::getline(ls, gtok, ',');
            CHECK(ptok.empty());
            CHECK(ctok.empty());
            CHECK(!gtok.empty());
        }
        std::remove(out1.c_str());
    }
    SUBCASE("unwritable output path exits 4") {
        CHECK(run_cli("curve --m 3 --k 2 --n 5..6 --trials 0 --out /nonexistent_dir/x.csv")
                  .exit_code == 4);
    }
}

TEST_CASE("spectra command") {
    const std::string out = std::string(RIPBOUND_CLI_PATH) + ".spectra.csv";
    const RunResult r = run_cli(
        "spectra --n 20 --m 6 --k 3 --count 200 --bins 10 --seed 5 --sv-indices 1,3 --out " +
        out);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "sv_index,bin_lo,bin_hi,count");
    long count_sv1 = 0, count_sv3 = 0;
    bool in_marker_block = false;
    int marker_rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "sv_index,root_marker") {
            in_marker_block = true;
            continue;
        }
        std::istringstream ls(line);
        std::string idx, a, b, c;
        std::getline(ls, idx, ',');
        if (in_marker_block) {
            ++marker_rows;
            continue;
        }
        std::getline(ls, a, ',');
        std::getline(ls, b, ',');
        std::getline(ls, c, ',');
        if (idx == "1") count_sv1 += std::stol(c);
        if (idx == "3") count_sv3 += std::stol(c);
    }
    CHECK(count_sv1 == 200);
    CHECK(count_sv3 == 200);
    CHECK(marker_rows == 2);

    const std::string out2 = out + ".again";
    run_cli("spectra --n 20 --m 6 --k 3 --count 200 --bins 10 --seed 5 --sv-indices 1,3 --out " +
            out2);
    CHECK(slurp(out2) == csv);
    std::remove(out.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("eval on a six-line equiangular frame attains the k=2 bound") {
    // icosahedral axes in R^3: the densest real equiangular case (n = m(m+1)/2),
    // so the certified ratio should land exactly on the structural bound
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = 1.0 / std::sqrt(1.0 + phi * phi);
    std::ostringstream file;
    file << "3 6\n";
    const double cols[6][3] = {{0, 1, phi}, {0, 1, -phi}, {1, phi, 0},
                               {1, -phi, 0}, {phi, 0, 1}, {-phi, 0, 1}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 6; ++c) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", cols[c][r] * s);
            file << (c ? " " : "") << buf;
        }
        file << "\n";
    }
    const std::string path = write_temp("ico.txt", file.str());
    const RunResult r = run_cli("eval --matrix " + path + " --k 2");
    CHECK(r.exit_code == 0);
    const double want = (3.0 + std::sqrt(5.0)) / 2.0;  // (1+W)/(1-W), W = 1/sqrt(5)
    CHECK(std::stod(field(r.output, "ratio")) == doctest::Approx(want).epsilon(1e-10));
    CHECK(field(r.output, "etf") == "true");
    CHECK(std::stod(field(r.output, "coherence")) ==
          doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));

    const RunResult b = run_cli("bounds --n 6 --m 3 --k 2");
    CHECK(std::stod(field(b.output, "structural")) ==
          doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("verify command") {
    const RunResult r = run_cli("verify --seed 3 --budget 100000");
    CHECK(r.exit_code == 0);
    for (const char* name : {"thompson", "thompson_general", "gpt", "sensitivity",
                             "euler", "minimality", "welch_extension", "monotonicity"}) {
        const std::string line = field(r.output, name);
        CHECK(line.find("PASS") != std::string::npos);
    }

    // verdicts are seed-independent
    const RunResult r2 = run_cli("verify --seed 4 --budget 100000");
    CHECK(r2.exit_code == 0);

    // sabotage self-test: a corrupted constant must be caught
    const RunResult bad = run_cli("verify --seed 3 --budget 100000 --inject-fault");
    CHECK(bad.exit_code != 0);
    CHECK(field(bad.output, "thompson").find("FAIL") != std::string::npos);
}
