#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "sng/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("sng_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_file(const TempDir& dir, const std::string& name, const std::string& content) {
    const std::string p = dir.file(name);
    std::ofstream out(p);
    out << content;
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("load_csv reads plain numeric rows") {
    TempDir dir;
    const auto path = write_file(dir, "a.csv", "0,0\n1,0\n");
    const sng::Dataset d = sng::load_csv(path);
    CHECK(d.size() == 2);
    CHECK(d.dim() == 2);
    CHECK(d.row(1)[0] == 1.0);
    CHECK_FALSE(d.has_truth());
}

TEST_CASE("label column maps distinct values in first-appearance order") {
    TempDir dir;
    const auto path = write_file(dir, "b.csv", "0,0,a\n1,0,b\n1,1,a\n");
    const sng::Dataset d = sng::load_csv(path, {.label_column = 2});
    CHECK(d.size() == 3);
    CHECK(d.dim() == 2);
    REQUIRE(d.has_truth());
    CHECK(d.truth() == std::vector<std::int32_t>{0, 1, 0});
}

TEST_CASE("ragged rows fail with the offending line number") {
    TempDir dir;
    const auto path = write_file(dir, "c.csv", "0,0\n1\n");
    CHECK_THROWS_WITH_AS(sng::load_csv(path), doctest::Contains("line 2"), sng::ParseError);
}

TEST_CASE("non-numeric feature cells and empty files are rejected") {
    TempDir dir;
    CHECK_THROWS_AS(sng::load_csv(write_file(dir, "d.csv", "0,zebra\n")), sng::ParseError);
    CHECK_THROWS_AS(sng::load_csv(write_file(dir, "e.csv", "")), sng::ParseError);
    CHECK_THROWS_AS(sng::load_csv(dir.file("missing.csv")), sng::IoError);
}

TEST_CASE("--header skips the first line") {
    TempDir dir;
    const auto path = write_file(dir, "f.csv", "x,y\n1,2\n");
    const sng::Dataset d = sng::load_csv(path, {.header = true});
    CHECK(d.size() == 1);
    CHECK(d.row(0)[1] == 2.0);
}

TEST_CASE("save_clustering writes one label per line with -1 noise") {
    TempDir dir;
    sng::Clustering c;
    c.assignment = {0, 0, sng::kNoiseLabel};
    c.role = {sng::PointRole::Core, sng::PointRole::Core, sng::PointRole::Noise};
    c.cluster_count = 1;
    const auto path = dir.file("labels.txt");
    sng::save_clustering(c, path);
    CHECK(read_file(path) == "0\n0\n-1\n");

    sng::Clustering noise_only;
    noise_only.assignment = {sng::kNoiseLabel};
    noise_only.role = {sng::PointRole::Noise};
    sng::save_clustering(noise_only, dir.file("noise.txt"));
    CHECK(read_file(dir.file("noise.txt")) == "-1\n");

    sng::save_labels(std::vector<std::int32_t>{1, 0}, dir.file("two.txt"));
    CHECK(read_file(dir.file("two.txt")) == "1\n0\n");
}

TEST_CASE("labels round-trip through files") {
    TempDir dir;
    const std::vector<std::int32_t> labels = {3, -1, 0, 17, -1};
    sng::save_labels(labels, dir.file("l.txt"));
    CHECK(sng::load_labels(dir.file("l.txt")) == labels);
}

TEST_CASE("csv round-trip is the identity, 17 significant digits") {
    TempDir dir;
    sng::Dataset d({0.1, 1.0 / 3.0, -2.5e-17, 3141.5926535897932, 1e300, -0.0}, 3);
    sng::save_csv(d, dir.file("rt.csv"));
    const sng::Dataset back = sng::load_csv(dir.file("rt.csv"));
    REQUIRE(back.size() == d.size());
    REQUIRE(back.dim() == d.dim());
    CHECK(back.values() == d.values());
}

TEST_CASE("csv round-trip carries truth labels as a trailing column") {
    TempDir dir;
    sng::Dataset d({1.5, 2.5, 3.5, 4.5}, 2);
    d.set_truth({1, 0});
    sng::save_csv(d, dir.file("rt2.csv"));
    const sng::Dataset back = sng::load_csv(dir.file("rt2.csv"), {.label_column = 2});
    CHECK(back.values() == d.values());
    // First-appearance remapping renames 1 -> 0, 0 -> 1.
    CHECK(back.truth() == std::vector<std::int32_t>{0, 1});
}

TEST_CASE("binary format round-trips bit-exactly and sniffs by magic") {
    TempDir dir;
    sng::Dataset d({0.1, 2.0, -3.25, 4e-300, 5.0, 6.125}, 2);
    sng::save_binary(d, dir.file("pts.sngd"));
    const sng::Dataset back = sng::load_binary(dir.file("pts.sngd"));
    CHECK(back.dim() == 2);
    CHECK(back.values() == d.values());

    const sng::Dataset sniffed = sng::load_points(dir.file("pts.sngd"));
    CHECK(sniffed.values() == d.values());

    // Header layout: magic, version, n, dim.
    std::ifstream in(dir.file("pts.sngd"), std::ios::binary);
    char head[5];
    in.read(head, 5);
    CHECK(std::string(head, 4) == "SNGD");
    CHECK(head[4] == 1);
    std::uint64_t n = 0, dim = 0;
    in.read(reinterpret_cast<char*>(&n), 8);
    in.read(reinterpret_cast<char*>(&dim), 8);
    CHECK(n == 3);
    CHECK(dim == 2);

    CHECK_THROWS_AS(sng::load_binary(write_file(dir, "bad.sngd", "NOPE....")), sng::ParseError);
}

TEST_CASE("label remapping is stable under row permutation") {
    TempDir dir;
    const auto path = write_file(dir, "perm_a.csv", "0,x\n1,y\n2,x\n3,z\n");
    const auto perm = write_file(dir, "perm_b.csv", "3,z\n2,x\n0,x\n1,y\n");
    const sng::Dataset a = sng::load_csv(path, {.label_column = 1});
    const sng::Dataset b = sng::load_csv(perm, {.label_column = 1});
    // Row i of the permuted file is row pi(i) of the original; labels must
    // agree through the same permutation after canonical renaming.
    // original rows: 0:x 1:y 2:x 3:z ; permuted order: 3,2,0,1
    const std::vector<std::size_t> pi = {3, 2, 0, 1};
    std::map<std::int32_t, std::int32_t> rename;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const std::int32_t from = b.truth()[i];
        const std::int32_t to = a.truth()[pi[i]];
        auto [it, inserted] = rename.emplace(from, to);
        CHECK(it->second == to);
    }
}
