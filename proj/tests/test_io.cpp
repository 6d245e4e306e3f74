#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "brownlab/cache.hpp"
#include "brownlab/constructions.hpp"
#include "brownlab/errors.hpp"
#include "brownlab/io.hpp"

using namespace brownlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("brownlab-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
    CAPTURE(std::string(text));
    try {
        decode_coloring(text);
        FAIL("decode should have thrown");
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

}  // namespace

TEST_CASE("coloring encoding") {
    const Coloring c(2, {0, 0, 1, 1, 0});
    CHECK(encode_coloring(c, Encoding::Plain) == "palette 2 length 5 encoding plain\n0 0 1 1 0\n");
    CHECK(encode_coloring(c, Encoding::Rle) == "palette 2 length 5 encoding rle\n0x2 1x2 0x1\n");
    CHECK(encode_coloring(Coloring(3, {}), Encoding::Plain) ==
          "palette 3 length 0 encoding plain\n\n");
    CHECK(preferred_encoding(9'999) == Encoding::Plain);
    CHECK(preferred_encoding(10'000) == Encoding::Rle);
}

TEST_CASE("coloring files round-trip byte for byte") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 200; ++iter) {
        const Color palette = 1 + iter % 5;
        std::vector<Color> v(static_cast<std::size_t>(iter) * 3);
        for (auto& x : v) x = static_cast<Color>(rng() % palette);
        const Coloring c(palette, v);
        for (const auto enc : {Encoding::Plain, Encoding::Rle}) {
            const auto text = encode_coloring(c, enc);
            const auto back = decode_coloring(text);
            CHECK(back == c);
            CHECK(encode_coloring(back, enc) == text);
        }
    }
}

TEST_CASE("the s=2 ladder file round-trips") {
    const auto c = *ladder(2).coloring;
    const auto enc = preferred_encoding(c.length());
    CHECK(enc == Encoding::Rle);
    const auto text = encode_coloring(c, enc);
    const auto back = decode_coloring(text);
    CHECK(back == c);
    CHECK(encode_coloring(back, enc) == text);

    TempDir dir;
    const auto path = dir.path / "c2.txt";
    std::ofstream(path, std::ios::binary) << text;
    std::ifstream in(path, std::ios::binary);
    const std::string read((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(read == text);
}

TEST_CASE("decoder accepts extra whitespace") {
    CHECK(decode_coloring("palette 2 length 3 encoding plain\n0  1\n1\n") ==
          Coloring(2, {0, 1, 1}));
    CHECK(decode_coloring("palette 2 length 3 encoding rle\n0x1\n1x2") == Coloring(2, {0, 1, 1}));
}

TEST_CASE("decoder errors carry line and column") {
    expect_parse_error("palette 2 length 3 encoding plain\n0 2 1\n", 2, 3);
    expect_parse_error("palette 2 length 3 encoding plain\n0 1\n1 1\n", 3, 3);
    expect_parse_error("palette 2 length 3 encoding plain\n0 1\n", 2, 0);
    expect_parse_error("palette 2 length 3 encoding zip\n", 1, 29);
    expect_parse_error("palette x length 3 encoding plain\n", 1, 9);
    expect_parse_error("colors 2\n", 1, 1);
    expect_parse_error("palette 2 length 3 encoding rle\n0x1 1y2\n", 2, 5);
    expect_parse_error("palette 2 length 3 encoding rle\n0x0 1x3\n", 2, 1);
    expect_parse_error("palette 0 length 0 encoding rle\n\n", 1, 9);
}

TEST_CASE("malformed certificates are rejected") {
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::object()), InvalidArgument);
    auto doc = nlohmann::json::parse(
        R"({"classes":[{"color":0,"triples":[[1,2]]}],"coloring":"0x2","growth":"exp2","length":2,"palette":1})");
    CHECK_THROWS_AS(certificate_from_json(doc), InvalidArgument);
    doc["classes"][0]["triples"][0] = {1, 2, 2};
    CHECK(verify_certificate(certificate_from_json(doc)));
    doc["coloring"] = "0x3";
    CHECK_THROWS_AS(certificate_from_json(doc), ParseError);
}

TEST_CASE("result cache") {
    TempDir dir;
    const ResultCache cache(dir.path / "nested");
    CHECK_FALSE(cache.load("brown|exp2|r=1"));
    cache.store("brown|exp2|r=1", {{"value", 4}});
    const auto hit = cache.load("brown|exp2|r=1");
    REQUIRE(hit);
    CHECK((*hit)["value"] == 4);
    CHECK(cache.path_for("a") != cache.path_for("b"));
    CHECK(cache.path_for("a") == cache.path_for("a"));

    SUBCASE("validator failures are misses") {
        CHECK_FALSE(cache.load("brown|exp2|r=1", [](const nlohmann::json&) { return false; }));
        CHECK_FALSE(cache.load("brown|exp2|r=1", [](const nlohmann::json& j) {
            return j.at("missing").get<int>() == 1;
        }));
    }
    SUBCASE("corrupt entries are misses and get overwritten") {
        std::ofstream(cache.path_for("brown|exp2|r=1"), std::ios::trunc) << "{not json";
        CHECK_FALSE(cache.load("brown|exp2|r=1"));
        cache.store("brown|exp2|r=1", {{"value", 4}});
        CHECK(cache.load("brown|exp2|r=1"));
    }
    SUBCASE("entries from another version or key are misses") {
        std::ofstream(cache.path_for("k"), std::ios::trunc)
            << R"({"key":"k","version":"0.0.1","result":{}})";
        CHECK_FALSE(cache.load("k"));
        std::ofstream(cache.path_for("k"), std::ios::trunc)
            << R"({"key":"other","version":")" << kVersion << R"(","result":{}})";
        CHECK_FALSE(cache.load("k"));
    }
    std::size_t stray = 0;
    for (const auto& entry : fs::directory_iterator(cache.dir())) {
        stray += entry.path().filename().string().rfind(".tmp-", 0) == 0;
    }
    CHECK(stray == 0);
}

TEST_CASE("cache directory resolution") {
    CHECK(ResultCache::resolve_dir(std::string("/x/y")) == fs::path("/x/y"));
    setenv("BROWNLAB_CACHE", "/from/env", 1);
    CHECK(ResultCache::resolve_dir(std::nullopt) == fs::path("/from/env"));
    unsetenv("BROWNLAB_CACHE");
    setenv("XDG_CACHE_HOME", "/xdg", 1);
    CHECK(ResultCache::resolve_dir(std::nullopt) == fs::path("/xdg/brownlab"));
    unsetenv("XDG_CACHE_HOME");
}
