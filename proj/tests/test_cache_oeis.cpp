#include "discrect/count_cache.hpp"
#include "discrect/oeis.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace discrect;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path(std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
               "/" + name + "." + std::to_string(std::rand())) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("cache put, get and reload") {
    TempFile file("discrect_cache");
    {
        cache::CountCache cache(file.path);
        CHECK_FALSE(cache.get_alpha(3, 4).has_value());
        cache.put_alpha(3, 4, BigCount(90));
        cache.put_alpha_r(2, 2, std::vector<int>{0, 0}, BigCount(2));
        CHECK(cache.get_alpha(3, 4) == BigCount(90));
        CHECK(cache.get_alpha_r(2, 2, std::vector<int>{0, 0}) == BigCount(2));
    }
    cache::CountCache reloaded(file.path);
    CHECK(reloaded.size() == 2);
    CHECK(reloaded.get_alpha(3, 4) == BigCount(90));
    CHECK(reloaded.get_alpha_r(2, 2, std::vector<int>{0, 0}) == BigCount(2));
}

TEST_CASE("cache is append-only with last-write-wins") {
    TempFile file("discrect_cache_dup");
    {
        std::ofstream out(file.path);
        out << "alpha 3 4 17\n";
        out << "alpha 3 4 90\n";
    }
    cache::CountCache cache(file.path);
    CHECK(cache.size() == 1);
    CHECK(cache.get_alpha(3, 4) == BigCount(90));
}

TEST_CASE("paranoid mode recomputes") {
    TempFile good("discrect_cache_good");
    {
        std::ofstream out(good.path);
        out << "alpha 3 4 90\n";
        out << "alpha_r 2 2 0,0 2\n";
    }
    CHECK_NOTHROW(cache::CountCache(good.path, true));

    TempFile bad("discrect_cache_bad");
    {
        std::ofstream out(bad.path);
        out << "alpha 3 4 91\n";
    }
    CHECK_THROWS_AS(cache::CountCache(bad.path, true), std::runtime_error);
}

TEST_CASE("cache rejects malformed files") {
    TempFile file("discrect_cache_bad_line");
    {
        std::ofstream out(file.path);
        out << "alpha 3 4 90\n";
        out << "alpha x\n";
    }
    try {
        cache::CountCache cache(file.path);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("environment override") {
    CHECK_FALSE(cache::CountCache::env_path().has_value());
    setenv("DISC_RECT_CACHE", "/tmp/somewhere.cache", 1);
    CHECK(cache::CountCache::env_path() == std::string("/tmp/somewhere.cache"));
    unsetenv("DISC_RECT_CACHE");
}

TEST_CASE("b-file parsing") {
    std::istringstream is("# A002896 prefix\n0 1\n1 6\n\n2 90 # third entry\n");
    const auto entries = oeis::read_bfile(is);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].index == 0);
    CHECK(entries[0].value == 1);
    CHECK(entries[2].index == 2);
    CHECK(entries[2].value == 90);

    std::istringstream empty("# nothing\n\n");
    CHECK(oeis::read_bfile(empty).empty());

    std::istringstream bad_value("0 1\n1 notanumber\n");
    try {
        oeis::read_bfile(bad_value);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream missing("3\n");
    CHECK_THROWS_AS(oeis::read_bfile(missing), std::runtime_error);

    CHECK_THROWS_AS(oeis::read_bfile(std::string("/nonexistent/bfile.txt")), IoError);
}
