#include "crged/cache.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <unistd.h>

using namespace std::string_literals;

using namespace crged;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("crged-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("sha256 known answers") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("put then get returns identical bytes") {
    const auto dir = fresh_dir("roundtrip");
    ResultCache cache(dir, "1.0.0");
    REQUIRE(cache.enabled());
    const auto key = cache.key_for("command=search\np=1/3\n");
    CHECK_FALSE(cache.get(key).has_value());
    const std::string payload = "p,value\n1/3,1/6\n\0tail"s;
    cache.put(key, payload);
    CHECK(cache.get(key) == payload);
    fs::remove_all(dir);
}

TEST_CASE("version change misses") {
    const auto dir = fresh_dir("version");
    ResultCache v1(dir, "1.0.0"), v2(dir, "1.0.1");
    const std::string job = "command=gfun\n";
    v1.put(v1.key_for(job), "x");
    CHECK(v1.key_for(job) != v2.key_for(job));
    CHECK_FALSE(v2.get(v2.key_for(job)).has_value());
    fs::remove_all(dir);
}

TEST_CASE("corrupted entries are misses") {
    const auto dir = fresh_dir("corrupt");
    ResultCache cache(dir, "1.0.0");
    const auto key = cache.key_for("job");
    cache.put(key, "payload");
    {
        std::fstream f(cache.entry_path(key), std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(-1, std::ios::end);
        f << 'X';
    }
    CHECK_FALSE(cache.get(key).has_value());
    { std::ofstream(cache.entry_path(key), std::ios::binary) << "garbage"; }
    CHECK_FALSE(cache.get(key).has_value());
    cache.put(key, "payload");
    CHECK(cache.get(key) == "payload");
    fs::remove_all(dir);
}

TEST_CASE("unwritable directory disables the cache with a warning") {
    const auto file = fresh_dir("blocker");
    { std::ofstream(file) << "not a directory"; }
    std::ostringstream warn;
    ResultCache cache(file / "sub", "1.0.0", &warn);
    CHECK_FALSE(cache.enabled());
    CHECK(warn.str().find("caching disabled") != std::string::npos);
    cache.put("k", "v");
    CHECK_FALSE(cache.get("k").has_value());
    fs::remove(file);
}

TEST_CASE("concurrent writers of one key leave one complete entry") {
    const auto dir = fresh_dir("concurrent");
    ResultCache cache(dir, "1.0.0");
    const auto key = cache.key_for("same job");
    const std::string payload(100000, 'z');
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&] {
            for (int j = 0; j < 20; ++j) cache.put(key, payload);
        });
    for (auto& t : threads) t.join();
    CHECK(cache.get(key) == payload);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    fs::remove_all(dir);
}
