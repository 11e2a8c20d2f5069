#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "decimation/io.hpp"
#include "decimation/sweep.hpp"

using namespace decimation;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("decimation_test_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Json, CountReportRoundTrips) {
  for (auto [spec, delta] : std::vector<std::pair<const char*, int>>{{"Z5", 2}, {"Z3xZ4", 5}, {"Z61", 30}}) {
    const auto r = count_decimation_classes(Group::parse(spec), delta);
    const auto text = io::to_json(r).dump();
    const auto back = io::count_report_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back.group, r.group);
    EXPECT_EQ(back.necklaces, r.necklaces);
    EXPECT_EQ(back.symmetric_necklaces, r.symmetric_necklaces);
    EXPECT_EQ(back.bracelets, r.bracelets);
    EXPECT_EQ(back.decimation_classes, r.decimation_classes);
    ASSERT_EQ(back.per_subgroup.size(), r.per_subgroup.size());
    for (std::size_t i = 0; i < r.per_subgroup.size(); ++i) {
      EXPECT_EQ(back.per_subgroup[i].elements, r.per_subgroup[i].elements);
      EXPECT_EQ(back.per_subgroup[i].nsol, r.per_subgroup[i].nsol);
      EXPECT_EQ(back.per_subgroup[i].n, r.per_subgroup[i].n);
      EXPECT_EQ(back.per_subgroup[i].num_d, r.per_subgroup[i].num_d);
    }
    EXPECT_EQ(io::to_json(back).dump(), text);
  }
}

TEST(Json, CountsAreStrings) {
  const auto j = io::to_json(count_decimation_classes(Group::parse("Z61"), 30));
  EXPECT_TRUE(j["necklaces"].is_string());
  EXPECT_GT(j["necklaces"].get<std::string>().size(), 20u);  // beyond 64 bits
  EXPECT_TRUE(j["per_subgroup"][0]["nsol"].is_string());
  EXPECT_THROW(io::count_report_from_json(nlohmann::json::parse(R"({"group": "Z5"})")), Error);
}

TEST(DensityRule, Evaluates) {
  EXPECT_EQ(DensityRule("(l+1)/2").evaluate(9), 5);
  EXPECT_EQ(DensityRule("l / 3 + 1").evaluate(10), 4);
  EXPECT_EQ(DensityRule("l%4*2-1").evaluate(7), 5);
  EXPECT_EQ(DensityRule("-l/2").evaluate(3), -2);  // floor
  EXPECT_EQ(DensityRule("4").evaluate(100), 4);
  for (const char* bad : {"", "l+", "(l", "l/0", "x", "l)"}) {
    try {
      DensityRule r(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(SweepCache, IdempotentAndByteIdentical) {
  const auto path = temp_path("sweep.csv");
  {
    SweepCache cache(path.string());
    const auto points = cyclic_sweep(cache, 3, 14, DensityRule("(l+1)/2"));
    int skipped = 0;
    for (const auto& p : points) {
      skipped += p.status == SweepPoint::Status::Skipped;
      EXPECT_NE(p.status, SweepPoint::Status::Cached);
    }
    EXPECT_EQ(skipped, 6);  // every even l, and l = 14 with delta 7
  }
  const auto first = slurp(path);
  EXPECT_EQ(first.rfind(std::string(kCacheHeader) + "\n", 0), 0u);
  {
    SweepCache cache(path.string());
    for (const auto& p : cyclic_sweep(cache, 3, 14, DensityRule("(l+1)/2")))
      EXPECT_NE(p.status, SweepPoint::Status::Computed) << p.group;
  }
  EXPECT_EQ(slurp(path), first);
  {
    // Extending the range computes only the new points.
    SweepCache cache(path.string());
    int computed = 0;
    for (const auto& p : cyclic_sweep(cache, 3, 17, DensityRule("(l+1)/2")))
      computed += p.status == SweepPoint::Status::Computed;
    EXPECT_EQ(computed, 2);
    EXPECT_EQ(cache.find("Z5", 3)->decimation_classes, 3);
  }
  EXPECT_EQ(slurp(path).rfind(first, 0), 0u);
  std::filesystem::remove(path);
}

TEST(SweepCache, RowsRoundTrip) {
  CacheRow row{"Z3xZ9", 5, multiset_coeff(27, 5) / 27, 12, 34, 56, 7, "1.0.0"};
  const auto back = CacheRow::from_csv(row.to_csv());
  EXPECT_EQ(back.to_csv(), row.to_csv());
  EXPECT_THROW(CacheRow::from_csv("Z5,2,3"), Error);
}

TEST(SweepCache, RejectsForeignFilesAndConcurrentHolders) {
  const auto path = temp_path("foreign.csv");
  {
    std::ofstream out(path);
    out << "a,b,c\n";
  }
  EXPECT_THROW(SweepCache(path.string()), Error);
  std::filesystem::remove(path);

  SweepCache held(path.string());
  // flock conflicts between distinct open file descriptions, so a second
  // holder in another process fails fast.
  const pid_t pid = ::fork();
  if (pid == 0) {
    try {
      SweepCache again(path.string());
      ::_exit(0);
    } catch (const Error& e) {
      ::_exit(e.code() == ErrorCode::Io ? 7 : 1);
    }
  }
  int status = 0;
  ::waitpid(pid, &status, 0);
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 7);
  std::filesystem::remove(path);
}

TEST(SweepCache, DefaultPathFromEnvironment) {
  ::setenv("DECIMATION_CACHE", "/tmp/somewhere.csv", 1);
  EXPECT_EQ(default_cache_path(), "/tmp/somewhere.csv");
  ::unsetenv("DECIMATION_CACHE");
  EXPECT_EQ(default_cache_path(), "decimation_cache.csv");
}
