#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decimation/big_count.hpp"
#include "decimation/decimation_count.hpp"
#include "decimation/errors.hpp"
#include "decimation/group.hpp"

namespace decimation {

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr std::string_view kCacheEnvVar = "DECIMATION_CACHE";
inline constexpr std::string_view kCacheHeader =
    "group,delta,necklaces,symmetric,bracelets,decimation_classes,elapsed_ms,version";

/// Integer expression in one variable `l`: + - * / % and parentheses, with
/// floor division. E.g. "(l+1)/2", "l/3 + 1".
class DensityRule {
 public:
  explicit DensityRule(std::string text) : text_(std::move(text)) {
    // Parse once with a dummy value so syntax errors surface at construction.
    (void)evaluate(1);
  }

  const std::string& text() const noexcept { return text_; }

  std::int64_t evaluate(std::int64_t l) const {
    Parser p{text_, 0, l};
    const auto v = p.expression();
    p.skip();
    if (p.pos != text_.size()) p.error("unexpected input");
    return v;
  }

 private:
  struct Parser {
    std::string_view s;
    std::size_t pos;
    std::int64_t l;

    [[noreturn]] void error(const std::string& what) const {
      fail(ErrorCode::Parse, "density rule '" + std::string(s) + "': " + what + " at offset " + std::to_string(pos));
    }
    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    std::int64_t expression() {
      auto v = term();
      for (;;) {
        if (eat('+')) v += term();
        else if (eat('-')) v -= term();
        else return v;
      }
    }
    std::int64_t term() {
      auto v = factor();
      for (;;) {
        if (eat('*')) {
          v *= factor();
        } else if (eat('/')) {
          v = floor_div(v, divisor());
        } else if (eat('%')) {
          const auto d = divisor();
          v -= floor_div(v, d) * d;
        } else {
          return v;
        }
      }
    }
    std::int64_t divisor() {
      const auto d = factor();
      if (d == 0) error("division by zero");
      return d;
    }
    static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
    }
    std::int64_t factor() {
      skip();
      if (eat('(')) {
        const auto v = expression();
        if (!eat(')')) error("expected ')'");
        return v;
      }
      if (eat('-')) return -factor();
      if (pos < s.size() && (s[pos] == 'l' || s[pos] == 'L')) {
        ++pos;
        return l;
      }
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
        return v;
      }
      error(pos < s.size() ? "unexpected character" : "unexpected end");
    }
  };

  std::string text_;
};

struct CacheRow {
  std::string group;
  std::int64_t delta = 0;
  BigCount necklaces = 0;
  BigCount symmetric = 0;
  BigCount bracelets = 0;
  BigCount decimation_classes = 0;
  std::int64_t elapsed_ms = 0;
  std::string version;

  std::string to_csv() const {
    std::ostringstream out;
    out << group << ',' << delta << ',' << necklaces << ',' << symmetric << ',' << bracelets << ','
        << decimation_classes << ',' << elapsed_ms << ',' << version;
    return out.str();
  }

  static CacheRow from_csv(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) f.push_back(cell);
    if (f.size() != 8) fail(ErrorCode::Parse, "cache row needs 8 fields: " + line);
    CacheRow row;
    row.group = f[0];
    row.delta = std::stoll(f[1]);
    row.necklaces = from_decimal(f[2]);
    row.symmetric = from_decimal(f[3]);
    row.bracelets = from_decimal(f[4]);
    row.decimation_classes = from_decimal(f[5]);
    row.elapsed_ms = std::stoll(f[6]);
    row.version = f[7];
    return row;
  }
};

/// CSV result table keyed by (group, delta). The file is held under an
/// exclusive flock for the lifetime of the object; a second holder fails at
/// once rather than waiting. Rows are only ever appended.
class SweepCache {
 public:
  explicit SweepCache(std::string path) : path_(std::move(path)) {
    fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) fail(ErrorCode::Io, "cannot open cache " + path_);
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(fd_);
      fd_ = -1;
      fail(ErrorCode::Io, "cache " + path_ + " is locked by another process");
    }
    load();
  }

  SweepCache(const SweepCache&) = delete;
  SweepCache& operator=(const SweepCache&) = delete;
  ~SweepCache() {
    if (fd_ >= 0) ::close(fd_);
  }

  const std::string& path() const noexcept { return path_; }
  const std::vector<CacheRow>& rows() const noexcept { return rows_; }

  const CacheRow* find(const std::string& group, std::int64_t delta) const {
    auto it = index_.find({group, delta});
    return it == index_.end() ? nullptr : &rows_[it->second];
  }

  void append(const CacheRow& row) {
    if (find(row.group, row.delta)) fail(ErrorCode::InternalConsistency, "row already cached: " + row.group);
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out) fail(ErrorCode::Io, "cannot write cache " + path_);
    out << row.to_csv() << '\n';
    if (!out.flush()) fail(ErrorCode::Io, "cannot write cache " + path_);
    index_[{row.group, row.delta}] = rows_.size();
    rows_.push_back(row);
  }

 private:
  void load() {
    std::ifstream in(path_, std::ios::binary);
    std::string line;
    if (!std::getline(in, line)) {
      std::ofstream out(path_, std::ios::trunc | std::ios::binary);
      out << kCacheHeader << '\n';
      if (!out.flush()) fail(ErrorCode::Io, "cannot write cache " + path_);
      return;
    }
    if (line != kCacheHeader) fail(ErrorCode::Parse, "cache " + path_ + " has an unexpected header: " + line);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto row = CacheRow::from_csv(line);
      index_[{row.group, row.delta}] = rows_.size();
      rows_.push_back(std::move(row));
    }
  }

  std::string path_;
  int fd_ = -1;
  std::vector<CacheRow> rows_;
  std::map<std::pair<std::string, std::int64_t>, std::size_t> index_;
};

/// DECIMATION_CACHE if set, else ./decimation_cache.csv.
inline std::string default_cache_path() {
  if (const char* env = std::getenv(std::string(kCacheEnvVar).c_str()); env && *env) return env;
  return "decimation_cache.csv";
}

struct SweepPoint {
  std::string group;
  std::int64_t delta = 0;
  enum class Status { Computed, Cached, Skipped } status = Status::Computed;
  std::string reason;  // for skipped points
  CacheRow row;
};

/// Cyclic sweep Z_l for l in [lmin, lmax] with delta = rule(l).
inline std::vector<SweepPoint> cyclic_sweep(SweepCache& cache, std::int64_t lmin, std::int64_t lmax,
                                            const DensityRule& rule, const CountOptions& options = {}) {
  if (lmin < 2 || lmax < lmin) fail(ErrorCode::UnsupportedParameters, "sweep needs 2 <= lmin <= lmax");
  std::vector<SweepPoint> out;
  for (std::int64_t l = lmin; l <= lmax; ++l) {
    const auto group = make_group({l});
    SweepPoint p;
    p.group = group.to_string();
    p.delta = rule.evaluate(l);
    if (p.delta < 0 || std::gcd(p.delta, group.exponent()) != 1) {
      p.status = SweepPoint::Status::Skipped;
      p.reason = p.delta < 0 ? "negative density" : "gcd(density, exponent) != 1";
    } else if (const auto* hit = cache.find(p.group, p.delta)) {
      p.status = SweepPoint::Status::Cached;
      p.row = *hit;
    } else {
      const auto start = std::chrono::steady_clock::now();
      const auto report = count_decimation_classes(group, p.delta, options);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      p.row = {p.group,          p.delta, report.necklaces, report.symmetric_necklaces, report.bracelets,
               report.decimation_classes, ms.count(),       std::string(kVersion)};
      cache.append(p.row);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace decimation
