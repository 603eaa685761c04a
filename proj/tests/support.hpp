#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>

#include "droughtcap/error.hpp"

namespace testing_support {

namespace fs = std::filesystem;

inline std::string data_path(const std::string& rel) { return std::string{DROUGHTCAP_DATA_DIR} + "/" + rel; }
inline std::string test_data_path(const std::string& rel) {
  return std::string{DROUGHTCAP_TEST_DATA_DIR} + "/" + rel;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    std::string tag = info ? std::string{info->test_suite_name()} + "_" + info->name() : "droughtcap";
    path_ = fs::temp_directory_path() /
            ("droughtcap_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  [[nodiscard]] std::string str() const { return path_.string(); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(file(name), std::ios::binary) << content;
    return file(name);
  }

 private:
  fs::path path_;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs `f` and returns the kind of the droughtcap::Error it throws.
template <class F>
::testing::AssertionResult throws_kind(F&& f, droughtcap::ErrorKind expected) {
  try {
    f();
  } catch (const droughtcap::Error& e) {
    if (e.kind() == expected) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace testing_support
