#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace fixture {

namespace fs = std::filesystem;

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline fs::path oeis_dir() { return fs::path(TRIMULT_FIXTURE_DIR) / "oeis"; }

// Serves oeis_dir()/<id>.txt at /b<digits>.txt on a free local port.
class Server {
 public:
  explicit Server(fs::path dir = oeis_dir()) : dir_(std::move(dir)) {
    server_.Get(R"(/b(\d{6})\.txt)", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits_;
      const fs::path file = dir_ / ("A" + req.matches[1].str() + ".txt");
      if (!fs::exists(file)) {
        res.status = 404;
        return;
      }
      res.set_content(slurp(file), "text/plain");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~Server() {
    server_.stop();
    thread_.join();
  }
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int hits() const { return hits_; }

 private:
  fs::path dir_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("trimult-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

}  // namespace fixture
