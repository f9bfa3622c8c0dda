// End-to-end checks of the `clifft` executable: exit codes, determinism of
// seeded outputs, and PPM/CLFF round trips through the tool.  The binary path
// arrives via the CLIFFT_BIN compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "clifft/ppm.hpp"

namespace {

namespace fs = std::filesystem;

std::string bin() { return std::string(CLIFFT_BIN); }

/// Run a shell command, returning its exit code.
int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
#ifdef _WIN32
  return status;
#else
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
}

std::string tmp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("clifft-test-" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FileGuard {
  std::string path;
  explicit FileGuard(std::string p) : path(std::move(p)) {}
  ~FileGuard() { std::error_code ec; fs::remove(path, ec); }
};

clifft::RgbImage gradient_image(int w, int h) {
  clifft::RgbImage img;
  img.width = w;
  img.height = h;
  img.data.resize(size_t(w) * h * 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      img.at(x, y, 0) = static_cast<unsigned char>((x * 9) % 256);
      img.at(x, y, 1) = static_cast<unsigned char>((y * 13) % 256);
      img.at(x, y, 2) = static_cast<unsigned char>((x + 2 * y) % 256);
    }
  return img;
}

}  // namespace

TEST_CASE("exit codes: 0 ok, 1 usage error, 2 verify breach") {
  CHECK(run(bin() + " verify --suite mustard --m 2 --n 8 --trials 1 > /dev/null") == 0);
  CHECK(run(bin() + " verify --suite mustard --m 2 --n 8 --trials 1 --tol 1e-20 > /dev/null") == 2);
  CHECK(run(bin() + " verify --suite nosuch > /dev/null 2>&1") == 1);
  CHECK(run(bin() + " --no-such-flag > /dev/null 2>&1") == 1);
  CHECK(run(bin() + " transform --plan qft --m 3 --n 8 > /dev/null 2>&1") == 1);
  CHECK(run(bin() + " --help > /dev/null") == 0);
}

TEST_CASE("seeded runs are bit-identical") {
  const FileGuard a(tmp_path("det-a.clff")), b(tmp_path("det-b.clff"));
  const std::string cmd = " transform --plan qft --n 8 --seed 41 --complex --out ";
  REQUIRE(run(bin() + cmd + a.path) == 0);
  REQUIRE(run(bin() + cmd + b.path) == 0);
  const std::string bytes_a = slurp(a.path);
  CHECK(!bytes_a.empty());
  CHECK(bytes_a == slurp(b.path));
}

TEST_CASE("image -> spectrum -> inverse -> image round trip through the tool") {
  const FileGuard img_p(tmp_path("rt.ppm")), spec_p(tmp_path("rt.clff")), back_p(tmp_path("rt-back.ppm"));
  clifft::write_ppm(img_p.path, gradient_image(24, 16));

  REQUIRE(run(bin() + " transform --plan qft --in " + img_p.path + " --out " + spec_p.path) == 0);
  REQUIRE(run(bin() + " transform --plan qft --inverse --in " + spec_p.path + " --out " + back_p.path +
              " > /dev/null") == 0);
  // The inverse lands back on exact pixel values, so the bytes match.
  CHECK(slurp(back_p.path) == slurp(img_p.path));
}

TEST_CASE("filter writes a readable image of the same shape") {
  const FileGuard img_p(tmp_path("f.ppm")), out_p(tmp_path("f-low.ppm"));
  clifft::write_ppm(img_p.path, gradient_image(20, 12));
  REQUIRE(run(bin() + " filter --in " + img_p.path + " --out " + out_p.path +
              " --multiplier lowpass --sigma 3 > /dev/null") == 0);
  const clifft::RgbImage out = clifft::read_ppm(out_p.path);
  CHECK(out.width == 20);
  CHECK(out.height == 12);
}

TEST_CASE("bench reports a CSV table with the expected header") {
  const FileGuard csv(tmp_path("bench.csv"));
  REQUIRE(run(bin() + " bench --op gft --n 16 --m 2 --out " + csv.path) == 0);
  std::ifstream in(csv.path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "op,path,n,m,milliseconds,speedup,gap");
  std::string row;
  std::getline(in, row);
  CHECK(row.substr(0, 9) == "gft,fast,");
}
