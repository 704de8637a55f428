#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GENUSLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& line) {
  std::istringstream in(out);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

std::size_t count_lines(const std::string& out) {
  std::size_t n = 0;
  std::istringstream in(out);
  for (std::string l; std::getline(in, l);)
    if (!l.empty() && l[0] != '#') ++n;
  return n;
}

std::string order32_files() {
  std::vector<std::string> files;
  for (const auto& p : std::filesystem::directory_iterator(std::filesystem::path(GENUSLAB_DATA_DIR) / "order32"))
    files.push_back(p.path().string());
  std::sort(files.begin(), files.end());
  std::string s;
  for (const auto& f : files) s += " " + f;
  return s;
}

}  // namespace

TEST(Cli, GroupInfo) {
  const auto s4 = run("group-info --catalog S4");
  EXPECT_EQ(s4.status, 0);
  EXPECT_TRUE(has_line(s4.out, "order: 24")) << s4.out;
  EXPECT_TRUE(has_line(s4.out, "center: 1"));
  EXPECT_TRUE(has_line(s4.out, "classes: 5"));
  EXPECT_TRUE(has_line(run("group-info --catalog A5").out, "classes: 5"));
  const auto z2 = run("group-info --catalog Z2");
  EXPECT_EQ(z2.status, 0);
  EXPECT_TRUE(has_line(z2.out, "abelian: true"));
  EXPECT_NE(run("group-info --catalog A5 --format json").out.find("\"class_count\": 5"), std::string::npos);
}

TEST(Cli, UnknownGroupIsAUsageError) {
  const auto r = run("group-info --catalog NoSuchGroup");
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, GraphExport) {
  const auto q8 = run("graph --catalog Q8 --kind commuting --format edgelist");
  EXPECT_EQ(q8.status, 0);
  EXPECT_EQ(count_lines(q8.out), 3u) << q8.out;
  const auto s3 = run("graph --catalog S3 --kind noncommuting");
  EXPECT_EQ(count_lines(s3.out), 9u) << s3.out;
  EXPECT_NE(run("graph --catalog S3 --format dot").out.find("graph"), std::string::npos);
  EXPECT_EQ(run("graph --catalog S3 --kind sideways").status, 2);
}

TEST(Cli, Surface) {
  const auto k7 = run("surface --kn 7 --genus");
  EXPECT_EQ(k7.status, 0);
  EXPECT_TRUE(has_line(k7.out, "genus: 1")) << k7.out;
  const auto d14 = run("surface --catalog D14 --crosscap");
  EXPECT_TRUE(has_line(d14.out, "crosscap: 1")) << d14.out;
  EXPECT_TRUE(has_line(run("surface --kmn 3,6 --crosscap").out, "crosscap: 2"));

  const auto path = std::filesystem::temp_directory_path() / "genuslab_2k5.txt";
  {
    std::ofstream f(path);
    for (int base : {0, 5})
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) f << base + i << ' ' << base + j << '\n';
  }
  const auto two = run("surface --edgelist " + path.string() + " --embeds-nonorientable 1");
  EXPECT_EQ(two.status, 0);
  EXPECT_TRUE(has_line(two.out, "embeds in N1: false")) << two.out;
  std::filesystem::remove(path);
}

TEST(Cli, SurfaceInputErrors) {
  EXPECT_EQ(run("surface --kn 5 --kmn 3,3").status, 2);
  EXPECT_EQ(run("surface --edgelist /nonexistent/file").status, 2);
  EXPECT_EQ(run("surface --kn 5 --timeout 0").status, 2);
  EXPECT_EQ(run("--timeout 0.001 surface --catalog A4 --kind noncommuting --genus").status, 3);
}

TEST(Cli, VerifyPlanarNonCommuting) {
  const auto r = run("verify --theorem 3.1");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has_line(r.out, "planar non-commuting (3): S3, D8, Q8")) << r.out;
}

TEST(Cli, VerifyCommutingSubsets) {
  const auto r = run("verify --lemma 2.1 --input" + order32_files());
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.find("NOT FOUND"), std::string::npos);
}

TEST(Cli, VerifyAllIsDeterministic) {
  const auto a = run("verify --all --format json");
  const auto b = run("--jobs 2 verify --all --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"ok\": true"), std::string::npos);
}
