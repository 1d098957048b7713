#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" GWSTACK_CLI "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gwstack_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("compute") {
  CHECK(run("compute --b 3 --insertions 1,1,2,2").out == "-1/9\n");
  CHECK(run("compute --b 3 --insertions 2,1,2,1 --format line").out == "3 0 1,1,2,2 -1/9\n");
  CHECK(run("compute --b 3 --insertions 1,1,2,2 --format json").out ==
        "{\"b\":3,\"d\":0,\"insertions\":[1,1,2,2],\"value\":\"-1/9\"}\n");
  CHECK(run("compute --b 3 --insertions 1,1,2,2 --degree 1").out == "0\n");
  CHECK(run("compute --b 6 --insertions 5,5,5,5,5,5,5,5,5,5,5,5").out == "-5663/5038848\n");
  CHECK(run("compute --target p2 --insertions 2,2,2,2,2,2,2,2").out == "12\n");
  CHECK(run("compute --b 3 --insertions 1,1,2,2").code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("verify --b 9").code == 2);
  CHECK(run("verify --b 3").code == 0);
  CHECK(run("table --b 3 --format xml").code == 2);
  CHECK(run("compute --b 3").code == 2);
  CHECK(run("compute --b 3 --insertions 1,9,1,1").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("").code == 2);

  const auto bad = temp_file("bad.cache");
  std::ofstream(bad) << "3 0 1,1,2,2 -2/18\n";
  CHECK(run("cache check --path " + bad.string()).code == 3);
  CHECK(run("compute --b 3 --insertions 1,1,2,2 --cache " + bad.string()).code == 3);
  std::filesystem::remove(bad);

  const auto golden = temp_file("bad.golden");
  std::ofstream(golden) << "3 0 2,2 -1/8\n";
  CHECK(run("verify --b 3 --golden " + golden.string()).code == 1);
  std::ofstream(golden) << "3 0 2,2\n";
  CHECK(run("verify --b 3 --golden " + golden.string()).code == 3);
  std::filesystem::remove(golden);
}

TEST_CASE("table") {
  CHECK(run("table --b 2 --format tsv").out == "0\t4\t-1/4\n");
  CHECK(count_lines(run("table --b 6").out) == 46);
  CHECK(count_lines(run("table --b 5 --format jsonl").out) == 22);
  const Run empty = run("table --b 1");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run("table --b 3").out == "N_0(0,6) = -1/27\nN_0(1,4) = 1/27\nN_0(2,2) = -1/9\n");
  CHECK(run("table --b 3 --include-divisor").code == 2);
  CHECK(run("table --b 3 --include-divisor --max-n 5 --max-d 1").code == 0);
}

TEST_CASE("verify") {
  const Run all = run("verify --b all");
  CHECK(all.code == 0);
  CHECK(all.out.find("81/81 rows match") != std::string::npos);
  CHECK(all.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("ring") {
  const Run quantum = run("ring --b 2");
  CHECK(quantum.out.find("a^2 * a^2 = 1/2*q*a^1") != std::string::npos);
  const Run special = run("ring --b 2 --lambda 2 --check-generation");
  CHECK(special.out.find("a^2 * a^2 = a^1") != std::string::npos);
  CHECK(special.out.find("generated: true") != std::string::npos);
  CHECK(run("ring --b 3 --lambda 0 --check-generation").out.find("generated: false") != std::string::npos);
  CHECK(run("ring --b 3 --lambda 1/0").code == 2);
}

TEST_CASE("cache round trip and environment default") {
  const auto path = temp_file("fill.cache");
  std::filesystem::remove(path);
  const std::string cold = run("table --b 5 --format tsv").out;

  CHECK(run("cache fill --b 5 --path " + path.string()).code == 0);
  CHECK(run("cache check --path " + path.string()).code == 0);
  CHECK(run("table --b 5 --format tsv --cache " + path.string()).out == cold);

  const std::string env = "GWSTACK_CACHE=" + path.string();
  CHECK(run("table --b 5 --format tsv", env).out == cold);
  CHECK(run("compute --b 5 --insertions 4,4,4,4", env).out == "1/125\n");

  // a fresh path given through the environment is created on use
  const auto fresh = temp_file("fresh.cache");
  std::filesystem::remove(fresh);
  CHECK(run("table --b 4 --format tsv", "GWSTACK_CACHE=" + fresh.string()).out ==
        run("table --b 4 --format tsv").out);
  CHECK(std::filesystem::exists(fresh));
  std::filesystem::remove(fresh);
  std::filesystem::remove(path);
}

TEST_CASE("no decimal output") {
  for (const char* args : {"table --b 6 --format tsv", "table --b 6 --format jsonl", "ring --b 4",
                           "ring --b 4 --lambda 3/2", "verify --b all"}) {
    const std::string out = run(args).out;
    CHECK(out.find("0.") == std::string::npos);
  }
}
