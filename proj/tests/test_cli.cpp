#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>

#include "support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is folded in when `merge` is set
Run run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(HOWECHAR_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("theta example with a unicode minus") {
  const auto j = json_of(run("theta --pair uu --n 1 --p 1 --q 1 --nu 0 --m 1 --theta 1.5707963,\xe2\x88\x92" "1.5707963"));
  CHECK(j["meta"]["pair"] == "UU(1,1,1)");
  CHECK(j["meta"]["m"] == 1);
  const auto& v = j["results"][0]["value"];
  CHECK(v["re"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(v["im"].get<double>() == doctest::Approx(-0.5).epsilon(1e-6));
  CHECK(j["warnings"].is_array());
}

TEST_CASE("identity and roots examples") {
  CHECK(json_of(run("identity --p 2 --q 1 --k 1 --mode grid"))["results"][0]["verdict"] == "proved");
  const auto roots = json_of(run("roots --family C --rank 2"))["results"];
  CHECK(roots.size() == 4);
  CHECK(json_of(run("roots --family A --rank 4"))["results"].size() == 6);
}

TEST_CASE("same arguments, same bytes") {
  const std::string args = "theta --pair uu --n 2 --p 2 --q 2 --nu 0,0 --m 1 --random-regular 5 --seed 7";
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["results"].size() == 5);
  CHECK(run("theta --pair uu --n 2 --p 2 --q 2 --nu 0,0 --m 1 --random-regular 5 --seed 8").out != a.out);
}

TEST_CASE("rational nu") {
  const auto j = json_of(run("support --pair uu --n 1 --p 1 --q 2 --nu 1/2"));
  CHECK(j["results"][0]["lo"] == 0);
  CHECK(j["results"][0]["hi"] == 1);
}

TEST_CASE("exit codes") {
  const auto sing = run("theta --pair uu --n 1 --p 1 --q 1 --nu 0 --m 1 --theta 0.5,0.5", true);
  CHECK(sing.code == 1);
  CHECK(sing.out.find("SingularPoint") != std::string::npos);
  const auto bad = run("support --pair uu --n 2 --p 1 --q 1 --nu 3,1", true);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("NotInCorrespondence") != std::string::npos);
  CHECK(run("theta --pair xx").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("dim --family A --rank 2 --lambda 1,0,0").code == 1);
}

TEST_CASE("small subcommands") {
  CHECK(json_of(run("dim --family B --rank 2 --lambda 1/2,1/2"))["results"][0]["dimension"] == 4);
  const auto rho = json_of(run("rho --family C --rank 2"))["results"][0]["rho"];
  CHECK(rho.dump() == "[2,1]");
  const auto k = json_of(run("ktypes --pair uu --n 1 --p 1 --q 1 --nu 2 --depth 3"));
  CHECK(k["results"].size() == 4);
  const auto v = json_of(run("verify --check 2"));
  CHECK(v["results"][0]["passed"] == true);
}
