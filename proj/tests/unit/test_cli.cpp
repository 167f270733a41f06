#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(HALFSPEC_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("classify") {
  const Run r = run("classify '(E2+K2)*E3'");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("family 1, s=3, lambda_2 in (0.4898", 0) == 0);
  const Run j = run("classify 'fam:8[t=3,p=0,parts=1]' --json");
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["family"]["family"] == 8);
  CHECK(doc["lambda2_less_half"] == true);
  CHECK(run("classify P4").out.rfind("no family", 0) == 0);
}

TEST_CASE("witness") {
  const Run r = run("witness Ch");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("P4 itself", 0) == 0);
  CHECK(r.out.find("(sqrt(5)-1)/2") != std::string::npos);
  CHECK(run("witness 'K2+K2' --json").out.find("\"entry\": \"2K2\"") != std::string::npos);
}

TEST_CASE("lambda2 and charpoly") {
  CHECK(run("charpoly P4").out == "x^4 - 3x^2 + 1\n");
  const auto doc = nlohmann::json::parse(run("charpoly K3 --json").out);
  CHECK(doc["coefficients"] == nlohmann::json::array({"-2", "-3", "0", "1"}));
  const Run l = run("lambda2 K3");
  CHECK(l.code == 0);
  CHECK(l.out.find("chi(1/2)          -27/8") != std::string::npos);
}

TEST_CASE("gen") {
  const Run r = run("gen --family 1 --max-order 6");
  CHECK(r.code == 0);
  CHECK(r.out == "D@{\tfam:1[s=1]\nE@~o\tfam:1[s=2]\n");
  CHECK(run("gen K3").out == "Bw\n");
}

TEST_CASE("verify-appendix") {
  const Run r = run("verify-appendix --id A4");
  CHECK(r.code == 0);
  CHECK(r.out.find("80/80 identities hold") != std::string::npos);
  const auto doc = nlohmann::json::parse(run("verify-appendix --id A7 --json").out);
  CHECK(doc["failures"] == 0);
  CHECK(run("verify-appendix --id A1 --params 9").code == 0);
  CHECK(run("verify-appendix --id A11").code == 2);
}

TEST_CASE("cross-check and limit demo") {
  CHECK(run("cross-check --labeled 6").code == 0);
  const auto doc = nlohmann::json::parse(run("cross-check --labeled 4 --json").out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["graphs"] == 38);
  CHECK(doc["disagreements"].empty());
  CHECK(run("cross-check --labeled 8").code == 2);
  CHECK(run("cross-check").code == 2);
  CHECK(run("limit-demo --max-n 20").code == 0);
  CHECK(run("limit-demo --max-n 3").code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("classify 'K(3'").code == 2);
  CHECK(run("classify K3 --tol -1").code == 2);
  CHECK(run("charpoly 'E40*E40'").code == 2);
}
