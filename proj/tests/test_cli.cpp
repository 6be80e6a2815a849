#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "domino/reductions.hpp"
#include "domino/record.hpp"
#include "domino/sft.hpp"

using namespace domino;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(DOMINO_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "domino-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string field(const Run& r, const std::string& key) {
  const auto rec = Record::parse(r.out);
  const auto* v = rec.get(key);
  return v ? *v : std::string("<missing>");
}

}  // namespace

TEST_CASE("record text format") {
  Record r;
  r.set("command", "x").set("n", 3).set("ok", true).set("stats.seconds", "0.1");
  const auto back = Record::parse(r.to_text());
  CHECK(back.fields() == r.fields());
  Record other = back;
  other.set("stats.seconds", "9.9");
  CHECK(back.same_result(other));
  other.set("n", 4);
  CHECK_FALSE(back.same_result(other));
  CHECK(r.to_json()["n"] == "3");
  CHECK(Record::parse("# note\n\na = b\n").get("a") != nullptr);
  CHECK_THROWS_AS(Record::parse("a = b\nbroken\n"), InputError);
}

TEST_CASE("solve-finite") {
  const auto r = cli("solve-finite --sft zugzwang --turns 'B|(AB)*' --variant pass --n 2");
  CHECK(r.code == 0);
  CHECK(field(r, "winner") == "B");
  CHECK(field(r, "value") == "infinite");

  const auto ref = cli("solve-finite --sft zugzwang --turns 'B|(AB)*' --variant pass --n 2 --engine reference");
  CHECK(Record::parse(r.out).same_result(Record::parse(ref.out)));
  CHECK(field(ref, "winner") == "B");

  const auto single = cli("solve-finite --sft single --n 0 --json");
  CHECK(single.code == 0);
  const auto j = nlohmann::json::parse(single.out);
  CHECK(j["winner"] == "A");
  CHECK(j["value"] == "1");

  CHECK(cli("solve-finite --sft zugzwang --turns s2 --n 1").code == 2);
}

TEST_CASE("solve-bounded and prove") {
  CHECK(field(cli("solve-bounded --sft aa -T 2"), "a_wins") == "false");
  const auto t3 = cli("solve-bounded --sft aa -T 3");
  CHECK(t3.code == 0);
  CHECK(field(t3, "a_wins") == "true");
  CHECK(cli("solve-bounded --sft aa -T 6 --budget 5").code == 1);

  const auto p = cli("prove --sft xx --budget 10^6");
  CHECK(p.code == 0);
  CHECK(field(p, "certificate.kind") == "window");

  const auto none = cli("prove --sft arrow-11 --budget 20000");
  CHECK(none.code == 1);
}

TEST_CASE("word tools") {
  const auto c = cli("word '(ABB)*' --classify");
  CHECK(c.code == 0);
  CHECK(field(c, "class") == "FreqAtMostThird_NoABA");
  CHECK(field(c, "frequency") == "1/3");
  CHECK(field(cli("word 's2' --prefix 8"), "prefix") == "AABAABAB");
  CHECK(field(cli("word --v 2 1 1"), "v") == "9");

  const auto bad = cli("word 'AB|(AX)*' --classify");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("position 5") != std::string::npos);
}

TEST_CASE("reduce writes a loadable game") {
  const auto path = scratch("arrow.json");
  const auto r = cli("reduce --sft aa --construction arrow -o " + path.string());
  REQUIRE(r.code == 0);
  CHECK(field(r, "alphabet_size") == "9");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  register_reduction_factories();
  const Sft g = parse_sft(ss.str());
  CHECK(g.alphabet_size() == 9);
  CHECK(g.predicates().size() == 1);
  // The file is accepted wherever an SFT is.
  CHECK(cli("solve-bounded --sft " + path.string() + " -T 1").code == 0);
}

TEST_CASE("run and verify") {
  const auto run = cli("run --sft f2 --turns '(ABB)*' --a random --param-a seed=3 --param-a colors=a --b b-four-rule "
                       "--monitors four-rule --max-plies 30");
  CHECK(run.code == 0);
  CHECK(field(run, "outcome") == "survived");

  const auto good = scratch("pal.cfg");
  std::ofstream(good) << "sft = palindrome:1\nstrategy = a-palindrome\nplayer = A\nvariant = no-pass\ndepth = 10\n"
                         "locality = 6\n";
  const auto ok = cli("verify " + good.string());
  CHECK(ok.code == 0);
  CHECK(field(ok, "verdict") == "verified");
  CHECK(field(cli("verify --serial " + good.string()), "verdict") == "verified");

  const auto bad = scratch("pass.cfg");
  std::ofstream(bad) << "sft = single\nstrategy = pass\nplayer = B\ndepth = 3\n";
  const auto ce = cli("verify " + bad.string());
  CHECK(ce.code == 3);
  CHECK(field(ce, "verdict") == "counterexample");

  const auto broken = scratch("broken.cfg");
  std::ofstream(broken) << "sft = single\nstrategy = nosuch\n";
  CHECK(cli("verify " + broken.string()).code == 2);
}
