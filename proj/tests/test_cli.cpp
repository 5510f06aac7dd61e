#include <doctest.h>

#include <sstream>

#include "latred/cli.hpp"
#include "latred/io.hpp"
#include "latred/iwasawa.hpp"

using namespace latred;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reduce on the identity via stdin") {
  const std::string job = R"({"group":"sp","g":2,"delta":0.9,
      "H":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})";
  const CliRun r = run({"reduce"}, job);
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["reflections"].get<int>() == 0);
  CHECK(doc["reduced"].get<bool>());
  CHECK(doc["gamma"][0][0].get<int>() == 1);
  CHECK(doc["gamma"][0][1].get<int>() == 0);
}

TEST_CASE("identical jobs produce identical bytes") {
  const CliRun a = run({"gen", "--group", "so", "--g", "3", "--seed", "42"});
  const CliRun b = run({"gen", "--group", "so", "--g", "3", "--seed", "42"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  const CliRun c = run({"reduce", "--delta", "0.8"}, a.out);
  const CliRun d = run({"reduce", "--delta", "0.8"}, b.out);
  REQUIRE(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("generated matrices are compatible and reduce cleanly") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    for (const char* grp : {"sl", "sp", "so", "g2"}) {
      const std::string g = std::string(grp) == "so" ? "3" : "2";
      const CliRun gen = run({"gen", "--group", grp, "--g", g, "--seed", std::to_string(seed)});
      REQUIRE(gen.code == 0);
      const Json doc = Json::parse(gen.out);
      const GroupDescriptor desc =
          make_group_descriptor(parse_group_kind(doc["group"].get<std::string>()), doc["g"].get<int>());
      CHECK(check_compatible(desc, load_real_matrix(doc["H"])));

      if (seed <= 5) {
        const CliRun red = run({"reduce"}, gen.out);
        REQUIRE(red.code == 0);
        CHECK(Json::parse(red.out)["reduced"].get<bool>());
      }
    }
  }
}

TEST_CASE("trivial generator settings give the identity") {
  const CliRun gen =
      run({"gen", "--group", "sp", "--g", "2", "--seed", "5", "--word", "0", "--spread", "0"});
  REQUIRE(gen.code == 0);
  const RealMatrix H = load_real_matrix(Json::parse(gen.out)["H"]);
  CHECK(max_abs(RealMatrix(H - RealMatrix::Identity(4, 4))) == 0.0);
}

TEST_CASE("verify reports membership") {
  const std::string job = R"({"group":"so","g":3,
      "gamma":[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],
               [0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]})";
  const CliRun r = run({"verify"}, job);
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["member"].get<bool>());

  const std::string bad = R"({"group":"so","g":3,
      "gamma":[[2,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],
               [0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]})";
  const CliRun rb = run({"verify"}, bad);
  REQUIRE(rb.code == 0);
  CHECK(!Json::parse(rb.out)["member"].get<bool>());
}

TEST_CASE("verify reports reducedness per condition") {
  const std::string job = R"({"group":"sl","g":2,"delta":0.9,"H":[[2,1],[1,1]]})";
  const CliRun r = run({"verify"}, job);
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["compatible"].get<bool>());
  CHECK(doc.contains("omega"));
  CHECK(doc.contains("lovasz"));
  CHECK(!doc["reduced"].get<bool>());  // alpha(a)^2 = 4 > 1/(0.9 - 1/4)
}

TEST_CASE("exit codes") {
  // malformed json
  CHECK(run({"reduce"}, "{not json").code == 2);
  // missing H
  CHECK(run({"reduce"}, R"({"group":"sl","g":2})").code == 2);
  // indefinite input
  CHECK(run({"reduce"}, R"({"group":"sl","g":2,"H":[[1,2],[2,1]]})").code == 2);
  // incompatible input
  CHECK(run({"reduce"}, R"({"group":"sp","g":2,"delta":0.8,
      "H":[[1,0,0,0],[0,2,0,0],[0,0,3,0],[0,0,0,4]]})").code == 2);
  // cap exceeded
  const CliRun gen = run({"gen", "--group", "sl", "--g", "4", "--seed", "9", "--word", "14"});
  REQUIRE(gen.code == 0);
  CHECK(run({"reduce", "--max-iter", "0"}, gen.out).code == 3);
  // unknown flags
  CHECK(run({"reduce", "--nonsense"}).code == 2);
  // unknown group
  CHECK(run({"gen", "--group", "e8"}).code == 2);
}

TEST_CASE("decompose pipeline") {
  const std::string job = R"({"group":"sl","g":2,"H":[[2,1],[1,1]]})";
  const CliRun r = run({"decompose"}, job);
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["n"][0][1].get<double>() == doctest::Approx(0.5));
  // determinant-one normalisation of the special linear engine
  const double a0 = doc["a"][0].get<double>(), a1 = doc["a"][1].get<double>();
  CHECK(a0 * a1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("golden fixtures drive the full pipeline") {
  const CliRun r = run({"reduce", "--input", data_path("so8_gram.json"), "--trace"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["reduced"].get<bool>());
  CHECK(doc["reflections"].get<int>() > 0);

  const CliRun v = run({"verify", "--input", data_path("g2_gamma.json")});
  REQUIRE(v.code == 0);
  CHECK(Json::parse(v.out)["member"].get<bool>());
}

TEST_CASE("transported golden point verifies as reduced") {
  const GroupDescriptor so8 = make_group_descriptor(GroupKind::SO, 4);
  const RealMatrix Ht = load_real_matrix(load_json_file(data_path("so8_gram.json"))["H"]);
  const RationalMatrix gamma =
      load_rational_matrix(load_json_file(data_path("so8_gamma.json"))["gamma"]);
  const RealMatrix Hstar = gram_of(restore_compatible(so8, Ht));
  const RealMatrix conj = exact_conjugate_form(gamma, Hstar);

  Json job;
  job["group"] = "so";
  job["g"] = 4;
  job["delta"] = 0.9;
  job["H"] = real_matrix_to_json(conj);
  job["gamma"] = rational_matrix_to_json(gamma);
  const CliRun r = run({"verify"}, job.dump());
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["compatible"].get<bool>());
  CHECK(doc["reduced"].get<bool>());
  CHECK(doc["member"].get<bool>());
}

TEST_CASE("filesystem and shape errors exit with code 2") {
  CHECK(run({"reduce", "--input", "/nonexistent/job.json"}).code == 2);
  // dimension mismatch between --g and the matrix
  CHECK(run({"reduce", "--group", "sp", "--g", "3"},
            R"({"H":[[1,0],[0,1]]})").code == 2);
}
