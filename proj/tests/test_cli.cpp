#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "cli.hpp"
#include "fixtures.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/io.hpp"

using namespace twistlab;

namespace {

std::string data(const std::string& name) { return std::string(TWISTLAB_DATA_DIR) + "/" + name; }

cli::RunResult run(const std::string& command, std::vector<std::string> inputs = {}) {
  cli::JobSpec job;
  job.command = command;
  job.inputs = std::move(inputs);
  return cli::run(job);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(TWISTLAB_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

Json two_set(const Json& cochain) {
  Json j = Json::parse(R"({"schema_version": 1,
    "cover": {"points": ["a", "b"], "sets": [{"label": "U1", "points": ["a", "b"]}, {"label": "U2", "points": ["b"]}]},
    "group": {"cyclic_orders": [2]}})");
  j["cochain"] = cochain;
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("problems survive a JSON round trip") {
  for (const char* name : {"zero.json", "two_set_cover_z2.json", "moore_z2.json", "sphere_z2.json"}) {
    const Problem p = parse_problem(read_json_file(data(name)));
    const Problem q = parse_problem(problem_to_json(p));
    REQUIRE(p.cochain.has_value());
    REQUIRE(q.cochain.has_value());
    CHECK(p.cochain->entries() == q.cochain->entries());
    CHECK(p.nerve->vertex_labels() == q.nerve->vertex_labels());
    for (int d = 0; d <= p.nerve->dimension(); ++d) CHECK(p.nerve->simplices(d) == q.nerve->simplices(d));
  }
}

TEST_CASE("alternating input matches the Moore fixture") {
  const Problem p = parse_problem(read_json_file(data("moore_z2.json")));
  const auto m = fixture::moore_complex();
  CHECK(p.nerve->vertex_labels() == m->vertex_labels());
  CHECK(p.cochain->entries() == fixture::moore_generator(m).entries());
}

TEST_CASE("malformed input is rejected with InputError") {
  const Json good = two_set(Json{{"degree", 2}, {"values", Json::array()}});
  CHECK_NOTHROW(parse_problem(good));
  auto broken = [&](const std::function<void(Json&)>& edit) {
    Json j = good;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) { j.erase("schema_version"); })), InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) { j["schema_version"] = 7; })), InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) { j["complex"] = Json::object(); })), InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) { j["group"] = Json{{"orders", {2}}}; })), InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) {
                    j["cochain"]["values"] = Json::parse(R"([{"tuple": ["U1", "U1", "U9"], "elem": [1]}])");
                  })),
                  InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) {
                    j["cochain"]["values"] = Json::parse(R"([{"tuple": ["U1", "U2"], "elem": [1]}])");
                  })),
                  InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) {
                    j["cochain"]["values"] = Json::parse(R"([{"tuple": ["U1", "U2", "U2"], "elem": [1, 0]}])");
                  })),
                  InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) {
                    j["cochain"]["mode"] = "pointwise";
                    j["cochain"]["values"] = Json::parse(R"([{"tuple": ["U1", "U2", "U2"], "elem": [1]}])");
                  })),
                  InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) { j["cochain"]["mode"] = "sideways"; })), InputError);
  CHECK_THROWS_AS(parse_problem(broken([](Json& j) { j["cover"]["sets"][1]["points"] = {"z"}; })), InputError);
  CHECK_THROWS_AS(read_json_file(data("does-not-exist.json")), InputError);
}

TEST_CASE("documented examples") {
  const auto dd = run("dd-class", {data("moore_z2.json")});
  CHECK(dd.exit_code == cli::kExitOk);
  CHECK(dd.report["verdict"] == "nontrivial");
  CHECK(dd.report["rows"][1]["h3_class"] == Json{1});

  const auto zero = run("check-cocycle", {data("zero.json")});
  CHECK(zero.exit_code == cli::kExitOk);
  CHECK(zero.report["status"] == "pass");

  const auto spec = run("spectrum", {data("two_set_cover_z2.json")});
  CHECK(spec.exit_code == cli::kExitOk);
  CHECK(spec.report["algebra_dimension"] == 10);
  std::vector<std::pair<std::int64_t, std::size_t>> dims;
  for (const auto& l : spec.report["labels"]) dims.emplace_back(l["tau"][0].get<std::int64_t>(), l["dimension"].get<std::size_t>());
  CHECK(dims == std::vector<std::pair<std::int64_t, std::size_t>>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});
}

TEST_CASE("every command succeeds on the sample data") {
  CHECK(run("normalize", {data("sphere_z2.json")}).exit_code == 0);
  const auto h = run("cohomology", {data("sphere_z2.json")});
  CHECK(h.exit_code == 0);
  CHECK(h.report["class"] == Json{1});
  CHECK(run("build-extension", {data("sphere_z2.json"), data("sphere_z2.json")}).exit_code == 0);
  CHECK(run("verify-algebra", {data("sphere_z2.json")}).exit_code == 0);
  for (const char* name : {"pipeline_two_fold.json", "pipeline_three_fold.json", "pipeline_four_fold_moore.json"}) {
    const auto r = run("pipeline", {data(name)});
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "pass");
  }
  CHECK(run("pipeline", {data("pipeline_four_fold_moore.json")}).report["dd"]["verdict"] == "nontrivial");
  const auto self = run("selftest");
  CHECK(self.exit_code == 0);
  CHECK(self.report["checks"].size() >= 8);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* command : {"dd-class", "spectrum", "verify-algebra"}) {
    const auto a = cli::render(run(command, {data("sphere_z2.json")}), cli::Format::json);
    const auto b = cli::render(run(command, {data("sphere_z2.json")}), cli::Format::json);
    CHECK(a == b);
  }
  CHECK(cli::render(run("selftest"), cli::Format::text) == cli::render(run("selftest"), cli::Format::text));
}

TEST_CASE("exit codes") {
  CHECK(run("dd-class", {data("does-not-exist.json")}).exit_code == cli::kExitInput);
  CHECK(run("frobnicate", {data("zero.json")}).exit_code == cli::kExitInput);
  CHECK(run("dd-class").exit_code == cli::kExitInput);
  const std::string garbage = write_temp("garbage.json", "{ not json");
  CHECK(run("check-cocycle", {garbage}).exit_code == cli::kExitInput);

  const std::string noncocycle = write_temp(
      "noncocycle.json", two_set(Json::parse(R"({"degree": 2, "values": [{"tuple": ["U1", "U2", "U1"], "elem": [1]}]})")).dump());
  const auto bad = run("check-cocycle", {noncocycle});
  CHECK(bad.exit_code == cli::kExitViolation);
  CHECK(bad.report["is_cocycle"] == false);
  CHECK(run("normalize", {noncocycle}).exit_code == cli::kExitViolation);
  const auto dd = run("dd-class", {noncocycle});
  CHECK(dd.exit_code == cli::kExitViolation);
  CHECK(dd.report["error"]["kind"] == "precondition");

  cli::JobSpec job;
  job.command = "dd-class";
  job.inputs = {data("moore_z2.json")};
  job.taus = {5};
  CHECK(cli::run(job).exit_code == cli::kExitInput);
  job.taus = {1};
  const auto one = cli::run(job);
  CHECK(one.report["rows"].size() == 1);
  job.taus.clear();
  job.tolerance = -1.0;
  CHECK(cli::run(job).exit_code == cli::kExitInput);
}

TEST_CASE("mode override and text format") {
  cli::JobSpec job;
  job.command = "check-cocycle";
  job.inputs = {data("zero.json")};
  job.mode = CochainMode::pointwise;
  const auto r = cli::run(job);
  CHECK(r.report["mode"] == "pointwise");
  const std::string text = cli::render(r, cli::Format::text);
  CHECK(text.find("status: pass") != std::string::npos);
  CHECK(text.find("command: check-cocycle") != std::string::npos);
}

}  // TEST_SUITE
