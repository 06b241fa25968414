#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/matrix_file.hpp"
#include "cli/report.hpp"
#include "example_pairs.hpp"
#include "robinf/orders.hpp"

using namespace robinf;
using namespace robinf::cli;
using namespace robinf::literals;
namespace fs = std::filesystem;
namespace rt = robinf::testing;

namespace {

const fs::path kData = ROBINF_TEST_DATA_DIR;

std::string data(const char* name) { return (kData / name).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::temp_directory_path() / "robinf_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_CASE("matrix text: exact decimals, fractions, comments") {
  const auto m = parse_matrix_text("# comment\n0.8 1/5   # trailing\n\n0.2 4/5\n", "mem");
  REQUIRE(m.rows.size() == 2);
  CHECK(m.rows[0][0] == "4/5"_q);
  CHECK(m.rows[1][1] == "4/5"_q);
  CHECK(m.lines == std::vector<std::size_t>{2, 4});
}

TEST_CASE("matrix text: optional header") {
  CHECK(parse_matrix_text("2 2\n0.8 0.2\n0.2 0.8\n", "mem").rows.size() == 2);
  CHECK(parse_matrix_text("2 3\n1 0 0\n0 1 1\n", "mem").rows.front().size() == 3);
  // Two-wide integer first lines that do not describe the body are data.
  CHECK(parse_matrix_text("1 0\n0 1\n", "mem").rows.size() == 2);
  CHECK(parse_matrix_text("1 1\n1 1\n", "mem").rows.size() == 2);
  CHECK(parse_matrix_text("2 2\n", "mem").rows.size() == 1);

  CHECK_THROWS_AS(parse_matrix_text("3 3\n1 0 0\n0 1 1\n", "mem"), InputError);
  try {
    parse_matrix_text("2 3\n1 0 0\n0 1\n", "mem");
    FAIL("accepted a short row");
  } catch (const InputError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("matrix text: errors carry positions") {
  try {
    parse_matrix_text("1 2\n3 x/2\n", "f.txt");
    FAIL("accepted a bad literal");
  } catch (const InputError& e) {
    CHECK(e.source() == "f.txt");
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(parse_matrix_text("1 2 3\n4 5\n", "mem"), InputError);
  CHECK_THROWS_AS(parse_matrix_text("# nothing\n", "mem"), InputError);

  try {
    parse_experiment("0.5 0.5\n0.5 0.6\n", "e.txt");
    FAIL("accepted a bad column");
  } catch (const InputError& e) {
    CHECK(e.column() == 2);
  }
  try {
    parse_experiment("1 0\n# gap\n0 1\n-1 0\n1 0\n", "e.txt");
    FAIL("accepted a negative entry");
  } catch (const InputError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("problem files") {
  const auto p = parse_problem("1/3 1/3 1/3\n0 1 0\n1/4 1/4 1/4\n", "p.txt");
  CHECK(p.prior() == Prior::uniform(3));
  CHECK(p.actions().size() == 2);
  CHECK_THROWS_AS(parse_problem("1/2 1/2\n", "p.txt"), InputError);
  CHECK_THROWS_AS(parse_problem("1/2 1/2\n1 2 3\n", "p.txt"), InputError);
  CHECK_THROWS_AS(parse_problem("1/2 1/3\n1 2\n", "p.txt"), InputError);
}

TEST_CASE("kv reports round-trip exact matrices") {
  const VerdictReport r = compare_experiments(rt::example_e(), rt::example_e_prime(), "E", "E'");
  const auto kv = parse_kv(render_kv(r));
  CHECK(kv.at("relation") == "equivalent");
  CHECK(parse_kv_matrix(kv.at("forward.gamma")) == std::get<RatMatrix>(r.at("forward.gamma")));
  CHECK(parse_kv_matrix(kv.at("backward.gamma")) == RatMatrix{{"7/5"_q, "-3/5"_q}, {"-2/5"_q, "8/5"_q}});

  // Table layout prints matrices in matrix-file syntax.
  const std::string table = render_table(cmd_reproduce_example());
  const auto pos = table.find("E_inverse");
  REQUIRE(pos != std::string::npos);
  std::istringstream is(table.substr(pos));
  std::string header, row0, row1;
  std::getline(is, header);
  std::getline(is, row0);
  std::getline(is, row1);
  CHECK(RatMatrix::from_rows(parse_matrix_text(row0 + "\n" + row1, "table").rows) ==
        RatMatrix{{"4/3"_q, "-1/3"_q}, {"-1/3"_q, "4/3"_q}});
}

TEST_CASE("reproduce-example") {
  const Run run = invoke({"--format", "kv", "reproduce-example"});
  REQUIRE(run.code == kExitOk);
  const auto kv = parse_kv(run.out);
  CHECK(parse_kv_matrix(kv.at("E_inverse")) == RatMatrix{{"4/3"_q, "-1/3"_q}, {"-1/3"_q, "4/3"_q}});
  CHECK(parse_kv_matrix(kv.at("E'_inverse")) == RatMatrix{{2, "-4/3"_q}, {-1, "7/3"_q}});
  CHECK(parse_kv_matrix(kv.at("gamma")) == RatMatrix{{"4/5"_q, "3/10"_q}, {"1/5"_q, "7/10"_q}});
  CHECK(parse_kv_matrix(kv.at("gamma'")) == RatMatrix{{"7/5"_q, "-3/5"_q}, {"-2/5"_q, "8/5"_q}});
  CHECK(kv.at("gamma_row_sums") == "11/10 9/10");
  CHECK(kv.at("robust.relation") == "equivalent");
  CHECK(kv.at("row.forward.feasible") == "false");
  CHECK(kv.at("row.backward.feasible") == "false");
  CHECK(kv.at("column.forward.feasible") == "true");
}

TEST_CASE("compare subcommand") {
  auto kv_of = [](std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "kv"});
    const Run run = invoke(args);
    REQUIRE(run.code == kExitOk);
    return parse_kv(run.out);
  };
  CHECK(kv_of({"compare", data("example_e.txt"), data("example_e_prime.txt")}).at("relation") == "equivalent");

  const auto crossed = kv_of({"compare", data("pool_23.txt"), data("pool_12.txt")});
  CHECK(crossed.at("relation") == "incomparable");
  CHECK(crossed.count("forward.witness.action") == 1);
  CHECK(crossed.count("backward.witness.action") == 1);

  const auto same = kv_of({"compare", data("pool_23.txt"), data("pool_23.txt")});
  CHECK(same.at("relation") == "equivalent");
  CHECK(parse_kv_matrix(same.at("forward.gamma")) == RatMatrix::identity(2));

  CHECK(kv_of({"compare", data("pool_23.txt"), data("blind3.txt")}).at("relation") == "E > E'");
  CHECK(kv_of({"compare", data("blind3.txt"), data("pool_23.txt")}).at("relation") == "E' > E");
}

TEST_CASE("property: compare is consistent under argument swap") {
  auto swapped = [](const std::string& rel) {
    if (rel == "E > E'") return std::string("E' > E");
    if (rel == "E' > E") return std::string("E > E'");
    return rel;
  };
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto a = random_experiment(1 + seed % 3, n, seed, 6);
    const auto b = random_experiment(1 + (seed / 3) % 3, n, seed + 100, 6);
    const auto ab = std::get<std::string>(compare_experiments(a, b, "a", "b").at("relation"));
    const auto ba = std::get<std::string>(compare_experiments(b, a, "b", "a").at("relation"));
    CHECK(ab == swapped(ba));
  }
}

TEST_CASE("garbling subcommand") {
  auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "kv"});
    const Run r = invoke(args);
    REQUIRE(r.code == kExitOk);
    return parse_kv(r.out);
  };
  const auto row = run({"garbling", data("example_e.txt"), data("example_e_prime.txt")});
  CHECK(row.at("convention") == "row");
  CHECK(row.at("forward.feasible") == "false");
  CHECK(row.at("backward.feasible") == "false");

  const auto col = run({"garbling", data("example_e.txt"), data("example_e_prime.txt"), "--convention", "column"});
  CHECK(col.at("forward.feasible") == "true");
  CHECK(parse_kv_matrix(col.at("forward.gamma")) == RatMatrix{{"4/5"_q, "3/10"_q}, {"1/5"_q, "7/10"_q}});
  CHECK(col.at("backward.feasible") == "false");
  const Run noted = invoke({"--format", "kv", "garbling", data("example_e.txt"), data("example_e_prime.txt"),
                         "--convention=column"});
  CHECK(noted.out.find("# note:") != std::string::npos);

  const auto self = run({"garbling", data("example_e.txt"), data("example_e.txt")});
  CHECK(self.at("forward.feasible") == "true");
  CHECK(parse_kv_matrix(self.at("forward.gamma")) == RatMatrix::identity(2));

  CHECK(invoke({"garbling", data("example_e.txt"), data("example_e.txt"), "--convention", "diagonal"}).code ==
        kExitInvalidInput);
}

TEST_CASE("identified-set subcommand") {
  auto run = [](const fs::path& e, const fs::path& mu) {
    const Run r = invoke({"--format", "kv", "identified-set", e.string(), mu.string()});
    REQUIRE(r.code == kExitOk);
    return parse_kv(r.out);
  };
  const auto full = run(data("example_e.txt"), scratch("mu2.txt", "1/4 3/4\n"));
  CHECK(full.at("singleton") == "true");
  CHECK(full.at("vertex_count") == "1");
  CHECK(full.at("vertex.0") == "1/4 3/4");

  const auto flat = run(data("blind3.txt"), data("uniform3.txt"));
  CHECK(flat.at("full_simplex") == "true");
  CHECK(flat.at("vertex.0") == "1 0 0");
  CHECK(flat.at("vertex.2") == "0 0 1");

  const auto pooled = run(data("pool_23.txt"), data("uniform3.txt"));
  CHECK(pooled.at("vertex_count") == "2");
  CHECK(pooled.at("vertex.0") == "1/3 2/3 0");
  CHECK(pooled.at("vertex.1") == "1/3 0 2/3");

  // Column-vector prior files are accepted too.
  CHECK(run(data("pool_23.txt"), scratch("mu_col.txt", "1/3\n1/3\n1/3\n")).at("vertex_count") == "2");
  CHECK(invoke({"identified-set", data("pool_23.txt"), scratch("bad_mu.txt", "1/2 1/3 1/3\n").string()}).code ==
        kExitInvalidInput);
  CHECK(invoke({"identified-set", data("pool_23.txt"), scratch("mu2b.txt", "1/2 1/2\n").string()}).code ==
        kExitInvalidInput);
}

TEST_CASE("maxmin subcommand") {
  auto run = [](const fs::path& e, const fs::path& problem) {
    const Run r = invoke({"--format", "kv", "maxmin", e.string(), problem.string()});
    REQUIRE(r.code == kExitOk);
    return parse_kv(r.out);
  };
  const auto pooled = run(data("pool_23.txt"), data("problem_pool.txt"));
  CHECK(pooled.at("value") == "1/4");
  CHECK(pooled.at("best_action_index") == "1");

  const auto flat = run(data("flat2.txt"), data("problem_flat.txt"));
  CHECK(flat.at("value") == "1/2");
  CHECK(flat.at("best_action") == "1/2 1/2");

  const auto full = run(data("example_e.txt"), scratch("problem_full.txt", "1/4 3/4\n1 0\n0 1\n2 1/2\n"));
  CHECK(full.at("value") == "7/8");
  CHECK(full.at("worst_prior") == "1/4 3/4");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"compare", data("bad_column.txt"), data("example_e.txt")}).code == kExitInvalidInput);
  CHECK(invoke({"compare", data("bad_negative.txt"), data("example_e.txt")}).code == kExitInvalidInput);
  CHECK(invoke({"compare", data("bad_literal.txt"), data("example_e.txt")}).code == kExitInvalidInput);
  CHECK(invoke({"compare", data("nope.txt"), data("example_e.txt")}).code == kExitInvalidInput);
  CHECK(invoke({"compare", data("example_e.txt"), data("pool_23.txt")}).code == kExitInvalidInput);
  CHECK(invoke({}).code == kExitInvalidInput);
  CHECK(invoke({"--help"}).code == kExitOk);

  const Run bad = invoke({"compare", data("bad_literal.txt"), data("example_e.txt")});
  CHECK(bad.err.find("bad_literal.txt:2:2") != std::string::npos);

  std::ostringstream err;
  try {
    throw InvariantViolation("boom");
  } catch (...) {
    CHECK(exit_code_for_current_exception(err) == kExitInternal);
  }
  try {
    throw ValidationError(ValidationErrorKind::EmptyMatrix, "empty");
  } catch (...) {
    CHECK(exit_code_for_current_exception(err) == kExitInvalidInput);
  }
}

TEST_CASE("batch runs the manifest in order, independent of thread count") {
  const Run one = invoke({"--format", "kv", "batch", data("manifest.txt"), "--seed", "3", "--threads", "1"});
  const Run many = invoke({"--format", "kv", "batch", data("manifest.txt"), "--seed", "3", "--threads", "4"});
  REQUIRE(one.code == kExitOk);
  CHECK(one.out == many.out);
  CHECK(one.out.find("# batch: 6 entries, 0 failed") != std::string::npos);
  CHECK(one.out.find("random(seed=5)") != std::string::npos);

  const fs::path manifest = scratch("bad_manifest.txt",
                                    "compare " + data("example_e.txt") + " " + data("bad_column.txt") +
                                        "\nreproduce-example\nrandom-compare 2 x 3 1\n");
  const Run mixed = invoke({"batch", manifest.string()});
  CHECK(mixed.code == kExitInvalidInput);
  CHECK(mixed.out.find("# batch: 3 entries, 2 failed") != std::string::npos);
  CHECK(mixed.out.find("reproduce-example ==") != std::string::npos);
}
