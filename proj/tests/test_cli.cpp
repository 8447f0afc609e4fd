#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qhrank_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CommandResult run_cli(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const fs::path err_path = work_dir() / "stderr.txt";
  const std::string command = std::string(QHRANK_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

fs::path fig1_file() {
  return write_file("fig1.tsv",
                    "1\t5\t1\n"
                    "2\t4\t1\n"
                    "4\t5\t1\n"
                    "5\t3\t1\n"
                    "6\t1\t1\n");
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::string first_column(const std::string& line) { return line.substr(0, line.find('\t')); }

}  // namespace

TEST_CASE("rank with basic HITS puts node 5 first") {
  const auto graph = fig1_file();
  const CommandResult result = run_cli("rank " + graph.string() + " --algo hits");
  CHECK(result.exit_code == 0);
  const auto lines = data_lines(result.out);
  REQUIRE(lines.size() == 6);
  CHECK(first_column(lines.front()) == "5");
  CHECK(result.out.find("# algorithm: hits\n") != std::string::npos);
}

TEST_CASE("weighted HITS on unit weights ranks like basic HITS") {
  const auto graph = fig1_file();
  const CommandResult basic = run_cli("rank " + graph.string() + " --algo hits");
  const CommandResult weighted = run_cli("rank " + graph.string() + " --algo whits --alpha 0.6667");
  CHECK(weighted.exit_code == 0);
  const auto a = data_lines(basic.out);
  const auto b = data_lines(weighted.out);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(first_column(a[i]) == first_column(b[i]));
}

TEST_CASE("fractional alpha is accepted") {
  const auto graph = fig1_file();
  const CommandResult result = run_cli("rank " + graph.string() + " --algo whits --alpha 2/3");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("# alpha: 0.6666666666666666\n") != std::string::npos);
}

TEST_CASE("missing input file exits with 1 and names the path") {
  const CommandResult result = run_cli("rank " + (work_dir() / "missing.tsv").string());
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("missing.tsv") != std::string::npos);
}

TEST_CASE("contradictory flags are usage errors") {
  const auto graph = fig1_file();
  CHECK(run_cli("rank " + graph.string() + " --algo pagerank --alpha 0.5").exit_code == 2);
  CHECK(run_cli("rank " + graph.string() + " --algo hits --key pr").exit_code == 2);
  CHECK(run_cli("rank " + graph.string() + " --algo pagerank --key f").exit_code == 2);
  CHECK(run_cli("rank " + graph.string() + " --algo nonsense").exit_code == 2);
  CHECK(run_cli("rank " + graph.string() + " --algo hits --alpha 1").exit_code == 2);
}

TEST_CASE("pagerank report ranks the cycle evenly") {
  const auto graph = write_file("cycle.tsv", "1\t2\t1\n2\t1\t1\n");
  const CommandResult result = run_cli("rank " + graph.string() + " --algo pagerank");
  CHECK(result.exit_code == 0);
  const auto lines = data_lines(result.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "1\t0.500000\t1");
  CHECK(lines[1] == "2\t0.500000\t2");
}

TEST_CASE("identical rank invocations are byte-identical") {
  const auto graph = fig1_file();
  const fs::path out1 = work_dir() / "report1.tsv";
  const fs::path out2 = work_dir() / "report2.tsv";
  CHECK(run_cli("rank " + graph.string() + " --out " + out1.string()).exit_code == 0);
  CHECK(run_cli("rank " + graph.string() + " --out " + out2.string()).exit_code == 0);
  const std::string a = slurp(out1);
  CHECK(a == slurp(out2));
  CHECK_FALSE(a.empty());

  const CommandResult to_stdout = run_cli("rank " + graph.string());
  CHECK(to_stdout.out == a);
}

TEST_CASE("generate writes deterministic graph and truth files") {
  const fs::path g1 = work_dir() / "gen1.tsv";
  const fs::path g2 = work_dir() / "gen2.tsv";
  const fs::path truth = work_dir() / "truth.tsv";
  const std::string flags = "generate --depth 2 --branching 2 --extra 0 --seed 7 ";
  CHECK(run_cli(flags + "--out-graph " + g1.string() + " --out-truth " + truth.string())
            .exit_code == 0);
  CHECK(run_cli(flags + "--out-graph " + g2.string()).exit_code == 0);
  CHECK(slurp(g1) == slurp(g2));
  CHECK(data_lines(slurp(g1)).size() == 12);
  CHECK(data_lines(slurp(truth)).size() == 7);
}

TEST_CASE("generate counts include extra links") {
  const CommandResult result = run_cli("generate --depth 1 --branching 3 --extra 1 --seed 1");
  CHECK(result.exit_code == 0);
  CHECK(data_lines(result.out).size() == 7);
}

TEST_CASE("negative extra link count is a usage error") {
  CHECK(run_cli("generate --depth 1 --branching 3 --extra -1").exit_code == 2);
}

TEST_CASE("compare scores a report against a reference") {
  const auto graph = fig1_file();
  const fs::path report = work_dir() / "cmp_report.tsv";
  REQUIRE(run_cli("rank " + graph.string() + " --out " + report.string()).exit_code == 0);

  // Reference equal to the computed order.
  std::string order;
  for (const std::string& line : data_lines(slurp(report))) order += first_column(line) + "\n";
  const auto same = write_file("ref_same.txt", order);
  const CommandResult equal = run_cli("compare " + report.string() + " " + same.string() + " --k 3");
  CHECK(equal.exit_code == 0);
  CHECK(equal.out.find("tau\t1.000000\n") != std::string::npos);
  CHECK(equal.out.find("exact_matches\t6\n") != std::string::npos);
  CHECK(equal.out.find("top3\t1.000000\n") != std::string::npos);

  // Reversed reference.
  std::string reversed;
  const auto lines = data_lines(slurp(report));
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) reversed += first_column(*it) + "\n";
  const auto reverse_file = write_file("ref_reverse.txt", reversed);
  const CommandResult opposite = run_cli("compare " + report.string() + " " + reverse_file.string());
  CHECK(opposite.exit_code == 0);
  CHECK(opposite.out.find("tau\t-1.000000\n") != std::string::npos);
}

TEST_CASE("compare detects the single-swap tau") {
  const auto report = write_file("swap_report.tsv",
                                 "# columns: node score rank\n"
                                 "1\t0.4\t1\n"
                                 "2\t0.3\t2\n"
                                 "3\t0.2\t3\n"
                                 "4\t0.1\t4\n");
  const auto reference = write_file("swap_ref.txt", "1\n3\n2\n4\n");
  const CommandResult result = run_cli("compare " + report.string() + " " + reference.string());
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("tau\t0.666667\n") != std::string::npos);
}

TEST_CASE("compare rejects mismatched node sets") {
  const auto report = write_file("mm_report.tsv", "1\t0.5\t1\n2\t0.4\t2\n");
  const auto reference = write_file("mm_ref.txt", "1\n");
  CHECK(run_cli("compare " + report.string() + " " + reference.string()).exit_code == 1);

  const auto bad_k = write_file("mm_ref2.txt", "2\n1\n");
  CHECK(run_cli("compare " + report.string() + " " + bad_k.string() + " --k 9").exit_code == 1);
}

TEST_CASE("sweep emits one row per alpha") {
  const fs::path graph = work_dir() / "sweep_graph.tsv";
  REQUIRE(run_cli("generate --depth 2 --branching 3 --extra 2 --seed 3 --out-graph " +
                  graph.string())
              .exit_code == 0);
  // Ground-truth hierarchy order: ids ascend breadth-first.
  std::string reference_text;
  for (int v = 1; v <= 13; ++v) reference_text += std::to_string(v) + "\n";
  const auto reference = write_file("sweep_ref.txt", reference_text);

  const CommandResult result = run_cli("sweep " + graph.string() + " " + reference.string() +
                                       " --alphas 1,2/3,2/5 --k 3");
  CHECK(result.exit_code == 0);
  const auto lines = data_lines(result.out);
  REQUIRE(lines.size() == 4);  // header + 3 rows
  CHECK(lines[0] == "alpha\ttau\texact_matches\ttop3");
  CHECK(first_column(lines[1]) == "1");
  CHECK(first_column(lines[2]) == "2/3");
  CHECK(first_column(lines[3]) == "2/5");

  const CommandResult repeat = run_cli("sweep " + graph.string() + " " + reference.string() +
                                       " --alphas 1,2/3,2/5 --k 3");
  CHECK(repeat.out == result.out);
}

TEST_CASE("sweep deduplicates repeated alphas with a warning") {
  const auto graph = fig1_file();
  std::string reference_text;
  for (int v = 1; v <= 6; ++v) reference_text += std::to_string(v) + "\n";
  const auto reference = write_file("dup_ref.txt", reference_text);
  const CommandResult result =
      run_cli("sweep " + graph.string() + " " + reference.string() + " --alphas 1,1.0,0.5");
  CHECK(result.exit_code == 0);
  CHECK(data_lines(result.out).size() == 3);  // header + 2 unique alphas
  CHECK(result.err.find("duplicate alpha") != std::string::npos);
}

TEST_CASE("sweep requires at least one alpha") {
  const auto graph = fig1_file();
  const auto reference = write_file("empty_ref.txt", "1\n2\n3\n4\n5\n6\n");
  CHECK(run_cli("sweep " + graph.string() + " " + reference.string() + " --alphas ,").exit_code ==
        2);
}

TEST_CASE("non-convergence warns but still exits 0") {
  const auto graph = fig1_file();
  const CommandResult result = run_cli("rank " + graph.string() + " --max-iter 1");
  CHECK(result.exit_code == 0);
  CHECK(result.err.find("warning") != std::string::npos);
  CHECK(result.out.find("# converged: false\n") != std::string::npos);
  CHECK(data_lines(result.out).size() == 6);
}

TEST_CASE("labeled graphs report labels") {
  const auto graph = write_file("team.tsv",
                                "ana\tben\t6\n"
                                "ben\tana\t2\n"
                                "ana\tcam\t7\n"
                                "cam\tana\t1\n");
  const CommandResult result = run_cli("rank " + graph.string() + " --key hub");
  CHECK(result.exit_code == 0);
  const auto lines = data_lines(result.out);
  REQUIRE(lines.size() == 3);
  CHECK(first_column(lines.front()) == "ana");  // heavy outgoing assignments
}

TEST_CASE("running without a subcommand is a usage error") {
  CHECK(run_cli("").exit_code == 2);
}
