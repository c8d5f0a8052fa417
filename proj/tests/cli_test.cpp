#include <doctest.h>

#include <json.hpp>

#include "wigner/admissibility.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WIGNER_BGK_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("eval: figure-2 point value and grid structure") {
  const auto single = run_cli("eval --preset figure-2 --nq 1 --np 1 --qmax 0 --pmax 0");
  CHECK(single.exit_code == 0);
  std::istringstream in(single.output);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "q,p,F");
  double q, p, f;
  REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &q, &p, &f) == 3);
  CHECK(q == 0.0);
  CHECK(p == 0.0);
  CHECK(f == doctest::Approx(0.0420387).epsilon(1e-4));
}

TEST_CASE("eval: grid truncates at the support edge") {
  const auto res = run_cli("eval --preset figure-2 --nq 41 --np 3 --qmax 3.2 --pmax 2");
  CHECK(res.exit_code == 0);
  std::istringstream in(res.output);
  std::string line;
  std::getline(in, line);  // header
  int outside = 0, nonzero_outside = 0;
  while (std::getline(in, line)) {
    double q, p, f;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &q, &p, &f) == 3);
    if (q * q > 8.0) {
      ++outside;
      if (f != 0.0) ++nonzero_outside;
    }
  }
  CHECK(outside > 0);
  CHECK(nonzero_outside == 0);
}

TEST_CASE("eval: empty grid is a usage error") {
  CHECK(run_cli("eval --preset figure-2 --nq 0").exit_code == 2);
  CHECK(run_cli("eval --preset no-such-preset").exit_code == 2);
  CHECK(run_cli("eval --mu 1 --gamma 1").exit_code == 2);
}

TEST_CASE("eval: CSV uses LF endings and emits the full grid") {
  const auto res = run_cli("eval --preset figure-6-gamma-0.5 --nq 3 --np 3 --qmax 1 --pmax 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find('\r') == std::string::npos);
  std::istringstream in(res.output);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9);
}

TEST_CASE("verify: normalized equilibrium passes, reports round-trip") {
  // normalization condition included, so feed unit-norm constants
  const auto unit = wigner::normalize(wigner::reference_family(0.2, +1));
  std::ostringstream args;
  args.precision(17);
  args << "verify --mu -1 --gamma 0.2 --a0 " << unit.consts().a0 << " --b0 "
       << unit.consts().b0 << " --c0 1";
  const std::string out = temp_path("verify.json");
  const auto res = run_cli(args.str() + " --out " + out);
  CHECK(res.exit_code == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("ode_residual_max").get<double>() <= 1e-7);
  CHECK(j.at("residual_qp").at("max_abs_residual").get<double>() <= 1e-7);
  CHECK(j.at("residual_Hq").at("max_abs_residual").get<double>() <= 1e-7);
  CHECK(j.at("admissibility").at("flags").at("spatial_density_nonneg").get<bool>());
  CHECK(nlohmann::json::parse(j.dump()) == j);
  std::remove(out.c_str());
}

TEST_CASE("verify: figure-2 fails admissibility with a recorded warning") {
  const std::string out = temp_path("verify_fig2.json");
  const auto res = run_cli("verify --preset figure-2 --out " + out);
  CHECK(res.exit_code == 1);
  std::ifstream in(out);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK_FALSE(j.at("pass").get<bool>());
  CHECK(j.contains("admissibility_error"));
  CHECK(j.at("warnings").size() >= 1);
  // the stationary-equation checks themselves are clean
  CHECK(j.at("ode_residual_max").get<double>() <= 1e-7);
  std::remove(out.c_str());
}

TEST_CASE("scan: two-hump onset and density boundary") {
  const std::string out = temp_path("scan.json");
  auto res = run_cli("scan --predicate two-hump --lo 0.2 --hi 0.6 --format json --out " + out);
  CHECK(res.exit_code == 0);
  {
    std::ifstream in(out);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("gamma_critical").get<double>() == doctest::Approx(0.3644).epsilon(2e-3));
  }
  res = run_cli("scan --predicate density --a0-sign -1 --lo 0.8 --hi 1.5 --format json --out " +
                out);
  CHECK(res.exit_code == 0);
  {
    std::ifstream in(out);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("gamma_critical").get<double>() == doctest::Approx(1.1455).epsilon(1e-3));
  }
  // no sign change across the bracket is a usage error
  CHECK(run_cli("scan --predicate two-hump --lo 0.5 --hi 0.6").exit_code == 2);
  std::remove(out.c_str());
}

TEST_CASE("wp: tabulated curves and metadata") {
  const std::string out = temp_path("wp.json");
  const auto res = run_cli("wp --c0 1 2 3 --points 40 --format json --out " + out);
  CHECK(res.exit_code == 0);
  std::ifstream in(out);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("units").at("hbar").get<double>() == 1.0);
  CHECK(j.at("b0").get<double>() == 1.0);
  REQUIRE(j.at("curves").size() == 3);
  CHECK(j["curves"][0]["n_cut"].get<double>() == doctest::Approx(6.0));
  CHECK(j["curves"][2]["n_cut"].get<double>() == doctest::Approx(2.0 / 3.0));
  // B column tends to b0 toward zero density
  CHECK(j["curves"][0]["B"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
  std::remove(out.c_str());

  // csv: one block per c0 with the (n, C, B, phi) columns
  const auto csv = run_cli("wp --c0 1 --points 5");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("n,C,B,phi") != std::string::npos);
}

TEST_CASE("wp: spatial profile stays near neutrality") {
  const auto res = run_cli("wp --c0 1 --profile --x-max 2 --steps 100 --format json");
  CHECK(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.output);
  CHECK_FALSE(j.at("exited").get<bool>());
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == 101);
  for (const auto& row : rows) CHECK(row[2].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("evolve: short run passes and writes a binary snapshot") {
  const std::string out = temp_path("evolve.json");
  const std::string snap = temp_path("snapshot.bin");
  const auto res = run_cli("evolve --preset figure-4-gamma-0.2 --T 0.05 --n 64 --out " + out +
                           " --snapshot " + snap + " --snapshot-format bin");
  CHECK(res.exit_code == 0);
  {
    std::ifstream in(out);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("deviation").get<double>() <= 1e-3);
    CHECK(j.at("max_mass_drift").get<double>() <= 1e-10);
  }
  {
    // binary snapshot: one-line JSON header then nq*np doubles
    std::ifstream in(snap, std::ios::binary);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    nlohmann::json h = nlohmann::json::parse(header);
    const int nq = h.at("nq").get<int>();
    const int np = h.at("np").get<int>();
    CHECK(nq == 64);
    std::vector<double> data(static_cast<std::size_t>(nq) * np);
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(double)));
    CHECK(in.gcount() == static_cast<std::streamsize>(data.size() * sizeof(double)));
  }
  std::remove(out.c_str());
  std::remove(snap.c_str());
}

TEST_CASE("evolve: truncated-support preset is rejected with explanation") {
  const auto res = run_cli("evolve --preset figure-2 --T 0.01 --n 64");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("mu = -1") != std::string::npos);
}

TEST_CASE("deterministic outputs for a fixed configuration") {
  const auto a = run_cli("eval --preset figure-5 --nq 11 --np 11");
  const auto b = run_cli("eval --preset figure-5 --nq 11 --np 11");
  CHECK(a.output == b.output);
  const auto s1 = run_cli("scan --predicate negativity --lo 0.4 --hi 0.9 --format json");
  const auto s2 = run_cli("scan --predicate negativity --lo 0.4 --hi 0.9 --format json");
  CHECK(s1.output == s2.output);
}
