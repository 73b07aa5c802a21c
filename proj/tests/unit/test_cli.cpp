#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "growthlab/cli/commands.hpp"
#include "growthlab/cli/config.hpp"
#include "growthlab/cli/descriptor.hpp"
#include "growthlab/cli/parallel.hpp"
#include "growthlab/cli/report.hpp"
#include "growthlab/cli/zero_io.hpp"
#include "growthlab/error.hpp"
#include "growthlab/radial.hpp"
#include "growthlab/special.hpp"

using namespace growthlab;
using namespace growthlab::cli;
using points::PointDistribution;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("growthlab_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

RunConfig config_with_grid(const std::string& grid) {
  RunConfig c;
  c.grid = parse_grid(grid);
  return c;
}

double at(const GrowthReport& r, const std::string& col, std::size_t i) { return *r.find(col)->at(i); }

int kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

}  // namespace

TEST(Descriptor, Literals) {
  EXPECT_DOUBLE_EQ(parse_real("pi"), kPi);
  EXPECT_DOUBLE_EQ(parse_real("2pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(parse_real("-1.5e2"), -150.0);
  EXPECT_EQ(parse_complex("1+2i"), std::complex<double>(1, 2));
  EXPECT_EQ(parse_complex("-i"), std::complex<double>(0, -1));
  EXPECT_EQ(parse_complex("3i"), std::complex<double>(0, 3));
  EXPECT_EQ(parse_complex("0.5-2e-3i"), std::complex<double>(0.5, -2e-3));
  EXPECT_THROW(parse_real("abc"), Error);
  EXPECT_THROW(parse_complex("1+"), Error);
}

TEST(Descriptor, FunctionForms) {
  const std::complex<double> z(0.4, 0.7);
  auto la = [&](const char* d) { return funcat::log_abs(parse_descriptor(d), z); };
  EXPECT_NEAR(la("exp"), z.real(), 1e-15);
  EXPECT_NEAR(la("exp:1,0,0"), (z * z).real(), 1e-15);
  EXPECT_NEAR(la("sin:pi"), std::log(std::abs(std::sin(kPi * z))), 1e-13);
  EXPECT_NEAR(la("sinc"), std::log(std::abs(std::sin(kPi * z) / (kPi * z))), 1e-13);
  EXPECT_NEAR(la("poly:1,0,-1"), std::log(std::abs(z * z - 1.0)), 1e-15);
  EXPECT_NEAR(la("const:2"), std::log(2.0), 1e-15);
  EXPECT_NEAR(la("ml:1"), z.real(), 1e-12);
  EXPECT_NEAR(la("rgamma:1"), -std::log(std::abs(std::exp(special::log_gamma(z + 1.0)))), 1e-12);
  EXPECT_NEAR(la("prod:exp*poly:1,3"), z.real() + std::log(std::abs(z + 3.0)), 1e-14);
  EXPECT_NEAR(la("quot:poly:1,-1|poly:1,2"), std::log(std::abs((z - 1.0) / (z + 2.0))), 1e-14);
  EXPECT_NEAR(la("quot:(prod:exp*poly:1,3)|poly:1,2"), z.real() + std::log(std::abs((z + 3.0) / (z + 2.0))), 1e-14);
  for (const char* bad : {"", "foo", "poly:", "poly:1,x", "quot:exp", "prod:(exp", "exp:"})
    EXPECT_EQ(kind_of([&] { parse_descriptor(bad); }), int(ErrorKind::ParseError)) << bad;
  // well formed but out of range
  EXPECT_EQ(kind_of([] { parse_descriptor("ml:-1"); }), int(ErrorKind::InvalidSpec));
}

TEST(Descriptor, ZeroFiles) {
  const auto path = write_file("z.csv", "re,im,multiplicity\n1,0,1\n-1,0,1\n");
  const auto base = path.parent_path();
  const auto f = parse_descriptor("zeros:z.csv", base);
  EXPECT_NEAR(funcat::log_abs(f, 0.5), std::log(0.75), 1e-15);
  const auto g = parse_descriptor("zeros:z.csv,q=1,leading=2", base);
  EXPECT_NEAR(funcat::log_abs(g, 0.5), std::log(1.5), 1e-15);  // exponential factors cancel in the pair
  const auto h = parse_descriptor("roots:z.csv,leading=3", base);
  EXPECT_NEAR(funcat::log_abs(h, 2.0), std::log(9.0), 1e-15);
  EXPECT_THROW(parse_descriptor("zeros:missing.csv", base), Error);
}

TEST(ZeroIo, CsvRoundTripIsIdempotent) {
  const std::string text = "\xEF\xBB\xBFre,im,multiplicity\n2,0,1\n1,1,2\n2,0,1\n0,0,1\n";
  std::istringstream in(text);
  const auto z = read_zeros_csv(in);
  EXPECT_EQ(z.origin_multiplicity(), 1);
  EXPECT_EQ(z.multiplicity_at(2.0), 2);
  std::ostringstream once;
  write_zeros_csv(once, z);
  std::istringstream in2(once.str());
  std::ostringstream twice;
  write_zeros_csv(twice, read_zeros_csv(in2));
  EXPECT_EQ(once.str(), twice.str());
  EXPECT_EQ(once.str().substr(0, 19), "re,im,multiplicity\n");
}

TEST(ZeroIo, CsvKeepsFullPrecision) {
  const auto z = PointDistribution::from_points({{{0.1, 1.0 / 3}, 1}, {{std::numbers::e, -kPi}, 4}});
  std::ostringstream out;
  write_zeros_csv(out, z);
  std::istringstream in(out.str());
  EXPECT_EQ(read_zeros_csv(in), z);
}

TEST(ZeroIo, CsvErrorsNameTheLine) {
  std::istringstream bad1("re,im,multiplicity\n1,0,1\n1,x,1\n");
  try {
    read_zeros_csv(bad1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream bad2("x,y,z\n");
  EXPECT_THROW(read_zeros_csv(bad2), Error);
  std::istringstream bad3("re,im,multiplicity\n1,0,0\n");
  EXPECT_THROW(read_zeros_csv(bad3), Error);
  std::istringstream bad4("re,im,multiplicity\n1,0\n");
  EXPECT_THROW(read_zeros_csv(bad4), Error);
}

TEST(ZeroIo, Json) {
  std::istringstream in(R"([{"re": 1, "im": 2, "mult": 3}, {"re": -1, "im": 0}])");
  const auto z = read_zeros_json(in);
  EXPECT_EQ(z.total_multiplicity(), 4);
  std::ostringstream out;
  write_zeros_json(out, z);
  std::istringstream back(out.str());
  EXPECT_EQ(read_zeros_json(back), z);
  std::istringstream bad(R"([{"re": 1}])");
  EXPECT_THROW(read_zeros_json(bad), Error);
  const auto path = write_file("z.json", out.str());
  EXPECT_EQ(read_zeros_file(path), z);
}

TEST(Config, GridAndPPolicy) {
  const auto g = parse_grid("0.5:20:4");
  EXPECT_EQ(g.r_min, 0.5);
  EXPECT_EQ(g.r_max, 20.0);
  EXPECT_EQ(g.per_decade, 4);
  EXPECT_EQ(parse_grid(g.to_string()).radii(), g.radii());
  EXPECT_THROW(parse_grid("1:2"), Error);
  EXPECT_THROW(parse_grid("0:2:4"), Error);
  EXPECT_EQ(*parse_p_policy("2.5").explicit_p, 2.5);
  EXPECT_EQ(*parse_p_policy("optimal:0.75").optimal_rho, 0.75);
  EXPECT_FALSE(parse_p_policy("optimal").explicit_p);
  EXPECT_THROW(parse_p_policy("0.5"), Error);
  EXPECT_EQ(choose_p(parse_p_policy("optimal:2"), 0.0), 4.0);
  EXPECT_EQ(choose_p(parse_p_policy("optimal"), 0.3), 1.0);
  EXPECT_EQ(choose_p(parse_p_policy("optimal"), 1.5), 3.0);
  EXPECT_EQ(choose_p(parse_p_policy("3"), 1.5), 3.0);
}

TEST(Config, PrecedenceFlagsOverFileOverDefaults) {
  const auto file = write_file("cfg.json", R"({"grid": "1:100:2", "tol": 1e-7, "p": "optimal:1", "format": "json"})");
  const auto from_file = resolve_config(file, {});
  EXPECT_EQ(from_file.grid.r_max, 100.0);
  EXPECT_EQ(from_file.circle.rel_tol, 1e-7);
  EXPECT_EQ(from_file.format, OutputFormat::Json);
  EXPECT_EQ(from_file.kernel_tol, RunConfig{}.kernel_tol);
  Overrides flags;
  flags.grid = "2:3:1";
  flags.format = "csv";
  const auto both = resolve_config(file, flags);
  EXPECT_EQ(both.grid.r_min, 2.0);
  EXPECT_EQ(both.format, OutputFormat::Csv);
  EXPECT_EQ(both.circle.rel_tol, 1e-7);
  EXPECT_EQ(*both.p.optimal_rho, 1.0);
  const auto defaults = resolve_config(std::nullopt, {});
  EXPECT_EQ(defaults.grid.per_decade, 16);
  const auto bad = write_file("bad.json", R"({"gird": "1:2:3"})");
  EXPECT_EQ(kind_of([&] { resolve_config(bad, {}); }), int(ErrorKind::ParseError));
  const auto neg = write_file("neg.json", R"({"tol": -1})");
  EXPECT_THROW(resolve_config(neg, {}), Error);
}

TEST(Config, EchoLeavesOutThreads) {
  RunConfig a, b;
  a.threads = 1;
  b.threads = 8;
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_FALSE(a.to_json().contains("threads"));
  EXPECT_EQ(resolve_threads(3), 3);
  ::setenv("GROWTHLAB_THREADS", "5", 1);
  EXPECT_EQ(resolve_threads(0), 5);
  ::unsetenv("GROWTHLAB_THREADS");
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(Parallel, OrderAndFirstErrorAreDeterministic) {
  const auto v = parallel_map<int>(100, 8, [](std::size_t i) { return int(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], int(i * i));
  try {
    parallel_map<int>(50, 6, [](std::size_t i) -> int {
      if (i % 7 == 3) throw std::runtime_error("at " + std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "at 3");
  }
}

TEST(Report, CsvSchemaAndMissingValues) {
  const auto r = cmd_characteristics("exp", config_with_grid("1:10:1"));
  std::ostringstream out;
  write_csv(out, r);
  std::istringstream lines(out.str());
  std::string header, row1;
  std::getline(lines, header);
  std::getline(lines, row1);
  EXPECT_EQ(header.substr(0, 23), "r,lnM,C,B,T,NZ,bound_ln");
  EXPECT_EQ(out.str().find("nan"), std::string::npos);
  EXPECT_NE(row1.find(",,"), std::string::npos);  // bound_ln is empty
  EXPECT_EQ(at(r, "lnM", 0), 1.0);
  EXPECT_EQ(at(r, "lnM", 1), 10.0);
  EXPECT_NEAR(at(r, "C", 0), 0.0, 1e-15);
  EXPECT_NEAR(at(r, "C", 1), 0.0, 1e-15);
  EXPECT_NO_THROW(r.check_shape());
}

TEST(Report, JsonMirrorsReport) {
  auto c = config_with_grid("0.5:2:2");
  const auto r = cmd_characteristics("poly:1,0,-1", c);
  const auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["descriptor"], "poly:1,0,-1");
  EXPECT_EQ(j["columns"]["bound_ln"][0], nullptr);
  EXPECT_EQ(j["columns"]["lnM"].size(), r.keys.size());
  EXPECT_EQ(j["metadata"]["config"], c.to_json());
  EXPECT_EQ(j["metadata"]["version"], "1.0.0");
  EXPECT_TRUE(j["metadata"].contains("timestamp"));
}

TEST(Report, TimestampHonoursSourceDateEpoch) {
  ::setenv("SOURCE_DATE_EPOCH", "0", 1);
  EXPECT_EQ(make_metadata({})["timestamp"], "1970-01-01T00:00:00Z");
  ::unsetenv("SOURCE_DATE_EPOCH");
}

TEST(Commands, CharacteristicsExamples) {
  const auto r = cmd_characteristics("poly:1,0,-1", config_with_grid("2:2:1"));
  EXPECT_NEAR(at(r, "lnM", 0), std::log(5.0), 1e-12);
  EXPECT_NEAR(at(r, "C", 0), std::log(4.0), 1e-12);
  EXPECT_NEAR(at(r, "NZ", 0), std::log(4.0), 1e-15);
  EXPECT_TRUE(r.warnings.empty());

  // meromorphic: T = m + N of poles, and the normalized max identity
  const auto q = cmd_characteristics("quot:poly:1,-1|poly:1,2", config_with_grid("0.5:4:2"));
  const auto f = funcat::FunctionSpec::polynomial({1.0, -1.0});
  const auto g = funcat::FunctionSpec::polynomial({1.0, 2.0});
  for (std::size_t i = 0; i < q.keys.size(); ++i) {
    const double rr = q.keys[i];
    if (std::abs(rr - 1.0) < 1e-9 || std::abs(rr - 2.0) < 1e-9) continue;
    const double m = radial::proximity(funcat::FunctionSpec::quotient(f, g), rr);
    const double npol = rr >= 2 ? std::log(rr / 2) : 0.0;
    EXPECT_NEAR(at(q, "T", i), m + npol, 1e-12);
    const double umax = radial::circle_mean_log(g, rr) +
                        radial::mean_positive_part([&](double t) {
                          const auto z = std::polar(rr, t);
                          return std::log(std::abs(z - 1.0)) - std::log(std::abs(z + 2.0));
                        });
    EXPECT_NEAR(at(q, "T", i), umax - std::log(2.0), 1e-8);
  }
  EXPECT_FALSE(q.find("lnM")->at(0).has_value());
}

TEST(Commands, ChainViolationsAreFlagged) {
  for (const char* d : {"exp", "sinc", "ml:0.75", "rgamma:1"}) {
    const auto r = cmd_characteristics(d, config_with_grid("0.1:20:4"));
    EXPECT_TRUE(r.warnings.empty()) << d;
    for (std::size_t i = 0; i < r.keys.size(); ++i) EXPECT_LE(at(r, "chain_violation", i), 1e-8);
  }
}

TEST(Commands, PaleyTable) {
  const std::vector<double> rhos = {1.0, 0.5, 0.25};
  const auto t = cmd_paley_table(rhos, RunConfig{});
  EXPECT_EQ(t.key_column, "rho");
  EXPECT_NEAR(at(t, "P", 0), 3.14159265, 1e-8);
  EXPECT_EQ(at(t, "p", 0), 2.0);
  EXPECT_NEAR(at(t, "P", 1), kPi / 2, 1e-15);
  EXPECT_EQ(at(t, "p", 1), 1.0);
  EXPECT_NEAR(at(t, "P", 2), 1.110721, 1e-6);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(at(t, "rel_err", i), 1e-8);
}

TEST(Commands, BoundExamples) {
  const auto zeros = write_file("one.csv", "re,im,multiplicity\n1,0,1\n");
  auto c = config_with_grid("0.5:50:2");
  c.p = parse_p_policy("1");
  const auto b = cmd_bound(BoundSource::Zeros, zeros.string(), c);
  for (std::size_t i = 0; i < b.keys.size(); ++i) {
    EXPECT_NEAR(at(b, "bound_ln", i), std::log1p(b.keys[i]), 1e-9);
    if (i > 0) {
      EXPECT_GT(at(b, "bound_ln", i), at(b, "bound_ln", i - 1));
    }
    EXPECT_GE(at(b, "lnM", i), at(b, "NZ", i) - 1e-12);  // f = 1 - z
  }
  const auto e = cmd_bound(BoundSource::Function, "exp", config_with_grid("1:10:2"));
  for (std::size_t i = 0; i < e.keys.size(); ++i) EXPECT_NEAR(at(e, "bound_ln", i), 0.0, 1e-12);

  auto c2 = config_with_grid("1:10:2");
  c2.p = parse_p_policy("2");
  const auto t = cmd_bound(BoundSource::TProfile, "exp", c2);
  for (std::size_t i = 0; i < t.keys.size(); ++i) {
    // the sampled profile is a chord of a convex function of ln t, so the bound sits just above r
    EXPECT_GE(at(t, "bound_ln", i), t.keys[i] - 1e-9);
    EXPECT_NEAR(at(t, "bound_ln", i), t.keys[i], 2e-4 * t.keys[i]);
    EXPECT_NEAR(at(t, "margin", i), at(t, "bound_ln", i) - at(t, "T", i), 1e-15);
  }
  auto c3 = config_with_grid("1:10:2");
  c3.p = parse_p_policy("1");
  EXPECT_EQ(kind_of([&] { cmd_bound(BoundSource::TProfile, "exp", c3); }), int(ErrorKind::Divergent));
  const auto origin = write_file("origin.csv", "re,im,multiplicity\n0,0,1\n");
  EXPECT_EQ(kind_of([&] { cmd_bound(BoundSource::Zeros, origin.string(), c); }), int(ErrorKind::OriginPoint));
}

TEST(Commands, ProductAndJensen) {
  std::ostringstream text;
  text << "re,im,multiplicity\n";
  for (int k = 1; k <= 30; ++k) text << k * k << ",0,1\n";
  const auto path = write_file("squares.csv", text.str());
  const auto p = cmd_product(path.string(), config_with_grid("0.5:500:2"));
  for (std::size_t i = 0; i < p.keys.size(); ++i) {
    EXPECT_LE(std::abs(at(p, "jensen_residual", i)), 1e-6);
    EXPECT_GE(at(p, "lower_margin", i), -1e-6);
  }
  EXPECT_EQ(p.metadata["genus"], 0);
  const auto j = cmd_jensen("quot:poly:1,-1|poly:1,2", config_with_grid("0.5:4:2"));
  for (std::size_t i = 0; i < j.keys.size(); ++i) EXPECT_LE(std::abs(at(j, "jensen_residual", i)), 1e-9);
  EXPECT_THROW(cmd_jensen("poly:1,0", RunConfig{}), Error);
  EXPECT_THROW(cmd_jensen("ml:0.5", RunConfig{}), Error);
}

TEST(Commands, OutputIndependentOfThreadCount) {
  ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  auto c = config_with_grid("0.2:25:6");
  std::string ref;
  for (int threads : {1, 2, 7}) {
    c.threads = threads;
    std::ostringstream out;
    write_csv(out, cmd_characteristics("prod:ml:0.75*poly:1,3", c));
    const auto json = to_json(cmd_characteristics("sinc", c)).dump();
    if (ref.empty()) ref = out.str() + json;
    EXPECT_EQ(out.str() + json, ref) << threads;
  }
  ::unsetenv("SOURCE_DATE_EPOCH");
}

TEST(Verify, SuitesPassQuickly) {
  const auto start = std::chrono::steady_clock::now();
  const auto paley = cmd_verify("paley", RunConfig{});
  EXPECT_TRUE(paley.passed);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
  const auto jensen = cmd_verify("jensen", RunConfig{});
  EXPECT_TRUE(jensen.passed) << (jensen.first_failure() ? jensen.first_failure()->name : "");
  const auto j = jensen.to_json();
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j.contains("first_failure"));
  EXPECT_EQ(kind_of([] { cmd_verify("nope", RunConfig{}); }), int(ErrorKind::InvalidArgument));
  EXPECT_EQ(verify_suites().back(), "all");
}

TEST(Verify, FailureIsNamed) {
  VerifyResult r;
  r.checks = {{"s", "ok", 0, 1, true}, {"s", "broken", 2, 1, false}, {"s", "later", 3, 1, false}};
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "broken");
  EXPECT_EQ(r.to_json()["first_failure"], "s: broken");
}
