#include <geofreq/commands.hpp>
#include <geofreq/config.hpp>
#include <geofreq/csv.hpp>
#include <geofreq/error.hpp>
#include <geofreq/signals.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

using namespace geofreq;

namespace {

ErrorKind csv_error(const std::string& text) {
  std::istringstream is(text);
  try {
    read_waveform_csv(is);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

ErrorKind config_error(const std::string& text) {
  std::istringstream is(text);
  try {
    parse_config(is);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

RunConfig config(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

}  // namespace

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(12.0), "12");
  EXPECT_EQ(format_double(-0.0), "-0");
  EXPECT_EQ(format_double(1e-20), "1e-20");
  for (double x : {std::numbers::pi, 1.0 / 3.0, 314.1592653589793, -2.5e-300,
                   std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(parse_double(format_double(x)).value(), x);
  }
  std::string s = "a";
  append_cell(s, std::nullopt);
  append_cell(s, 2.5);
  EXPECT_EQ(s, "a2.5");
}

TEST(Format, ParseDoubleRejectsJunk) {
  EXPECT_EQ(parse_double("+1.5"), 1.5);
  EXPECT_EQ(parse_double("-3e2"), -300.0);
  for (const char* bad : {"", " 1", "1 ", "1.0x", "nan", "inf", "--1", "1e999"}) {
    EXPECT_FALSE(parse_double(bad).has_value()) << bad;
  }
}

TEST(WaveformCsv, WriteThenReadIsExact) {
  const auto s = sample(make_scenario(ScenarioId::E4), 0.0, 0.01, 1e-4);
  std::ostringstream os;
  const std::vector<std::string> comments{"scenario=E4"};
  write_waveform_csv(os, s, comments);
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("# scenario=E4\nt,va,vb,vc\n", 0), 0u);
  std::istringstream is(text);
  const auto back = read_waveform_csv(is);
  ASSERT_EQ(back.size(), s.size());
  EXPECT_TRUE(std::ranges::equal(back.values(), s.values()));
  for (std::size_t k = 0; k < s.size(); ++k) EXPECT_EQ(back.time(k), s.time(k));
}

TEST(WaveformCsv, ToleratesCommentsAndTrailingBlank) {
  std::istringstream is("# a\n#b\nt,va,vb,vc\n0,1,2,3\n0.5,4,5,6\n1,7,8,9\n\n");
  const auto s = read_waveform_csv(is);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.value(1, 2), 6.0);
}

TEST(WaveformCsv, MalformedInputs) {
  EXPECT_EQ(csv_error(""), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("time,a,b,c\n0,1,2,3\n1,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,2\n1,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,2,3,4\n1,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,x,3\n1,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,,3\n1,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,2,3\n1,1,2,3\n3,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,2,3\n\n1,1,2,3\n"), ErrorKind::MalformedCsv);
  EXPECT_EQ(csv_error("t,va,vb,vc\n0,1,2,3\n"), ErrorKind::MalformedCsv);
}

TEST(WaveformCsv, ErrorNamesTheLine) {
  std::istringstream is("t,va,vb,vc\n0,1,2,3\n1,1,oops,3\n");
  try {
    read_waveform_csv(is);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
  try {
    read_waveform_file("/nonexistent/dir/none.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Config, FullFile) {
  const auto c = config(
      "[scenario]\nname = E8\nVb = 8\n"
      "[sampling]\nt0 = 0.5\nt1 = 1.5\ndt = 2e-4\n"
      "[filter]\ntau = 1e-3\nremove_zero_sequence = yes\n"
      "[park]\nw_dq = 314\ntheta0 = 0.1\n"
      "[analysis]\nmode = numeric\ncsv = in.csv\nout = out.csv\n");
  EXPECT_EQ(c.scenario, "E8");
  EXPECT_EQ(c.params.at("Vb"), 8.0);
  EXPECT_EQ(c.t0, 0.5);
  EXPECT_EQ(c.t1, 1.5);
  EXPECT_EQ(c.dt, 2e-4);
  EXPECT_EQ(c.filter_tau, 1e-3);
  EXPECT_EQ(c.remove_zero_sequence, true);
  EXPECT_EQ(c.w_dq, 314.0);
  EXPECT_EQ(c.theta0, 0.1);
  EXPECT_EQ(c.mode, "numeric");
  EXPECT_EQ(c.csv, "in.csv");
  EXPECT_EQ(c.out, "out.csv");
}

TEST(Config, EmptyAndPartial) {
  const auto c = config("; comment\n[sampling]\ndt = 1e-5\n");
  EXPECT_FALSE(c.scenario.has_value());
  EXPECT_FALSE(c.t0.has_value());
  EXPECT_EQ(c.dt, 1e-5);
  EXPECT_FALSE(config("").dt.has_value());
}

TEST(Config, Errors) {
  EXPECT_EQ(config_error("[bogus]\nx = 1\n"), ErrorKind::MalformedConfig);
  EXPECT_EQ(config_error("[sampling]\nstep = 1\n"), ErrorKind::MalformedConfig);
  EXPECT_EQ(config_error("[sampling]\ndt = fast\n"), ErrorKind::MalformedConfig);
  EXPECT_EQ(config_error("[filter]\nremove_zero_sequence = maybe\n"), ErrorKind::MalformedConfig);
  EXPECT_EQ(config_error("[sampling\ndt = 1\n"), ErrorKind::MalformedConfig);
  EXPECT_EQ(config_error("[scenario]\nVb = lots\n"), ErrorKind::MalformedConfig);
  try {
    load_config("/nonexistent/x.ini");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Config, ExampleFileLoads) {
  const auto c = load_config(std::string(GEOFREQ_CONFIG_DIR) + "/example.ini");
  EXPECT_TRUE(c.scenario.has_value());
  EXPECT_NO_THROW(parse_scenario(*c.scenario));
}

TEST(Merge, CommandLineWins) {
  const auto cfg = config("[scenario]\nname = E1\nVa = 5\nVb = 6\n[sampling]\nt1 = 0.2\ndt = 1e-3\n");
  CommandOptions cli;
  cli.scenario = "E2";
  cli.params["Vb"] = 7.0;
  cli.dt = 5e-4;
  const auto m = merge(cfg, cli);
  EXPECT_EQ(m.scenario, "E2");
  EXPECT_EQ(m.params.at("Va"), 5.0);
  EXPECT_EQ(m.params.at("Vb"), 7.0);
  EXPECT_EQ(m.t1, 0.2);
  EXPECT_EQ(m.dt, 5e-4);
  EXPECT_FALSE(m.t0.has_value());
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code(ErrorKind::UnknownScenario), kExitUsage);
  EXPECT_EQ(exit_code(ErrorKind::InvalidParameter), kExitUsage);
  EXPECT_EQ(exit_code(ErrorKind::InvalidRange), kExitUsage);
  EXPECT_EQ(exit_code(ErrorKind::MalformedCsv), kExitIo);
  EXPECT_EQ(exit_code(ErrorKind::Io), kExitIo);
  EXPECT_EQ(exit_code(ErrorKind::DegenerateInput), kExitIo);
}
