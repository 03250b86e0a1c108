#include <gtest/gtest.h>

#include "benchviz/sysbench.hpp"
#include "support/generators.hpp"

using namespace benchviz;

namespace {

constexpr const char* kLine10 =
    "[ 10s ] thds: 8 tps: 1532.97 qps: 30690.40 (r/w/o: 21480.28/6133.88/3076.24) lat (ms,95%): 7.84 "
    "err/s: 0.00 reconn/s: 0.00";

constexpr const char* kFinalReport = R"(
SQL statistics:
    queries performed:
        read:                            1503558
        write:                           429588
        other:                           214794
        total:                           2147940
    transactions:                        107397 (1789.72 per sec.)
    queries:                             2147940 (35794.40 per sec.)
    ignored errors:                      0      (0.00 per sec.)
    reconnects:                          0      (0.00 per sec.)

General statistics:
    total time:                          60.0055s
    total number of events:              107397

Latency (ms):
         min:                                    2.06
         avg:                                    4.47
         max:                                   45.02
         95th percentile:                        7.84
         sum:                               479787.95

Threads fairness:
    events (avg/stddev):           13424.6250/32.41
    execution time (avg/stddev):   59.9735/0.00
)";

Error expect_error(std::string_view text) {
  try {
    parse_sysbench(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorCode::InvalidArgument, "none");
}

}  // namespace

TEST(Sysbench, SingleIntervalLine) {
  auto run = parse_sysbench(kLine10);
  ASSERT_EQ(run.samples.size(), 1u);
  const auto& s = run.samples[0];
  EXPECT_EQ(s.t, 10);
  EXPECT_EQ(s.tps, 1532.97);
  EXPECT_EQ(s.qps, 30690.40);
  EXPECT_EQ(s.latency, 7.84);
  EXPECT_EQ(s.errors_per_s, 0.0);
  ASSERT_TRUE(s.extras);
  EXPECT_EQ(s.extras->threads, 8);
  EXPECT_EQ(s.extras->reads_per_s, 21480.28);
  EXPECT_EQ(s.extras->writes_per_s, 6133.88);
  EXPECT_EQ(s.extras->other_per_s, 3076.24);
  EXPECT_EQ(run.latency_percentile, 95.0);
  EXPECT_FALSE(run.summary);
}

TEST(Sysbench, EmptyInputIsMalformed) {
  EXPECT_EQ(expect_error("").code(), ErrorCode::MalformedInput);
  EXPECT_EQ(expect_error("hello\nworld\n").code(), ErrorCode::MalformedInput);
}

TEST(Sysbench, ThreeLinesInOrder) {
  const std::string text =
      "[ 1s ] thds: 4 tps: 100.0 qps: 2000.0 (r/w/o: 1400.0/400.0/200.0) lat (ms,95%): 5.00 err/s: 0.00 reconn/s: 0.00\n"
      "[ 2s ] thds: 4 tps: 200.0 qps: 4000.0 (r/w/o: 2800.0/800.0/400.0) lat (ms,95%): 5.00 err/s: 0.00 reconn/s: 0.00\n"
      "[ 3s ] thds: 4 tps: 300.0 qps: 6000.0 (r/w/o: 4200.0/1200.0/600.0) lat (ms,95%): 5.00 err/s: 0.00 reconn/s: 0.00\n";
  auto run = parse_sysbench(text);
  ASSERT_EQ(run.samples.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(run.samples[i].t, i + 1);
    EXPECT_EQ(run.samples[i].tps, 100.0 * (i + 1));
  }
}

TEST(Sysbench, WhitespaceFlexible) {
  auto run = parse_sysbench(
      "  [  7s  ]   thds:  2  tps:  1.50  qps: 3.00 (r/w/o:1.00/1.00/1.00) lat (ms,99%):  2.5 err/s: 0.10 reconn/s: 0.00\r\n");
  ASSERT_EQ(run.samples.size(), 1u);
  EXPECT_EQ(run.samples[0].t, 7);
  EXPECT_EQ(run.samples[0].errors_per_s, 0.10);
  EXPECT_EQ(run.latency_percentile, 99.0);
}

TEST(Sysbench, CommaDecimalIsNumericOverflow) {
  auto e = expect_error(
      "[ 1s ] thds: 4 tps: 100,5 qps: 2000.0 (r/w/o: 1400.0/400.0/200.0) lat (ms,95%): 5.00 err/s: 0.00 reconn/s: 0.00");
  EXPECT_EQ(e.code(), ErrorCode::NumericOverflow);
  EXPECT_EQ(e.line(), 1u);
}

TEST(Sysbench, NonFiniteOrNegativeIsNumericOverflow) {
  for (const char* tok : {"-1.0", "inf", "nan", "1e999", "1e3"}) {
    std::string line = "[ 1s ] thds: 4 tps: " + std::string(tok) +
                       " qps: 2.0 (r/w/o: 1.0/1.0/0.0) lat (ms,95%): 5.00 err/s: 0.00 reconn/s: 0.00";
    EXPECT_EQ(expect_error(line).code(), ErrorCode::NumericOverflow) << tok;
  }
}

TEST(Sysbench, RegressingOrDuplicateTimeIsMalformed) {
  testkit::Rng rng(1);
  auto a = testkit::sysbench_line({5, 100, 100, 100, 0});
  auto b = testkit::sysbench_line({5, 200, 100, 100, 0});
  auto c = testkit::sysbench_line({4, 200, 100, 100, 0});
  auto e1 = expect_error(a + "\n" + b + "\n");
  EXPECT_EQ(e1.code(), ErrorCode::MalformedInput);
  EXPECT_EQ(e1.line(), 2u);
  EXPECT_EQ(expect_error(a + "\n" + c + "\n").code(), ErrorCode::MalformedInput);
}

TEST(Sysbench, FinalReportSummary) {
  auto run = parse_sysbench(std::string(kLine10) + "\n" + kFinalReport);
  ASSERT_TRUE(run.summary);
  EXPECT_EQ(run.summary->total_transactions, 107397);
  EXPECT_EQ(run.summary->total_queries, 2147940);
  EXPECT_EQ(run.summary->avg_tps, 1789.72);
  EXPECT_EQ(run.summary->avg_qps, 35794.40);
  EXPECT_EQ(run.summary->avg_latency, 4.47);
  EXPECT_EQ(run.summary->total_time, 60.0055);
}

TEST(Sysbench, SummaryAloneIsAccepted) {
  auto run = parse_sysbench(kFinalReport);
  EXPECT_TRUE(run.samples.empty());
  EXPECT_TRUE(run.summary);
}

TEST(Sysbench, IncompleteSummaryIsIgnored) {
  auto run = parse_sysbench(std::string(kLine10) + "\n    transactions: 10 (1.00 per sec.)\n");
  EXPECT_FALSE(run.summary);
}

TEST(Sysbench, NoiseDoesNotChangeSamples) {
  testkit::Rng rng(42);
  for (int round = 0; round < 50; ++round) {
    auto log = testkit::random_sysbench_log(rng, testkit::uniform_int(rng, 1, 40), false);
    auto clean = parse_sysbench(log.text);
    std::string noisy = std::string(testkit::kSysbenchBanner) + "WARNING: something odd\n" + log.text +
                        "\n[ xs ] not a report\nFATAL: nothing\n" + kFinalReport;
    auto dirty = parse_sysbench(noisy);
    EXPECT_EQ(clean.samples, dirty.samples);
  }
}

TEST(Sysbench, GeneratedLogsMatchGenerator) {
  testkit::Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    auto log = testkit::random_sysbench_log(rng, testkit::uniform_int(rng, 1, 100));
    auto run = parse_sysbench(log.text);
    ASSERT_EQ(run.samples.size(), log.samples.size());
    for (std::size_t i = 0; i < log.samples.size(); ++i) {
      const auto& want = log.samples[i];
      const auto& got = run.samples[i];
      EXPECT_EQ(got.t, want.t);
      EXPECT_EQ(got.tps, static_cast<double>(want.tps_cents) / 100.0);
      EXPECT_EQ(got.qps, static_cast<double>(want.qps_cents) / 100.0);
      EXPECT_EQ(got.latency, static_cast<double>(want.lat_cents) / 100.0);
      EXPECT_EQ(got.errors_per_s, static_cast<double>(want.err_cents) / 100.0);
      if (i > 0) {
        EXPECT_GT(got.t, run.samples[i - 1].t);
      }
    }
  }
}

TEST(Sysbench, Deterministic) {
  testkit::Rng rng(9);
  auto log = testkit::random_sysbench_log(rng, 30);
  EXPECT_EQ(parse_sysbench(log.text), parse_sysbench(log.text));
}
