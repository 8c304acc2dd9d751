// Copyright 2026 The qsac authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"

#include "qsac/config.hpp"
#include "qsac/convergence.hpp"
#include "qsac/errors.hpp"
#include "qsac/experiment.hpp"
#include "qsac/rng.hpp"
#include "qsac/stats.hpp"
#include "qsac/textio.hpp"

using namespace qsac;
using namespace qsac::harness;

namespace {

const std::string kSourceDir = QSAC_SOURCE_DIR;

std::string temp_dir(const std::string &leaf) {
    const auto dir =
        std::filesystem::temp_directory_path() / "qsac_harness" / leaf;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.name = "harness_probe";
    cfg.n_seeds = 2;
    cfg.max_episodes = 3;
    cfg.episodes_per_checkpoint = 2;
    cfg.sac.warmup_steps = 1 << 20; // pure uniform torques: no updates
    cfg.sac.batch_size = 16;
    cfg.actor_architecture = "(6,4,(1,1))";
    cfg.critic_architecture = "(8,6,1)";
    cfg.env.max_steps = 40;
    cfg.validate();
    return cfg;
}

} // namespace

TEST_CASE("doubles render in shortest round-trip form") {
    CHECK(io::format_double(0.99) == "0.99");
    CHECK(io::format_double(-17.5) == "-17.5");
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(5.0) == "5");
    CHECK(io::format_double(0.0003) == "0.0003");
    CHECK(io::format_double(1e-5) == "0.00001");
    CHECK(io::format_double(1e-6) == "1e-06");

    RandomStream rng(801);
    for (int i = 0; i < 400; ++i) {
        double v = rng.uniform(-1e6, 1e6);
        if (i % 4 == 0) {
            v = rng.uniform(-1.0, 1.0) * 1e-7;
        }
        if (i % 7 == 0) {
            v = rng.uniform(-1.0, 1.0) * 1e12;
        }
        const double back = io::parse_double(io::format_double(v), "rt");
        CHECK(back == v);
    }
    const double neg_zero = -0.0;
    const double back = io::parse_double(io::format_double(neg_zero), "rt");
    CHECK(std::signbit(back));
}

TEST_CASE("numeric parsing rejects malformed fields") {
    CHECK(io::parse_double("2.5", "f") == 2.5);
    CHECK(io::parse_integer("-42", "f") == -42);
    CHECK_THROWS_AS(io::parse_double("", "f"), ParseError);
    CHECK_THROWS_AS(io::parse_double("1.5x", "f"), ParseError);
    CHECK_THROWS_AS(io::parse_double("nope", "f"), ParseError);
    CHECK_THROWS_AS(io::parse_integer("12.5", "f"), ParseError);
    CHECK_THROWS_AS(io::parse_integer("99999999999999999999", "f"),
                    ParseError);
    try {
        io::parse_double("zz", "gamma");
        FAIL("expected a throw");
    } catch (const ParseError &e) {
        CHECK(contains(e.what(), "gamma"));
        CHECK(contains(e.what(), "zz"));
    }
}

TEST_CASE("episode CSV round-trips bit for bit") {
    std::vector<io::EpisodeRow> rows;
    io::EpisodeRow r;
    r.run_id = "probe-s0";
    r.seed = 12345678901234567ULL;
    r.episode = 1;
    r.steps = 250;
    r.episode_return = -292.3493465538435;
    r.solved = false;
    r.wall_ms = 5000;
    rows.push_back(r);
    r.run_id = "probe-s1";
    r.episode = 2;
    r.steps = 7;
    r.episode_return = 1.0 / 3.0;
    r.solved = true;
    r.wall_ms = 140;
    rows.push_back(r);

    const std::string dir = temp_dir("csv");
    const std::string path = dir + "/episodes.csv";
    io::write_episode_csv(path, rows);

    const std::string text = io::read_text_file(path);
    CHECK(contains(text, std::string(io::kEpisodeCsvHeader) + "\n"));

    const auto got = io::read_episode_csv(path);
    REQUIRE(got.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(got[i].run_id == rows[i].run_id);
        CHECK(got[i].seed == rows[i].seed);
        CHECK(got[i].episode == rows[i].episode);
        CHECK(got[i].steps == rows[i].steps);
        CHECK(got[i].episode_return == rows[i].episode_return);
        CHECK(got[i].solved == rows[i].solved);
        CHECK(got[i].wall_ms == rows[i].wall_ms);
    }

    io::write_text_file(path, "bogus header\n1,2,3\n");
    CHECK_THROWS_AS(io::read_episode_csv(path), ParseError);
    io::write_text_file(path, std::string(io::kEpisodeCsvHeader) +
                                  "\na,1,2,3,4\n");
    CHECK_THROWS_AS(io::read_episode_csv(path), ParseError);
    io::write_text_file(path, std::string(io::kEpisodeCsvHeader) +
                                  "\nid,1,2,3,4.5,2,6\n");
    CHECK_THROWS_AS(io::read_episode_csv(path), ParseError); // solved = 2
    CHECK_THROWS_AS(io::read_episode_csv(dir + "/absent.csv"), Error);
}

TEST_CASE("curve CSV round-trips and split handles empty fields") {
    std::vector<io::CurvePoint> pts;
    for (int i = 0; i < 5; ++i) {
        io::CurvePoint p;
        p.episode = i + 1;
        p.mean_return = -100.0 + 3.7 * i;
        p.std_return = 0.25 * i;
        pts.push_back(p);
    }
    const std::string path = temp_dir("curve") + "/curve.csv";
    io::write_curve_csv(path, pts);
    const auto got = io::read_curve_csv(path);
    REQUIRE(got.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(got[i].episode == pts[i].episode);
        CHECK(got[i].mean_return == pts[i].mean_return);
        CHECK(got[i].std_return == pts[i].std_return);
    }

    const auto f = io::split_csv_line("a,b,,c");
    REQUIRE(f.size() == 4);
    CHECK(f[2].empty());
    CHECK(io::split_csv_line("x").size() == 1);
}

TEST_CASE("summary statistics match hand-computed values") {
    CHECK(stats::mean({1.0, 2.0, 3.0, 4.0}) == 2.5);
    CHECK(stats::stddev({1.0, 2.0, 3.0, 4.0}, 1) ==
          doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(stats::stddev({1.0, 2.0, 3.0, 4.0}, 0) ==
          doctest::Approx(std::sqrt(1.25)));
    CHECK_THROWS_AS(stats::mean({}), DimensionError);
    CHECK_THROWS_AS(stats::stddev({1.0}, 1), DimensionError);
    CHECK_THROWS_AS(stats::stddev({1.0, 2.0}, -1), DimensionError);

    const std::vector<double> sorted{1.0, 2.0, 3.0, 4.0};
    CHECK(stats::quantile_sorted(sorted, 0.0) == 1.0);
    CHECK(stats::quantile_sorted(sorted, 1.0) == 4.0);
    CHECK(stats::quantile_sorted(sorted, 0.5) == 2.5);
    CHECK(stats::quantile_sorted(sorted, 0.25) == 1.75);
    CHECK(stats::quantile_sorted(sorted, 2.0 / 3.0) ==
          doctest::Approx(3.0));
    CHECK_THROWS_AS(stats::quantile_sorted(sorted, -0.1), DimensionError);
    CHECK_THROWS_AS(stats::quantile_sorted(sorted, 1.1), DimensionError);
    CHECK_THROWS_AS(stats::quantile_sorted({}, 0.5), DimensionError);

    const std::vector<double> sample{3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0};
    const auto s = stats::describe(sample);
    CHECK(s.count == 8);
    CHECK(s.mean == doctest::Approx(3.875));
    double acc = 0.0;
    for (double v : sample) {
        acc += (v - 3.875) * (v - 3.875);
    }
    CHECK(s.std == doctest::Approx(std::sqrt(acc / 7.0)));
    CHECK(s.min == 1.0);
    CHECK(s.q25 == doctest::Approx(1.75));
    CHECK(s.q50 == doctest::Approx(3.5));
    CHECK(s.q75 == doctest::Approx(5.25));
    CHECK(s.max == 9.0);
    CHECK_THROWS_AS(stats::describe({}), DimensionError);
}

TEST_CASE("moving averages expand at the head then slide") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    const auto w2 = stats::moving_average(v, 2);
    const std::vector<double> want2{1.0, 1.5, 2.5, 3.5, 4.5};
    CHECK(w2 == want2);
    const auto w3 = stats::moving_average(v, 3);
    const std::vector<double> want3{1.0, 1.5, 2.0, 3.0, 4.0};
    CHECK(w3 == want3);
    const auto w9 = stats::moving_average(v, 9);
    CHECK(w9[4] == doctest::Approx(3.0));
    CHECK_THROWS_AS(stats::moving_average(v, 0), DimensionError);
}

TEST_CASE("convergence triggers at the first qualifying window") {
    ConvergenceCriteria crit;
    crit.reference_mean = -20.0;
    crit.reference_std = 5.0; // band [-25, -20]
    crit.window = 50;
    crit.max_failure_rate = 0.01;
    crit.episode_limit = 200;

    std::vector<sac::EpisodeOutcome> run;
    for (int e = 1; e <= 200; ++e) {
        sac::EpisodeOutcome oc;
        oc.episode = e;
        oc.episode_return = e <= 100 ? -60.0 : -22.0;
        oc.solved = e > 100;
        run.push_back(oc);
    }
    const auto res = convergence_check(run, crit);
    CHECK(res.evaluable);
    CHECK(res.converged);
    // episode 149's window holds one unsolved episode (2% > 1%), so the
    // first clean window ends at episode 150
    CHECK(res.episode == 150);
    CHECK(res.window_mean == doctest::Approx(-22.0));
    CHECK(res.failure_rate == 0.0);
    CHECK(contains(res.detail, "converged at episode 150"));

    // the same run stops qualifying when the limit cuts the sweep short
    crit.episode_limit = 140;
    const auto cut = convergence_check(run, crit);
    CHECK(cut.evaluable);
    CHECK_FALSE(cut.converged);
    CHECK(contains(cut.detail, "not converged"));
}

TEST_CASE("convergence rejects over-performing and flaky runs") {
    ConvergenceCriteria crit;
    crit.reference_mean = -20.0;
    crit.reference_std = 5.0;
    crit.window = 50;
    crit.episode_limit = 300;

    // better than the benchmark band: suspicious, not converged
    std::vector<sac::EpisodeOutcome> good;
    for (int e = 1; e <= 120; ++e) {
        sac::EpisodeOutcome oc;
        oc.episode = e;
        oc.episode_return = -10.0;
        oc.solved = true;
        good.push_back(oc);
    }
    const auto res_good = convergence_check(good, crit);
    CHECK(res_good.evaluable);
    CHECK_FALSE(res_good.converged);

    // right mean, too many failures
    std::vector<sac::EpisodeOutcome> flaky;
    for (int e = 1; e <= 300; ++e) {
        sac::EpisodeOutcome oc;
        oc.episode = e;
        oc.episode_return = -22.0;
        oc.solved = e % 20 != 0;
        flaky.push_back(oc);
    }
    const auto res_flaky = convergence_check(flaky, crit);
    CHECK(res_flaky.evaluable);
    CHECK_FALSE(res_flaky.converged);

    // shorter than the window: not evaluable at all
    flaky.resize(30);
    const auto res_short = convergence_check(flaky, crit);
    CHECK_FALSE(res_short.evaluable);
    CHECK_FALSE(res_short.converged);
    CHECK(contains(res_short.detail, "not evaluable"));

    ConvergenceCriteria bad = crit;
    bad.window = 0;
    CHECK_THROWS_AS(convergence_check(good, bad), ConfigError);
    bad = crit;
    bad.max_failure_rate = 1.5;
    CHECK_THROWS_AS(convergence_check(good, bad), ConfigError);
    bad = crit;
    bad.episode_limit = crit.window - 1;
    CHECK_THROWS_AS(convergence_check(good, bad), ConfigError);
    bad = crit;
    bad.reference_std = -1.0;
    CHECK_THROWS_AS(convergence_check(good, bad), ConfigError);
}

TEST_CASE("preset files are canonical and round-trip through the parser") {
    const std::vector<std::string> presets{
        "full_qsac",
        "qsac_hybrid_actor",
        "qsac_hybrid_actor_reduced_critic",
        "qsac_hybrid_critic",
        "sac_270k",
        "sac_3000",
        "sac_classical",
    };
    for (const auto &name : presets) {
        CAPTURE(name);
        const std::string path = kSourceDir + "/configs/" + name + ".txt";
        const ExperimentConfig cfg = load_config(path);
        CHECK_NOTHROW(cfg.validate());
        const std::string canon = config_to_text(cfg);
        CHECK(canon == io::read_text_file(path));
        const ExperimentConfig again = parse_config_text(canon, name);
        CHECK(again == cfg);
        CHECK(config_to_text(again) == canon);
    }
    const auto a = load_config(kSourceDir + "/configs/sac_classical.txt");
    const auto b = load_config(kSourceDir + "/configs/full_qsac.txt");
    CHECK_FALSE(a == b);
}

TEST_CASE("config parsing pins errors to their source line") {
    auto expect_error = [](const std::string &text,
                           const std::string &fragment) {
        try {
            parse_config_text(text, "mem");
            FAIL_CHECK("expected ConfigError for: " << fragment);
        } catch (const ConfigError &e) {
            CHECK(contains(e.what(), fragment));
            CHECK(contains(e.what(), "mem:"));
        }
    };
    expect_error("x = 1\n", "before any section");
    expect_error("[bogus]\n", "unknown section 'bogus'");
    expect_error("[sac\n", "unterminated");
    expect_error("[sac]\ngamma 0.9\n", "expected 'key = value'");
    expect_error("[sac]\n= 3\n", "empty key");
    expect_error("[sac]\nno_such_knob = 3\n", "no_such_knob");
    // the line number is part of the message
    try {
        parse_config_text("[sac]\ngamma = 0.5\nwhat = 1\n", "mem");
        FAIL_CHECK("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(contains(e.what(), "mem:3"));
    }

    ExperimentConfig cfg = tiny_config();
    cfg.name = "Bad Name";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = tiny_config();
    cfg.n_seeds = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = tiny_config();
    cfg.actor_architecture = "(6,oops)";
    CHECK_THROWS_AS(cfg.validate(), ParseError);
    cfg = tiny_config();
    cfg.sac.gamma = 2.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("finite differences recover analytic gradients") {
    auto f = [](const std::vector<double> &x) {
        return x[0] * x[0] + 3.0 * x[1] + std::sin(x[2]);
    };
    const std::vector<double> x{0.7, -1.2, 0.4};
    const auto g = fd_gradient(f, x, 1e-6);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == doctest::Approx(1.4).epsilon(1e-6));
    CHECK(g[1] == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(g[2] == doctest::Approx(std::cos(0.4)).epsilon(1e-6));
    CHECK_THROWS_AS(fd_gradient(f, x, 0.0), ConfigError);
}

TEST_CASE("the three circuit gradient routes stay in agreement") {
    const auto rep = gradient_triangle(4, 802, 3, 2);
    CHECK(rep.cases == 4);
    CHECK(rep.max_shift_vs_adjoint < 1e-10);
    CHECK(rep.max_adjoint_vs_fd < 1e-6);
    CHECK(rep.max_shift_vs_fd < 1e-6);
    CHECK_THROWS_AS(gradient_triangle(0, 1, 3, 2), ConfigError);
}

TEST_CASE("curve aggregation smooths then averages across seeds") {
    const std::vector<std::vector<double>> returns{
        {10.0, 20.0, 30.0, 40.0, 50.0},
        {0.0, -10.0, 10.0, 20.0},
    };
    const auto curve = aggregate_curves(returns, 2);
    REQUIRE(curve.size() == 4); // truncated to the shorter seed

    const auto ma0 = stats::moving_average(returns[0], 2);
    const auto ma1 = stats::moving_average(returns[1], 2);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].episode == static_cast<int>(i) + 1);
        const double m = 0.5 * (ma0[i] + ma1[i]);
        CHECK(curve[i].mean_return == doctest::Approx(m).epsilon(1e-12));
        const double var = 0.5 * ((ma0[i] - m) * (ma0[i] - m) +
                                  (ma1[i] - m) * (ma1[i] - m));
        CHECK(curve[i].std_return ==
              doctest::Approx(std::sqrt(var)).epsilon(1e-12));
    }

    // empty seeds cannot shape the curve; all-empty input gives no curve
    const auto with_empty = aggregate_curves({{1.0, 2.0}, {}}, 2);
    REQUIRE(with_empty.size() == 2);
    CHECK(with_empty[1].std_return == 0.0);
    CHECK(aggregate_curves({{}, {}}, 2).empty());
}

TEST_CASE("benchmark summaries aggregate episodes faithfully") {
    std::vector<bench::BenchmarkEpisode> eps(3);
    eps[0] = {0.1, -0.2, 10, -3.5, true, 1e-12};
    eps[1] = {0.4, 0.3, 20, -7.0, false, 5e-13};
    eps[2] = {-0.6, 0.1, 30, 1.0, true, 2e-12};
    const BenchmarkStats s = summarize_benchmark(eps);
    CHECK(s.episodes == 3);
    CHECK(s.solve_rate == doctest::Approx(2.0 / 3.0));
    CHECK(s.steps.mean == doctest::Approx(20.0));
    CHECK(s.steps.std == doctest::Approx(10.0));
    CHECK(s.steps.min == 10.0);
    CHECK(s.steps.max == 30.0);
    CHECK(s.episode_return.q25 == doctest::Approx(-5.25));
    CHECK(s.episode_return.q75 == doctest::Approx(-1.25));
    CHECK(s.max_fk_residual == 2e-12);
    CHECK_THROWS_AS(summarize_benchmark({}), DimensionError);

    const std::string text = benchmark_stats_text(s);
    CHECK(contains(text, "solve_rate"));
    CHECK(contains(text, "steps"));

    const std::string path = temp_dir("bench") + "/stats.txt";
    save_benchmark_stats(path, s);
    const BenchmarkStats back = load_benchmark_stats(path);
    CHECK(back.episodes == s.episodes);
    CHECK(back.solve_rate == s.solve_rate);
    CHECK(back.steps.mean == s.steps.mean);
    CHECK(back.steps.q75 == s.steps.q75);
    CHECK(back.episode_return.std == s.episode_return.std);
    CHECK(back.max_fk_residual == s.max_fk_residual);
}

TEST_CASE("curve export truncates to the common range with a warning") {
    CurveSeries a;
    a.name = "alpha";
    for (int i = 0; i < 5; ++i) {
        a.points.push_back({i + 1, -50.0 + i, 1.0});
    }
    CurveSeries b;
    b.name = "beta";
    for (int i = 0; i < 3; ++i) {
        b.points.push_back({i + 1, -40.0 + i, 2.0});
    }

    BenchmarkStats ref;
    ref.episodes = 100;
    ref.episode_return.mean = -56.9;

    std::vector<std::string> warnings;
    const std::string csv = export_curves({a, b}, &ref, &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(contains(warnings[0], "alpha"));

    CHECK(contains(csv, "config_name,episode,mean_return,std_return"));
    CHECK(contains(csv, "alpha,1,"));
    CHECK(contains(csv, "beta,3,"));
    CHECK_FALSE(contains(csv, "alpha,4,")); // truncated
    CHECK(contains(csv, "benchmark,1,-56.9,0"));
    CHECK(contains(csv, "benchmark,3,-56.9,0"));

    CHECK_THROWS_AS(export_curves({}, nullptr, nullptr), ConfigError);
}

TEST_CASE("experiment runs leave a complete, reproducible directory") {
    const ExperimentConfig cfg = tiny_config();
    const std::string dir_a = temp_dir("run_a");
    const std::string dir_b = temp_dir("run_b");

    const ExperimentResult res = run_experiment(cfg, dir_a);
    REQUIRE(res.seeds.size() == 2);
    CHECK(res.out_dir == dir_a);
    for (const auto &s : res.seeds) {
        CHECK(s.episodes == 3);
        CHECK_FALSE(s.diverged);
        CHECK(s.run_id == "harness_probe-s" +
                              std::to_string(s.seed_index));
    }

    // canonical config copy
    CHECK(io::read_text_file(dir_a + "/config.txt") == config_to_text(cfg));

    // per-seed episode logs: 3 rows, wall_ms derived from the step count
    for (int seed = 0; seed < 2; ++seed) {
        const auto rows = io::read_episode_csv(
            dir_a + "/seed_" + std::to_string(seed) + "/episodes.csv");
        REQUIRE(rows.size() == 3);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].episode == static_cast<int>(i) + 1);
            CHECK(rows[i].steps >= 1);
            CHECK(rows[i].steps <= 40);
            CHECK(rows[i].wall_ms ==
                  std::llround(rows[i].steps * 1000.0 / cfg.env.fps));
        }
        // checkpoints at the cadence plus the final one
        CHECK(std::filesystem::exists(dir_a + "/seed_" +
                                      std::to_string(seed) +
                                      "/checkpoint_ep2.txt"));
        CHECK(std::filesystem::exists(dir_a + "/seed_" +
                                      std::to_string(seed) +
                                      "/checkpoint_final.txt"));
    }

    // the aggregated curve equals a recomputation from the episode logs
    const auto curve = io::read_curve_csv(dir_a + "/curve.csv");
    std::vector<std::vector<double>> per_seed;
    for (int seed = 0; seed < 2; ++seed) {
        const auto rows = io::read_episode_csv(
            dir_a + "/seed_" + std::to_string(seed) + "/episodes.csv");
        std::vector<double> r;
        for (const auto &row : rows) {
            r.push_back(row.episode_return);
        }
        per_seed.push_back(std::move(r));
    }
    const auto recomputed = aggregate_curves(per_seed, 20);
    REQUIRE(curve.size() == recomputed.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].mean_return == recomputed[i].mean_return);
        CHECK(curve[i].std_return == recomputed[i].std_return);
    }

    CHECK(contains(io::read_text_file(dir_a + "/manifest.txt"), "seed 0:"));

    // byte-determinism of every data artifact (the manifest is exempt)
    run_experiment(cfg, dir_b);
    for (const std::string rel :
         {std::string("config.txt"), std::string("curve.csv"),
          std::string("seed_0/episodes.csv"),
          std::string("seed_1/episodes.csv"),
          std::string("seed_0/checkpoint_final.txt"),
          std::string("seed_1/checkpoint_ep2.txt")}) {
        CAPTURE(rel);
        CHECK(io::read_text_file(dir_a + "/" + rel) ==
              io::read_text_file(dir_b + "/" + rel));
    }

    // the saved curve reloads under the experiment name
    const CurveSeries series = load_run_curve(dir_a);
    CHECK(series.name == "harness_probe");
    REQUIRE(series.points.size() == curve.size());
    CHECK(series.points[0].mean_return == curve[0].mean_return);

    // a checkpoint rebuilds a runnable greedy policy on its own
    const EvalReport ev = evaluate_checkpoint(
        dir_a + "/seed_0/checkpoint_final.txt", 2, 803);
    CHECK(ev.episodes == 2);
    CHECK(ev.mean_steps >= 1.0);
    CHECK(ev.mean_steps <= 40.0);
    CHECK(ev.mean_return <= 5.0);
    CHECK(ev.solve_rate >= 0.0);
    CHECK(ev.solve_rate <= 1.0);

    // seed overrides trim the run
    RunOptions opts;
    opts.n_seeds_override = 1;
    opts.max_episodes_override = 2;
    const std::string dir_c = temp_dir("run_c");
    const ExperimentResult small = run_experiment(cfg, dir_c, opts);
    REQUIRE(small.seeds.size() == 1);
    CHECK(small.seeds[0].episodes == 2);
}
