#include <cmath>

#include "doctest.h"
#include "wscatter/oracles.hpp"
#include "wscatter/resonance.hpp"

using namespace wscatter;

namespace {

ModelFactory sech2_factory() {
  return [](double v0) { return PotentialModel::sech2_well(v0); };
}

ModelFactory gaussian_factory() {
  return [](double v0) { return PotentialModel::gaussian_barrier(v0); };
}

}  // namespace

TEST_CASE("scanning the free potential gives T = 1 everywhere") {
  const auto r = scan_epsilon(PotentialModel::free(), 0.5, 2.0, 16);
  REQUIRE(r.points.size() == 16);
  CHECK(r.points.front().axis_value == 0.5);
  CHECK(r.points.back().axis_value == 2.0);
  for (const auto& p : r.points) {
    REQUIRE(p.status == "ok");
    CHECK(std::abs(p.outcome->transmission - 1.0) < 1e-9);
  }
}

TEST_CASE("evanescent points are tagged, not fatal") {
  const auto r =
      scan_epsilon(PotentialModel::step(0.0, -3.0), -0.5, 0.5, 11);
  int ok = 0, ev = 0;
  for (const auto& p : r.points) {
    if (p.status == "ok") {
      ++ok;
      CHECK(p.outcome.has_value());
    } else {
      CHECK(p.status == "evanescent");
      CHECK_FALSE(p.outcome.has_value());
      ++ev;
    }
  }
  CHECK(ok > 0);
  CHECK(ev > 0);
}

TEST_CASE("a scan where every point fails raises AllPointsFailed") {
  CHECK_THROWS_AS(
      scan_epsilon(PotentialModel::step(0.0, 5.0), 0.5, 4.0, 8),
      AllPointsFailed);
}

TEST_CASE("serial and parallel scans agree bit for bit") {
  IntegrationConfig cfg;
  PlateauConfig pcfg;
  const auto eval = [&](double eps) {
    return scatter(PotentialModel::gaussian_well(3.0), eps, cfg, pcfg);
  };
  const auto serial = run_scan_serial(ScanAxis::Epsilon, 0.3, 3.0, 24, eval);
  const auto parallel = run_scan(ScanAxis::Epsilon, 0.3, 3.0, 24, eval, 4);
  REQUIRE(serial.points.size() == parallel.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(serial.points[i].axis_value == parallel.points[i].axis_value);
    CHECK(serial.points[i].status == parallel.points[i].status);
    CHECK(serial.points[i].outcome->transmission ==
          parallel.points[i].outcome->transmission);
    CHECK(serial.points[i].outcome->reflection ==
          parallel.points[i].outcome->reflection);
  }
}

TEST_CASE("find_peaks keeps only near-unity interior maxima") {
  // monotone transmission: a barrier growing in height only blocks more
  const auto flat = scan_v0(gaussian_factory(), 1.0, 0.5, 3.0, 12);
  CHECK(find_peaks(flat, 0.0).empty());

  const auto scan = scan_v0(sech2_factory(), 0.5, 0.5, 4.0, 60);
  const auto peaks = find_peaks(scan, 0.99);
  REQUIRE(peaks.size() == 2);
  CHECK(std::abs(peaks[0].mid - 1.0) < 0.2);
  CHECK(std::abs(peaks[1].mid - 3.0) < 0.2);
  for (const auto& b : peaks) {
    CHECK(b.lo < b.mid);
    CHECK(b.mid < b.hi);
    CHECK(b.t_mid >= 0.99);
  }
}

TEST_CASE("refine_peak locates the reflectionless depths") {
  const auto p1 = refine_peak(sech2_factory(), 0.5,
                              PeakBracket{0.6, 0.9, 1.4, 0.0}, 1e-4);
  CHECK(std::abs(p1.v0 - 1.0) <= 1e-3);
  CHECK(p1.transmission > 0.9999);
  CHECK(p1.half_width <= 1e-4);
  CHECK(p1.epsilon == 0.5);

  const auto p3 = refine_peak(sech2_factory(), 0.5,
                              PeakBracket{2.5, 2.9, 3.5, 0.0}, 1e-4);
  CHECK(std::abs(p3.v0 - 3.0) <= 1e-3);
}

TEST_CASE("refine_peak rejects broken brackets") {
  CHECK_THROWS_AS(refine_peak(sech2_factory(), 0.5,
                              PeakBracket{1.4, 0.9, 0.6, 0.0}, 1e-4),
                  BracketLost);
  // monotone slope: the midpoint is not a maximum
  CHECK_THROWS_AS(refine_peak(gaussian_factory(), 1.0,
                              PeakBracket{1.0, 2.0, 3.0, 0.0}, 1e-3),
                  BracketLost);
}
