#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "polylab/error.hpp"
#include "polylab/parallel.hpp"
#include "polylab/suites.hpp"

using namespace polylab;

TEST_CASE("parallel_for covers every index once") {
  for (std::size_t n : {0u, 1u, 7u, 1000u}) {
    std::vector<std::atomic<int>> hits(n);
    parallel_for(n, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 6) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

TEST_CASE("worker count honours OA_POLYLAB_THREADS") {
  ::setenv("OA_POLYLAB_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("OA_POLYLAB_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("OA_POLYLAB_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("tolerance overrides") {
  Tolerances t;
  CHECK(t.get("pythagoras") == 1e-8);
  t.set_from_string("pythagoras=1e-30");
  CHECK(t.get("pythagoras") == 1e-30);
  CHECK_THROWS_AS(t.get("nope"), UsageError);
  CHECK_THROWS_AS(t.set_from_string("nope=1"), UsageError);
  CHECK_THROWS_AS(t.set_from_string("pythagoras"), UsageError);
  CHECK_THROWS_AS(t.set_from_string("pythagoras=abc"), UsageError);
  CHECK_THROWS_AS(t.set_from_string("pythagoras=-1"), UsageError);
}

TEST_CASE("suite registry") {
  CHECK(is_known_suite("all"));
  CHECK(is_known_suite("rigidity"));
  CHECK_FALSE(is_known_suite("bogus"));
  SuiteConfig c;
  CHECK_THROWS_AS(run_suite("bogus", c), UsageError);

  c.samples = 5;
  const auto results = run_suite("representation", c);
  CHECK(results.size() == 7);
  for (const PropertyResult& r : results) {
    CHECK(r.cases == 5);
    CHECK(r.passed());
  }
}

TEST_CASE("suites are independent of the worker count") {
  SuiteConfig c;
  c.samples = 12;
  ::setenv("OA_POLYLAB_THREADS", "1", 1);
  const auto serial = run_suite("metrics", c);
  ::setenv("OA_POLYLAB_THREADS", "4", 1);
  const auto threaded = run_suite("metrics", c);
  ::unsetenv("OA_POLYLAB_THREADS");
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].worst == threaded[i].worst);
    CHECK(serial[i].failures == threaded[i].failures);
  }
}

TEST_CASE("an unattainable tolerance fails its property") {
  SuiteConfig c;
  c.samples = 10;
  c.tol.set("pythagoras", 1e-30);
  const PropertyResult r = properties::pythagoras(c);
  CHECK_FALSE(r.passed());
}
