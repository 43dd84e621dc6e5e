#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <numeric>
#include <vector>

#include "qaw/parallel.hpp"

using namespace qaw;

TEST_CASE("parallel_for visits every index once") {
  for (ExecPolicy pol : {ExecPolicy::Serial, ExecPolicy::Parallel}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; }, pol);
    for (auto& h : hits) CHECK(h.load() == 1);
  }
  CHECK(max_threads() >= 1);
}

TEST_CASE("parallel_map keeps input order") {
  const auto v = parallel_map<std::size_t>(500, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
  CHECK(parallel_map<int>(0, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("exceptions leave the parallel region") {
  CHECK_THROWS_AS(parallel_for(100, [](std::size_t i) {
    if (i == 57) throw std::runtime_error("boom");
  }),
                  std::runtime_error);
}
