#include <atomic>
#include <stdexcept>
#include <vector>

#include "affqha/parallel.hpp"
#include "affqha/wigner.hpp"
#include "common.hpp"

using namespace testing;

namespace {

struct WorkerGuard {
  int saved = worker_count();
  ~WorkerGuard() { set_worker_count(saved); }
};

}  // namespace

TEST_SUITE("parallel") {
  TEST_CASE("every index runs exactly once") {
    WorkerGuard guard;
    for (int workers : {1, 2, 3, 7}) {
      set_worker_count(workers);
      std::vector<std::atomic<int>> hits(101);
      parallel_for(101, [&](int i) { hits[static_cast<std::size_t>(i)]++; });
      for (const auto& h : hits) CHECK(h.load() == 1);
    }
    parallel_for(0, [](int) { FAIL("no work expected"); });
  }

  TEST_CASE("exceptions reach the caller") {
    WorkerGuard guard;
    set_worker_count(3);
    CHECK_THROWS_AS(parallel_for(10, [](int i) {
                      if (i == 7) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
  }

  TEST_CASE("results do not depend on the worker count") {
    WorkerGuard guard;
    const Signal psi = laguerre_signal(log_grid(), 0, 1.0);
    const AffGrid g = aligned_aff_grid(log_grid(), 4.0, 65, 2.0, 8);
    set_worker_count(1);
    const CMatrix a = affine_wigner(psi, psi, g).value.values();
    set_worker_count(4);
    const CMatrix b = affine_wigner(psi, psi, g).value.values();
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  }
}
