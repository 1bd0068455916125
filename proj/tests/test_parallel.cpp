#include <omp.h>

#include "doctest.h"
#include "random_inputs.hpp"
#include "tspread/betti.hpp"
#include "tspread/construct.hpp"
#include "tspread/count.hpp"

using namespace tspread;

TEST_SUITE("parallel") {

TEST_CASE("parallel kernels match the serial references") {
  omp_set_num_threads(4);
  gen::Rng rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Context ctx = gen::context(rng, 4, 22, 3);
    const int d = gen::degree(rng, ctx);
    const Monomial u = gen::monomial(rng, d, ctx);
    CHECK(count_t_ss_mon(u, ctx) == serial::count_t_ss_mon(u, ctx));

    std::vector<Monomial> l;
    for (int k = 0; k < 6; ++k) l.push_back(gen::monomial(rng, d, ctx));
    CHECK(t_shadow_set(l, ctx) == serial::t_shadow_set(l, ctx));

    const Context small = gen::context(rng, 4, 10, 3);
    auto I = t_ss_ideal(gen::ideal(rng, small, 5));
    CHECK(graded_betti(I) == serial::graded_betti(I));
  }
}

TEST_CASE("large Borel count is thread-count independent") {
  const Context ctx(30, 2);
  const Monomial u{3, 8, 12, 18, 23, 28};
  const BigInt reference = serial::count_t_ss_mon(u, ctx);
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    CHECK(count_t_ss_mon(u, ctx) == reference);
  }
}

}  // TEST_SUITE
