// Compares the serial and OpenMP common-index-jump scans on the bundled
// configs, with a raised N floor so the scan actually has work to do.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgeo/cij.hpp"
#include "cgeo/config.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cgeo;

namespace {

GeodesicConfig load(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

double time_one(const GeodesicConfig& cfg, const CijParams& params, CijTuple& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = params.parallel ? find_tuple(cfg, params) : find_tuple_serial(cfg, params);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench_config(const char* label, const GeodesicConfig& cfg, const Rat& epsilon) {
  CijParams params;
  params.epsilon = epsilon;
  params.N_max = Int(50'000'000);
  CijTuple serial_tuple, parallel_tuple;

  params.parallel = false;
  const double ts = time_one(cfg, params, serial_tuple);
  params.parallel = true;
  const double tp = time_one(cfg, params, parallel_tuple);

  if (serial_tuple.N != parallel_tuple.N) {
    std::printf("%s: MISMATCH serial N=%s parallel N=%s\n", label,
                serial_tuple.N.get_str().c_str(), parallel_tuple.N.get_str().c_str());
    std::exit(1);
  }
  std::printf("%-12s eps=%-8s N=%-12s serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", label,
              epsilon.get_str().c_str(), serial_tuple.N.get_str().c_str(), ts, tp, ts / tp);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "configs";
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  const GeodesicConfig s2 = load(dir + "/s2_sqrt2.json");
  const GeodesicConfig s3 = load(dir + "/s3_katok.json");
  // Tight epsilons push the admissible N far out, which is the regime the
  // parallel scan is for.
  bench_config("s2/sqrt2", s2, Rat(1, 2000));
  bench_config("s2/sqrt2", s2, Rat(1, 20000));
  bench_config("s3/katok", s3, Rat(1, 200));
  bench_config("s3/katok", s3, Rat(1, 1000));
  return 0;
}
