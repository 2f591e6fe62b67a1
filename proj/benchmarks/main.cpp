#include <benchmark/benchmark.h>

// Own main: the distro's libbenchmark_main.a carries LTO bytecode from another GCC release.
BENCHMARK_MAIN();
