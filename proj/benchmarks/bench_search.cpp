#include "polypart/bounds.hpp"
#include "polypart/io.hpp"
#include "polypart/search.hpp"

#include <benchmark/benchmark.h>

using namespace polypart;

namespace {

GridRegion friedman_region() {
  return parse_grid_file(read_text_file(std::string(POLYPART_DATA_DIR) + "/friedman.grid"));
}

GridTile l_tetromino() {
  return parse_grid_tile_file(
      read_text_file(std::string(POLYPART_DATA_DIR) + "/l_tetromino.grid"));
}

void BM_FriedmanPerfectTiling(benchmark::State& state) {
  GridRegion region = friedman_region();
  GridTile tile = l_tetromino();
  for (auto _ : state) {
    benchmark::DoNotOptimize(perfect_tiling(region, tile, 5, CongruenceMode{true}));
  }
}
BENCHMARK(BM_FriedmanPerfectTiling);

void BM_FriedmanBestPartial(benchmark::State& state) {
  GridRegion region = friedman_region();
  GridTile tile = l_tetromino();
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_partial(region, tile, 5, CongruenceMode{true}));
  }
}
BENCHMARK(BM_FriedmanBestPartial);

void BM_EnumerateTiles(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_tiles(static_cast<int>(state.range(0)),
                                             CongruenceMode{true}));
  }
}
BENCHMARK(BM_EnumerateTiles)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateFeasible(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_feasible(20, 200, 200, 1));
  }
}
BENCHMARK(BM_EnumerateFeasible);

}  // namespace

BENCHMARK_MAIN();
