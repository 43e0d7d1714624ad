#include <polarstroke/polarstroke.hpp>

#include "corpus.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace polarstroke;
using polarstroke::testing::Corpus;
using polarstroke::testing::kDegree;

namespace {

std::vector<PathSegment> segments(SegmentKind kind, int n) {
    Corpus corpus(42);
    std::vector<PathSegment> out;
    for (int i = 0; i < n; ++i) out.push_back(corpus.of_kind(kind));
    return out;
}

StrokeStyle style(double w, double q_deg) {
    StrokeStyle s;
    s.width = w;
    s.quality = q_deg * kDegree;
    return s;
}

void BM_SplitSegment(benchmark::State& state) {
    const auto segs = segments(static_cast<SegmentKind>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(split_segment(segs[i++ % segs.size()]));
}
BENCHMARK(BM_SplitSegment)->DenseRange(1, 3);

void BM_TessellateCubic(benchmark::State& state) {
    const auto segs = segments(SegmentKind::Cubic, 64);
    const StrokeStyle st = style(10, static_cast<double>(state.range(0)));
    std::size_t i = 0;
    std::size_t ribs = 0;
    for (auto _ : state) {
        const Quadrangulation q = tessellate_path(Path({segs[i++ % segs.size()]}), st);
        ribs += q.ribs.size();
    }
    state.counters["ribs/s"] = benchmark::Counter(static_cast<double>(ribs), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_TessellateCubic)->Arg(1)->Arg(4)->Arg(15);

void BM_FindOffsetCusps(benchmark::State& state) {
    const auto segs = segments(static_cast<SegmentKind>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(find_offset_cusps(segs[i++ % segs.size()], 25.0));
}
BENCHMARK(BM_FindOffsetCusps)->DenseRange(1, 3);

void BM_CuspThresholdWidth(benchmark::State& state) {
    const auto segs = segments(SegmentKind::Cubic, 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(cusp_threshold_width(segs[i++ % segs.size()], Branch::Positive));
}
BENCHMARK(BM_CuspThresholdWidth);

void BM_AuditMixed(benchmark::State& state) {
    Corpus corpus(7);
    std::vector<std::pair<Path, StrokeStyle>> cases;
    for (int i = 0; i < 64; ++i) cases.emplace_back(Path({corpus.mixed(static_cast<std::size_t>(i))}), corpus.style());
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [path, st] = cases[i++ % cases.size()];
        benchmark::DoNotOptimize(audit(path, st));
    }
}
BENCHMARK(BM_AuditMixed);

} // namespace

BENCHMARK_MAIN();
