// Timing comparison between the serial reference kernels and the OpenMP
// paths: dense multiplication, echelon rank, and the bracket-table batch
// used by derived-subalgebra computations.

#include <cstdio>
#include <vector>

#include "rlct/cartan_family.hpp"
#include "rlct/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
#else
#include <chrono>
static double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
#endif

using namespace rlct;

namespace {

FpMat random_matrix(SplitRng& rng, std::size_t n, fp_t p) {
    FpMat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.mod(p);
    return m;
}

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        double t0 = now();
        fn();
        double t1 = now();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

void bench_mul(std::size_t n) {
    SplitRng rng(17);
    FpMat A = random_matrix(rng, n, 3);
    FpMat B = random_matrix(rng, n, 3);
    volatile fp_t sink = 0;
    double ts = time_best_of(3, [&] {
        FpMat C = serial::mat_mul(A, B);
        sink += C.at(0, 0);
    });
    double tp = time_best_of(3, [&] {
        FpMat C = mat_mul(A, B);
        sink += C.at(0, 0);
    });
    std::printf("  mat_mul       n=%-5zu serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                n, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_rank(std::size_t n) {
    SplitRng rng(23);
    FpMat A = random_matrix(rng, n, 3);
    volatile std::size_t sink = 0;
    double ts = time_best_of(3, [&] { sink += serial::rref_rank(A); });
    double tp = time_best_of(3, [&] { sink += rank(A); });
    std::printf("  rref          n=%-5zu serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                n, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_bracket_table_of(const SubalgebraBasis& full, const LieOps& ops,
                            const char* label) {
    // serial reference: pairwise brackets + span, one thread
    double ts = time_best_of(1, [&] {
        SpanBuilder sb(ops.dim, ops.p);
        for (std::size_t i = 0; i < full.dim(); ++i)
            for (std::size_t j = i + 1; j < full.dim(); ++j)
                sb.add(ops.bracket(full.basis_vector(i), full.basis_vector(j)));
    });
    double tp = time_best_of(1, [&] { derived_subalgebra(full, ops); });
    std::printf("  bracket_table %-9s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                label, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_bracket_table(int n, fp_t p) {
    const Ring& R = ring(n, p);
    char label[32];
    std::snprintf(label, sizeof label, "W(%d),p=%u", n, p);
    bench_bracket_table_of(SubalgebraBasis::full("W", witt_dim(R), p), witt_ops(R), label);
}

void bench_bracket_table_hpp4() {
    const Ring& R = ring(4, 3);
    bench_bracket_table_of(annihilator_of_form(CartanKind::H, R), witt_ops(R), "H''(4)");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: both columns run the serial code\n");
#endif
    std::printf("dense F_p kernels:\n");
    for (std::size_t n : {128, 256, 512}) bench_mul(n);
    for (std::size_t n : {256, 512, 1024}) bench_rank(n);
    std::printf("algebra batches:\n");
    bench_bracket_table(3, 3);
    bench_bracket_table(2, 5);
    bench_bracket_table_hpp4();
    return 0;
}
