// Timing comparison of the serial and OpenMP paths for the two parallel
// kernels: degree-r matrix assembly and sigma-table entry assembly.
//
//   bench_kernels [max_degree] [threads]
//
// max_degree (default 4) bounds the identity-matrix benchmark; threads
// (default 0 = hardware) sets the parallel worker count.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "hopfid/cocycle.hpp"
#include "hopfid/genbase.hpp"
#include "hopfid/hopf.hpp"
#include "hopfid/ident.hpp"
#include "hopfid/parallel.hpp"

using namespace hopfid;

namespace {

double seconds(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    return d.count();
}

void row(const std::string& label, double serial, double parallel) {
    std::printf("%-34s %10.4fs %10.4fs %9.2fx\n", label.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    unsigned max_degree = argc > 1 ? (unsigned)std::atoi(argv[1]) : 4;
    int threads = argc > 2 ? std::atoi(argv[2]) : 0;
    set_threads(threads);
    std::printf("workers: %d\n", thread_count());
    std::printf("%-34s %11s %11s %10s\n", "kernel", "serial", "parallel", "speedup");

    auto q = [](long n) { return FieldScalar::rational(mpq_class(n)); };
    auto cleft = sweedler_cleft(q(1), q(2), q(3));
    for (unsigned r = 2; r <= max_degree; ++r) {
        ExactMatrix serial(0, 0, rationals()), parallel(0, 0, rationals());
        double ts = seconds([&] { serial = degree_matrix(r, cleft, false); });
        double tp = seconds([&] { parallel = degree_matrix(r, cleft, true); });
        bool same = serial.rows() == parallel.rows() && serial.cols() == parallel.cols();
        for (size_t i = 0; same && i < serial.rows(); ++i)
            for (size_t j = 0; same && j < serial.cols(); ++j)
                same = serial.at(i, j) == parallel.at(i, j);
        if (!same) {
            std::fprintf(stderr, "degree_matrix(%u) mismatch between paths\n", r);
            return 1;
        }
        row("degree_matrix r=" + std::to_string(r) + " (A_{1,2,3})", ts, tp);
    }

    std::vector<std::pair<std::string, HopfAlgebra>> hopfs;
    hopfs.emplace_back("sweedler", sweedler());
    hopfs.emplace_back("k[S3]", group_algebra(symmetric_group_3()));
    hopfs.emplace_back("taft(3)", taft(3));
    for (auto& [name, h] : hopfs) {
        auto c = trivial_cocycle(h);
        auto ti = t_inverse(h);
        std::pair<std::vector<std::vector<RatFunc>>, std::vector<std::vector<RatFunc>>> s, p;
        double ts = seconds([&] { s = sigma_entries(h, c, ti, false); });
        double tp = seconds([&] { p = sigma_entries(h, c, ti, true); });
        bool same = true;
        for (size_t i = 0; same && i < h.dim(); ++i)
            for (size_t j = 0; same && j < h.dim(); ++j)
                same = s.first[i][j] == p.first[i][j] && s.second[i][j] == p.second[i][j];
        if (!same) {
            std::fprintf(stderr, "sigma_entries(%s) mismatch between paths\n", name.c_str());
            return 1;
        }
        row("sigma_entries (" + name + ")", ts, tp);
    }
    return 0;
}
