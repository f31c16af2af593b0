// Acceptance suite: one pass/fail line per criterion. Everything is an
// exact, finite check; there are no tolerances anywhere.
#include <chrono>
#include <cstdio>

#include "lgp/checks.hpp"

using namespace lgp;

namespace {

int failures = 0;

void report(int number, const checks::Outcome& out) {
    printf("criterion-%d %-4s %-28s (%ld cases, %ld failures)\n", number,
           out.passed() ? "PASS" : "FAIL", out.name.c_str(), out.cases, out.failures);
    for (const auto& note : out.failure_notes)
        printf("    %s\n", note.c_str());
    fflush(stdout);
    if (!out.passed())
        ++failures;
}

template <typename F> void timed(int number, F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    checks::Outcome out = fn();
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report(number, out);
    printf("    [%lld ms]\n", static_cast<long long>(dt));
}

} // namespace

int main() {
    SolveOptions opt; // default node budget

    timed(1, [&] { return checks::forbidden_configurations(opt); });
    timed(2, [&] { return checks::permitted_types(opt, 9); });
    timed(3, [&] { return checks::decider_equivalence(6, opt); });
    timed(4, [&] { return checks::observation_chains(6, opt); });
    timed(5, [&] { return checks::vertex_edge_duality(7, 5, opt); });
    timed(6, [&] { return checks::line_perfect_routes(7); });
    timed(7, [&] { return checks::heredity(9); });
    timed(8, [&] { return checks::line_graph_recognition(6); });

    if (failures == 0)
        printf("all acceptance criteria passed\n");
    else
        printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
