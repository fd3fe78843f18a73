// Standalone gate runner: one pass/fail line per criterion, nonzero exit on
// any failure. Optional argument selects the cap profile (quick | full).

#include <cstdio>
#include <string>

#include "hankel_lab/acceptance.hpp"

int main(int argc, char** argv) {
    hankel_lab::AcceptanceProfile profile;
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [quick|full]\n", argv[0]);
        return 2;
    }
    if (argc == 2) {
        try {
            profile = hankel_lab::acceptance_profile(argv[1]);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "%s\nusage: %s [quick|full]\n", e.what(), argv[0]);
            return 2;
        }
    }
    int failed = 0;
    for (const auto& c : hankel_lab::run_acceptance(profile)) {
        if (!c.check.pass) ++failed;
        std::printf("criterion %2d %s %s (%.3f ms)\n", c.index,
                    c.check.pass ? "pass" : "FAIL", c.name.c_str(), c.elapsed_ms);
        if (!c.check.pass)
            std::printf("             lhs=%s rhs=%s at %s\n", c.check.lhs.c_str(),
                        c.check.rhs.c_str(), c.check.note.c_str());
        std::fflush(stdout);
    }
    if (failed == 0) {
        std::printf("acceptance: all 12 criteria passed (%s profile)\n", profile.name.c_str());
        return 0;
    }
    std::printf("acceptance: %d of 12 criteria failed (%s profile)\n", failed, profile.name.c_str());
    return 1;
}
