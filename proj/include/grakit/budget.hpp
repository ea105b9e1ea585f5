#pragma once

#include <chrono>
#include <limits>

#include "grakit/errors.hpp"

namespace grakit {

// Per-task resource budget: wall clock plus a cap on total matrix entries
// touched by basis computations. Checked cooperatively inside the hot loops.
class Budget {
public:
    static Budget unlimited() { return Budget{}; }
    static Budget of(double seconds, long long entry_cap) {
        Budget b;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(seconds));
        b.entry_cap_ = entry_cap;
        b.limited_ = true;
        return b;
    }

    void charge(long long entries) const {
        if (!limited_) return;
        entries_used_ += entries;
        if (entries_used_ > entry_cap_)
            throw resource_error("matrix entry budget exceeded", -1);
        if (++checks_ % 64 == 0 && std::chrono::steady_clock::now() > deadline_)
            throw resource_error("wall-clock budget exceeded", -1);
    }

private:
    std::chrono::steady_clock::time_point deadline_{};
    long long entry_cap_ = std::numeric_limits<long long>::max();
    mutable long long entries_used_ = 0;
    mutable long long checks_ = 0;
    bool limited_ = false;
};

}  // namespace grakit
