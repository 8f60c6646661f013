#pragma once

#include <cstddef>
#include <vector>

namespace nonrep {

/// Length-n prefix of the fixed point of 0->012, 1->02, 2->1 starting at 0.
/// The fixed point is square-free over {0,1,2}.
inline std::vector<int> thue_sequence(int n) {
    std::vector<int> s;
    if (n <= 0) return s;
    s.push_back(0);
    // The morphism is prolongable on 0, so rewriting in place converges to
    // the fixed point prefix.
    while (static_cast<int>(s.size()) < n) {
        std::vector<int> next;
        next.reserve(s.size() * 3);
        for (int c : s) {
            switch (c) {
                case 0: next.push_back(0); next.push_back(1); next.push_back(2); break;
                case 1: next.push_back(0); next.push_back(2); break;
                default: next.push_back(1); break;
            }
        }
        s = std::move(next);
    }
    s.resize(n);
    return s;
}

/// Exhaustive scan for a factor XX.
inline bool is_square_free(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    for (int t = 1; 2 * t <= n; ++t)
        for (int i = 0; i + 2 * t <= n; ++i) {
            bool square = true;
            for (int j = 0; j < t; ++j)
                if (s[i + j] != s[i + t + j]) { square = false; break; }
            if (square) return false;
        }
    return true;
}

}  // namespace nonrep
