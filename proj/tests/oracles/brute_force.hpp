#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

// Counting oracles that enumerate all permutations.
namespace oracle {

inline std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool involutive(const std::vector<int> &p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[static_cast<std::size_t>(p[i])] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

inline long count_involutions(int n, bool fixed_point_free)
{
    long count = 0;
    for (const auto &p : permutations(n)) {
        if (!involutive(p)) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && fixed_point_free; ++i) {
            ok = ok && p[i] != static_cast<int>(i);
        }
        count += ok ? 1 : 0;
    }
    return count;
}

// All symmetric nonnegative matrices with row sums parts[i] and even diagonal,
// by scanning every upper triangle with entries in [0, 2].
inline std::vector<std::vector<std::vector<int>>> brute_force_J(const std::vector<int> &parts)
{
    const std::size_t r = parts.size();
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            cells.emplace_back(i, j);
        }
    }
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> digits(cells.size(), 0);
    for (;;) {
        std::vector<std::vector<int>> S(r, std::vector<int>(r, 0));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            S[cells[c].first][cells[c].second] = digits[c];
            S[cells[c].second][cells[c].first] = digits[c];
        }
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            ok = S[i][i] % 2 == 0 && std::accumulate(S[i].begin(), S[i].end(), 0) == parts[i];
        }
        if (ok) {
            out.push_back(S);
        }
        std::size_t c = 0;
        while (c < digits.size() && digits[c] == 2) {
            digits[c++] = 0;
        }
        if (c == digits.size()) {
            break;
        }
        ++digits[c];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
