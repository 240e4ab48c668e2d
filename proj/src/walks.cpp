#include "trispec/walks.hpp"

#include <cstdlib>
#include <functional>

namespace trispec {

std::vector<int> Walk::partial_sums() const {
    std::vector<int> d;
    d.reserve(signs.size());
    int s = 0;
    for (signed char e : signs) d.push_back(s += e);
    return d;
}

std::vector<int> Walk::vertices() const {
    std::vector<int> v{start};
    v.reserve(signs.size() + 1);
    for (signed char e : signs) v.push_back(v.back() + e);
    return v;
}

std::vector<int> Walk::up_step_origins() const {
    std::vector<int> out;
    int at = start;
    for (signed char e : signs) {
        if (e > 0) out.push_back(at);
        at += e;
    }
    return out;
}

std::vector<Walk> first_return_walks(int n, int length) {
    std::vector<Walk> out;
    if (length < 2 || length % 2 != 0 || n < 1) return out;
    Walk w;
    w.start = n;
    w.signs.resize(length);
    std::function<void(int, int)> extend = [&](int step, int delta) {
        const int remaining = length - step;
        if (remaining == 0) {
            if (delta == 0) out.push_back(w);
            return;
        }
        for (signed char e : {static_cast<signed char>(1), static_cast<signed char>(-1)}) {
            const int nd = delta + e;
            const int left = remaining - 1;
            if (n + nd < 1) continue;
            if (std::abs(nd) > left) continue;
            if (nd == 0 && left > 0) continue;
            w.signs[step] = e;
            extend(step + 1, nd);
        }
    };
    extend(0, 0);
    return out;
}

std::vector<Walk> crossing_walks(int n, int k) {
    std::vector<Walk> out;
    if (k < 2 || k % 2 != 0 || n < 1) return out;
    for (int j = std::max(1, n + 1 - k / 2); j <= n + k / 2; ++j) {
        Walk w;
        w.start = j;
        w.signs.resize(k);
        std::function<void(int, int, bool, bool)> extend = [&](int step, int at, bool low, bool high) {
            const int remaining = k - step;
            if (remaining == 0) {
                if (at == j && low && high) out.push_back(w);
                return;
            }
            for (signed char e : {static_cast<signed char>(1), static_cast<signed char>(-1)}) {
                const int next = at + e;
                if (next < 1 || std::abs(next - j) > remaining - 1) continue;
                w.signs[step] = e;
                extend(step + 1, next, low || next <= n, high || next >= n + 1);
            }
        };
        extend(0, j, j <= n, j >= n + 1);
    }
    return out;
}

} // namespace trispec
