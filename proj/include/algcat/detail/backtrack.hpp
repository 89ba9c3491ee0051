#pragma once

#include <vector>

namespace algcat::detail {

// Depth-first enumeration of maps {0..n_src-1} -> {0..n_tgt-1}, assigning
// images in index order and trying candidate images in increasing order, so
// complete maps are emitted in lexicographic order of their image tuples.
//
// `consistent(f, i)` is called right after f[i] is assigned (entries > i are
// unspecified) and must reject every partial assignment that cannot extend.
// `emit(f)` returns false to stop the search.
template <class Consistent, class Emit>
void backtrack_maps(int n_src, int n_tgt, bool injective, Consistent&& consistent, Emit&& emit) {
    std::vector<int> f(n_src, -1);
    std::vector<bool> used(n_tgt, false);
    bool stop = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n_src) {
            if (!emit(static_cast<const std::vector<int>&>(f))) stop = true;
            return;
        }
        for (int y = 0; y < n_tgt && !stop; ++y) {
            if (injective && used[y]) continue;
            f[i] = y;
            if (consistent(static_cast<const std::vector<int>&>(f), i)) {
                if (injective) used[y] = true;
                self(self, i + 1);
                if (injective) used[y] = false;
            }
        }
        f[i] = -1;
    };
    rec(rec, 0);
}

}  // namespace algcat::detail
