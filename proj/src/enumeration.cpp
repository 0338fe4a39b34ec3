#include "matspl/enumeration.hpp"

#include <algorithm>

namespace matspl::enumeration {

void for_each_matroid(const GroundSet& ground, const std::function<void(const Matroid&)>& visit) {
    const int n = ground.size();
    if (n > 6) throw SizeCapExceeded("exhaustive matroid enumeration beyond 6 elements");
    const Mask full = ground.full();
    const size_t count = size_t{1} << n;

    std::vector<Mask> order;
    order.reserve(count);
    for (int k = 0; k <= n; ++k)
        for (Mask x = 0; ; ++x) {
            if (popcount(x) == k) order.push_back(x);
            if (x == full) break;
        }

    std::vector<int> r(count, -1);
    r[0] = 0;
    auto dfs = [&](auto&& self, size_t pos) -> void {
        if (pos == count) {
            std::vector<std::uint8_t> table(count);
            for (size_t i = 0; i < count; ++i) table[i] = static_cast<std::uint8_t>(r[i]);
            visit(Matroid::unchecked(ground, std::move(table)));
            return;
        }
        Mask x = order[pos];
        int lo = 0, hi = popcount(x);
        Mask bits = x;
        while (bits) {
            Mask bit = bits & (0u - bits);
            lo = std::max(lo, r[x & ~bit]);
            hi = std::min(hi, r[x & ~bit] + 1);
            bits &= bits - 1;
        }
        for (int v = lo; v <= hi; ++v) {
            bool ok = true;
            Mask eb = x;
            while (eb && ok) {
                Mask e = eb & (0u - eb);
                Mask fb = eb & (eb - 1);
                while (fb) {
                    Mask f = fb & (0u - fb);
                    if (r[x & ~e] + r[x & ~f] < v + r[x & ~e & ~f]) { ok = false; break; }
                    fb &= fb - 1;
                }
                eb &= eb - 1;
            }
            if (!ok) continue;
            r[x] = v;
            self(self, pos + 1);
            r[x] = -1;
        }
    };
    dfs(dfs, 1);
}

std::vector<Matroid> all_matroids(const GroundSet& ground) {
    std::vector<Matroid> out;
    for_each_matroid(ground, [&](const Matroid& m) { out.push_back(m); });
    return out;
}

}  // namespace matspl::enumeration
