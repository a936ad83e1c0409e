#include "loopchar/orbits.hpp"

#include <algorithm>
#include <sstream>

namespace loopchar {

std::string MonomialOrbit::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i) os << ";";
        for (size_t a = 0; a < exps[i].size(); ++a) {
            if (a) os << ",";
            os << exps[i][a];
        }
    }
    os << "]";
    return os.str();
}

MonomialOrbit orbit_of(const VarLayout& layout, const ExpVec& e) {
    MonomialOrbit o;
    o.exps.resize(static_cast<size_t>(layout.rank()));
    for (int i = 0; i < layout.rank(); ++i) {
        auto& col = o.exps[static_cast<size_t>(i)];
        col.resize(static_cast<size_t>(layout.ambient()[i]));
        for (int a = 0; a < layout.ambient()[i]; ++a)
            col[static_cast<size_t>(a)] = e[static_cast<size_t>(layout.index(i, a))];
        std::sort(col.begin(), col.end());
    }
    return o;
}

ExpVec representative(const VarLayout& layout, const MonomialOrbit& o) {
    ExpVec e(static_cast<size_t>(layout.count()), 0);
    for (int i = 0; i < layout.rank(); ++i)
        for (size_t a = 0; a < o.exps[static_cast<size_t>(i)].size(); ++a)
            e[static_cast<size_t>(layout.index(i, static_cast<int>(a)))] =
                o.exps[static_cast<size_t>(i)][a];
    return e;
}

namespace {

struct Enumerator {
    const DegreeVector& n;
    const std::vector<int>& lower;
    const std::vector<int>* upper;
    const std::vector<PrefixConstraint>& constraints;
    std::vector<MonomialOrbit> out;
    MonomialOrbit work;

    // Minimal possible sum contribution of colors >= i.
    long min_tail(size_t i) const {
        long s = 0;
        for (size_t j = i; j < n.size(); ++j) s += static_cast<long>(n[j]) * lower[j];
        return s;
    }

    void run(long total) {
        work.exps.assign(n.size(), {});
        color(0, total);
    }

    void color(size_t i, long remaining) {
        if (i == n.size()) {
            if (remaining != 0) return;
            for (const auto& c : constraints)
                if (!c.satisfied_by(work)) return;
            out.push_back(work);
            return;
        }
        work.exps[i].assign(static_cast<size_t>(n[i]), 0);
        entry(i, 0, lower[i], remaining);
    }

    void entry(size_t i, int slot, int at_least, long remaining) {
        if (slot == n[i]) {
            color(i + 1, remaining);
            return;
        }
        // Entries ascend within a color; each later entry in this color is at
        // least the current one, and later colors contribute min_tail.
        long later_min = min_tail(i + 1);
        int slots_left = n[i] - slot;
        for (int v = at_least;; ++v) {
            if (upper && v > (*upper)[i]) break;
            long lo_with_v = static_cast<long>(v) * slots_left + later_min;
            if (lo_with_v > remaining) break;  // v already too large
            work.exps[i][static_cast<size_t>(slot)] = v;
            entry(i, slot + 1, v, remaining - v);
        }
    }
};

}  // namespace

std::vector<MonomialOrbit> orbit_enumerate(const DegreeVector& n, long total_degree,
                                           const std::optional<std::vector<int>>& lower,
                                           const std::vector<PrefixConstraint>& constraints,
                                           const std::optional<std::vector<int>>& upper) {
    require(lower.has_value(), ErrorCode::InfinitePolytope,
            "orbit enumeration needs per-variable lower bounds");
    require(lower->size() == n.size(), ErrorCode::InternalError, "lower bound arity mismatch");
    Enumerator en{n, *lower, upper ? &*upper : nullptr, constraints, {}, {}};
    en.run(total_degree);
    std::sort(en.out.begin(), en.out.end());
    return en.out;
}

}  // namespace loopchar
