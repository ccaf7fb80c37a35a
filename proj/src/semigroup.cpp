#include "semicore/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semicore/error.hpp"

namespace semicore {

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw Error(Errc::InvalidArgument, "empty generator list");
    for (int a : generators_) {
        if (a <= 0) throw Error(Errc::InvalidArgument, "generator " + std::to_string(a) + " is not positive");
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

    int g = 0;
    for (int a : generators_) g = std::gcd(g, a);
    if (g != 1) throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(g));

    // Grow the membership table until `e` consecutive members appear; from
    // there on every integer is reachable by adding copies of e.
    const int e = generators_.front();
    std::vector<char> table{1};
    int run = 1;
    int n = 0;
    while (run < e) {
        ++n;
        char in = 0;
        for (int a : generators_) {
            if (a <= n && table[static_cast<std::size_t>(n - a)]) {
                in = 1;
                break;
            }
        }
        table.push_back(in);
        run = in ? run + 1 : 0;
    }
    conductor_ = n - e + 1;
    if (e == 1) conductor_ = 0;
    table.resize(static_cast<std::size_t>(conductor_));
    member_ = std::move(table);
    for (int m = 0; m < conductor_; ++m) {
        if (!member_[static_cast<std::size_t>(m)]) gaps_.push_back(m);
    }

    // h is a minimal generator iff it is not h' + h'' with both nonzero members.
    for (int h : generators_) {
        bool decomposable = false;
        for (int x = 1; x <= h / 2 && !decomposable; ++x) {
            decomposable = contains(x) && contains(h - x);
        }
        if (!decomposable) minimal_.push_back(h);
    }
}

bool NumericalSemigroup::contains(long long m) const {
    if (m < 0) return false;
    if (m >= conductor_) return true;
    return member_[static_cast<std::size_t>(m)] != 0;
}

std::vector<int> NumericalSemigroup::elements(int lo, int hi) const {
    std::vector<int> out;
    for (int m = std::max(lo, 0); m <= hi; ++m) {
        if (contains(m)) out.push_back(m);
    }
    return out;
}

std::vector<int> NumericalSemigroup::apery(int m) const {
    if (m <= 0 || !contains(m)) throw Error(Errc::NotInSemigroup, std::to_string(m) + " is not a positive element");
    std::vector<int> smallest(static_cast<std::size_t>(m), -1);
    int found = 0;
    for (int h = 0; found < m; ++h) {
        if (!contains(h)) continue;
        int& slot = smallest[static_cast<std::size_t>(h % m)];
        if (slot < 0) {
            slot = h;
            ++found;
        }
    }
    std::sort(smallest.begin(), smallest.end());
    return smallest;
}

std::pair<int, int> NumericalSemigroup::coprime_pair() const {
    // Both entries of the lexicographically least pair are below conductor + 2:
    // the conductor run contains two consecutive (hence coprime) integers.
    for (int a = 1;; ++a) {
        if (!contains(a)) continue;
        for (int b = a + 1; b <= a + conductor_ + 2 + a; ++b) {
            if (contains(b) && std::gcd(a, b) == 1) return {a, b};
        }
    }
}

}  // namespace semicore
