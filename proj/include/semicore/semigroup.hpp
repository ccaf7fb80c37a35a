#pragma once

#include <utility>
#include <vector>

namespace semicore {

/// A numerical semigroup H = <a_1, ..., a_v> with gcd 1. Invariants are
/// computed once at construction; the object is immutable afterwards.
class NumericalSemigroup {
public:
    /// Errc::InvalidArgument for an empty or nonpositive generator list,
    /// Errc::GcdNotOne when the generators share a factor.
    explicit NumericalSemigroup(std::vector<int> generators);

    const std::vector<int>& generators() const noexcept { return generators_; }
    const std::vector<int>& minimal_generators() const noexcept { return minimal_; }
    /// mu(H), the size of the minimal generating set.
    int embedding_dimension() const noexcept { return static_cast<int>(minimal_.size()); }

    bool contains(long long m) const;

    /// Least c with every m >= c in H (0 when H is all of N).
    int conductor() const noexcept { return conductor_; }
    int frobenius() const noexcept { return conductor_ - 1; }
    /// min(H \ {0}).
    int multiplicity() const noexcept { return minimal_.front(); }
    const std::vector<int>& gaps() const noexcept { return gaps_; }
    /// Elements of H in [lo, hi], ascending.
    std::vector<int> elements(int lo, int hi) const;

    /// Smallest element of H in each residue class mod m, ascending.
    /// Errc::NotInSemigroup unless m is a positive element of H.
    std::vector<int> apery(int m) const;

    /// Lexicographically smallest (a, b), 0 < a < b both in H, with gcd(a, b) = 1.
    std::pair<int, int> coprime_pair() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.minimal_ == b.minimal_;
    }

private:
    std::vector<int> generators_;
    std::vector<int> minimal_;
    std::vector<char> member_;  // membership for [0, conductor)
    std::vector<int> gaps_;
    int conductor_ = 0;
};

}  // namespace semicore
