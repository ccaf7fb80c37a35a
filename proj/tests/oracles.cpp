#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Vec dense(const Poly& p, int len) {
    Vec v(static_cast<std::size_t>(len), p.field().zero());
    for (int i = 0; i <= p.degree() && i < len; ++i) v[static_cast<std::size_t>(i)] = p.coeff(i);
    return v;
}

namespace {

// Row echelon form with pivots chosen from the highest column down.
// Returns pivot columns, rows reordered so row i has pivot piv[i].
std::vector<int> eliminate_top_down(std::vector<Vec>& rows) {
    std::vector<int> piv;
    if (rows.empty()) return piv;
    const int len = static_cast<int>(rows.front().size());
    std::size_t next = 0;
    for (int col = len - 1; col >= 0 && next < rows.size(); --col) {
        std::size_t found = next;
        while (found < rows.size() && rows[found][static_cast<std::size_t>(col)].is_zero()) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        const Scalar inv = rows[next][static_cast<std::size_t>(col)].inverse();
        for (auto& x : rows[next]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            const Scalar c = rows[r][static_cast<std::size_t>(col)];
            if (c.is_zero()) continue;
            for (int j = 0; j < len; ++j) rows[r][static_cast<std::size_t>(j)] -= c * rows[next][static_cast<std::size_t>(j)];
        }
        piv.push_back(col);
        ++next;
    }
    return piv;
}

}  // namespace

int rank(const Field&, std::vector<Vec> rows) { return static_cast<int>(eliminate_top_down(rows).size()); }

int dim_low_part(const Field&, std::vector<Vec> rows, int cut) {
    const std::vector<int> piv = eliminate_top_down(rows);
    return static_cast<int>(std::count_if(piv.begin(), piv.end(), [cut](int c) { return c <= cut; }));
}

bool in_span(const Field& k, const std::vector<Vec>& rows, const Vec& v) {
    std::vector<Vec> with = rows;
    with.push_back(v);
    return rank(k, rows) == rank(k, with);
}

namespace {

bool member_memo(const std::vector<int>& gens, int m, std::vector<signed char>& memo) {
    if (m == 0) return true;
    if (memo[static_cast<std::size_t>(m)] >= 0) return memo[static_cast<std::size_t>(m)] != 0;
    bool found = false;
    for (int g : gens) {
        if (g <= m && member_memo(gens, m - g, memo)) {
            found = true;
            break;
        }
    }
    memo[static_cast<std::size_t>(m)] = found ? 1 : 0;
    return found;
}

}  // namespace

bool semigroup_member(const std::vector<int>& gens, int m) {
    if (m < 0) return false;
    std::vector<signed char> memo(static_cast<std::size_t>(m) + 1, -1);
    return member_memo(gens, m, memo);
}

int semigroup_conductor(const std::vector<int>& gens) {
    const int e = *std::min_element(gens.begin(), gens.end());
    if (e == 1) return 0;
    int run = 0;
    for (int m = 1;; ++m) {
        run = semigroup_member(gens, m) ? run + 1 : 0;
        if (run == e) return m - e + 1;
    }
}

Poly inverse_by_solve(const Poly& f, int ell) {
    const Field k = f.field();
    const std::size_t n = static_cast<std::size_t>(ell);
    // Augmented matrix [A | e0], A[i][j] = a_{i-j}.
    std::vector<Vec> a(n, Vec(n + 1, k.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) a[i][j] = f.coeff(static_cast<int>(i - j));
    }
    a[0][n] = k.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (a[p][col].is_zero()) ++p;
        std::swap(a[p], a[col]);
        const Scalar inv = a[col][col].inverse();
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Scalar c = a[r][col];
            for (std::size_t j = 0; j <= n; ++j) a[r][j] -= c * a[col][j];
        }
    }
    Vec g(n, k.zero());
    for (std::size_t i = 0; i < n; ++i) g[i] = a[i][n];
    return Poly(k, g);
}

bool in_semigroup_ring(const std::vector<int>& gens, const Poly& f) {
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_zero() && !semigroup_member(gens, i)) return false;
    }
    return true;
}

bool in_explicit_core(int c0, const std::vector<Poly>& gens, const Poly& f) {
    const Field k = f.field();
    std::vector<Vec> rows{dense(Poly::constant(k.one()), c0)};
    // Depth-first over exponent vectors with total order < c0.
    std::vector<std::pair<Poly, std::size_t>> stack{{Poly::constant(k.one()), 0}};
    while (!stack.empty()) {
        auto [prod, start] = stack.back();
        stack.pop_back();
        for (std::size_t i = start; i < gens.size(); ++i) {
            const Poly next = (prod * gens[i]).truncated(c0);
            if (next.is_zero()) continue;
            rows.push_back(dense(next, c0));
            stack.emplace_back(next, i);
        }
    }
    return in_span(k, rows, dense(f.truncated(c0), c0));
}

int dim_phiS_cap_kH(const std::vector<int>& gens, const Poly& phi, int bound) {
    const Field k = phi.field();
    const int free = bound - phi.degree() + 1;
    if (free <= 0) return 0;
    std::vector<int> gaps;
    for (int m = 0; m <= bound; ++m) {
        if (!semigroup_member(gens, m)) gaps.push_back(m);
    }
    // Constraint matrix: rows = gaps, columns = s_j.
    std::vector<Vec> cons;
    for (int gap : gaps) {
        Vec row(static_cast<std::size_t>(free), k.zero());
        for (int j = 0; j < free; ++j) row[static_cast<std::size_t>(j)] = phi.coeff(gap - j);
        cons.push_back(row);
    }
    return free - rank(k, cons);
}

namespace {

std::vector<Vec> ideal_rows(const std::vector<int>& gens_h, const std::vector<Poly>& ideal_gens, int top) {
    std::vector<Vec> rows;
    for (const Poly& g : ideal_gens) {
        for (int h = 0; h + g.degree() <= top; ++h) {
            if (semigroup_member(gens_h, h)) rows.push_back(dense(g.shifted(h), top + 1));
        }
    }
    return rows;
}

}  // namespace

int dim_ideal_kH(const std::vector<int>& gens_h, const std::vector<Poly>& ideal_gens, int bound, int slack) {
    const Field k = ideal_gens.front().field();
    return dim_low_part(k, ideal_rows(gens_h, ideal_gens, bound + slack), bound);
}

bool in_ideal_kH(const std::vector<int>& gens_h, const std::vector<Poly>& ideal_gens, const Poly& x, int bound,
                 int slack) {
    const Field k = x.field();
    return in_span(k, ideal_rows(gens_h, ideal_gens, bound + slack), dense(x, bound + slack + 1));
}

long long count_irreducibles(long long p, int n) {
    auto mobius = [](int m) {
        int result = 1;
        for (int q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                m /= q;
                if (m % q == 0) return 0;
                result = -result;
            }
        }
        return m > 1 ? -result : result;
    };
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long long pw = 1;
        for (int i = 0; i < n / d; ++i) pw *= p;
        total += mobius(d) * pw;
    }
    return total / n;
}

Poly random_poly(const Field& k, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coeff(-5, 5);
    Vec cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(k.from_int(coeff(rng)));
    return Poly(k, cs);
}

std::vector<int> random_semigroup(std::mt19937_64& rng, int hi, int max_count) {
    std::uniform_int_distribution<int> pick(2, hi);
    std::uniform_int_distribution<int> count(2, max_count);
    for (;;) {
        std::vector<int> gens;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) gens.push_back(pick(rng));
        int g = 0;
        for (int x : gens) g = std::gcd(g, x);
        if (g == 1) {
            std::sort(gens.begin(), gens.end());
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
            return gens;
        }
    }
}

}  // namespace oracle
