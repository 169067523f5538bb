#pragma once

// Independent reference implementations used only by the tests. None of them
// share code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using RealMatrix = std::vector<std::vector<double>>;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(RealMatrix a, int sweeps = 100) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
    std::sort(out.begin(), out.end());
    return out;
}

/// The 4x4 matrix sum_i sigma_i (x) sigma_i written out entry by entry. It is
/// real: the y-term contributes (-i)(-i) = -1 on the anti-diagonal and
/// (i)(-i) = +1 on the inner off-diagonal.
inline RealMatrix spin_dot_spin() {
    RealMatrix m(4, std::vector<double>(4, 0.0));
    // x (x) x: anti-diagonal ones.
    for (int i = 0; i < 4; ++i) m[i][3 - i] += 1.0;
    // y (x) y: entries (0,3), (3,0) get -1; (1,2), (2,1) get +1.
    m[0][3] -= 1.0;
    m[3][0] -= 1.0;
    m[1][2] += 1.0;
    m[2][1] += 1.0;
    // z (x) z: diag(1, -1, -1, 1).
    m[0][0] += 1.0;
    m[1][1] -= 1.0;
    m[2][2] -= 1.0;
    m[3][3] += 1.0;
    return m;
}

/// Does some map f on values satisfy theta(p) = f(lambda(p)) for every point?
/// Tries every function from lambda's values to theta's values.
inline bool dominates_by_value_maps(const std::vector<std::size_t>& theta, const std::vector<std::size_t>& lambda) {
    const std::size_t lv = *std::max_element(lambda.begin(), lambda.end()) + 1;
    const std::size_t tv = *std::max_element(theta.begin(), theta.end()) + 1;
    std::vector<std::size_t> f(lv, 0);
    while (true) {
        bool ok = true;
        for (std::size_t p = 0; p < theta.size() && ok; ++p) ok = f[lambda[p]] == theta[p];
        if (ok) return true;
        std::size_t i = 0;
        while (i < lv && ++f[i] == tv) f[i++] = 0;
        if (i == lv) return false;
    }
}

using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

/// Group generated by `gens`: repeatedly multiply everything by everything
/// until nothing new appears.
inline std::set<Perm> naive_closure(std::size_t n, const std::vector<Perm>& gens) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::set<Perm> group{id};
    group.insert(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> current(group.begin(), group.end());
        for (const auto& a : current) {
            for (const auto& b : current) grew |= group.insert(compose(a, b)).second;
        }
    }
    return group;
}

/// Every permutation of n points, lexicographic.
inline std::vector<Perm> all_permutations(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Restricted-growth form of an arbitrary labelling.
inline std::vector<std::size_t> canonical(const std::vector<std::size_t>& ids) {
    std::vector<std::size_t> out(ids.size());
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == ids[i]; });
        if (it == seen.end()) {
            seen.emplace_back(ids[i], seen.size());
            out[i] = seen.size() - 1;
        } else {
            out[i] = it->second;
        }
    }
    return out;
}

/// Random labelling of n points with at most `blocks` values, made surjective.
inline std::vector<std::size_t> random_labelling(std::mt19937& rng, std::size_t n, std::size_t blocks) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    std::vector<std::size_t> ids(n);
    for (auto& x : ids) x = pick(rng);
    return canonical(ids);
}

inline Perm random_permutation(std::mt19937& rng, std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
