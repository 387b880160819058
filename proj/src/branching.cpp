#include "dla/branching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dla {

int HighestWeight::size() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

bool HighestWeight::is_valid() const {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] < entries[i + 1]) return false;
    return entries.empty() || entries.back() >= 0;
}

bool HighestWeight::same_module(const HighestWeight& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] - entries[i + 1] != o.entries[i] - o.entries[i + 1]) return false;
    return true;
}

BigInt BranchingResult::total_dimension() const {
    BigInt d = 0;
    for (const auto& [w, m] : multiplicities) d += m * weyl_dim(w);
    return d;
}

BigInt weyl_dim(const HighestWeight& w) {
    const auto& l = w.entries;
    const std::size_t n = l.size();
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= BigInt(l[i] - l[j]) + BigInt(j - i);
            den *= BigInt(j - i);
        }
    return num / den;
}

BranchingResult gt_branch(const HighestWeight& w) {
    if (!w.is_valid()) throw std::invalid_argument("gt_branch: not a dominant weight");
    if (w.rank() == 0) throw std::invalid_argument("gt_branch: rank 0");
    const std::size_t n = w.rank() - 1;
    BranchingResult out;
    out.ambient_rank = w.rank();
    out.target_rank = n;
    std::vector<int> mu(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.multiplicities[HighestWeight{mu}] += 1;
            return;
        }
        for (int v = w.entries[i + 1]; v <= w.entries[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    if (n == 0) {
        out.multiplicities[HighestWeight{{}}] = 1;
        return out;
    }
    rec(0);
    return out;
}

namespace {

// Strip trailing zeros: partitions compare as shapes.
std::vector<int> shape_of(const HighestWeight& w) {
    std::vector<int> s = w.entries;
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

bool shape_contains(const std::vector<int>& big, const std::vector<int>& small) {
    if (small.size() > big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

// Count Littlewood-Richardson fillings of lambda/mu with content nu.
// Cells are filled in reading-word order (rows top to bottom, right to
// left), so the lattice condition and both tableau conditions can be
// checked as each cell is placed.
BigInt lr_count(const std::vector<int>& lambda, const std::vector<int>& mu,
                const std::vector<int>& nu) {
    const std::size_t rows = lambda.size();
    std::vector<std::vector<int>> fill(rows);
    for (std::size_t r = 0; r < rows; ++r)
        fill[r].assign(static_cast<std::size_t>(lambda[r]), 0);
    std::vector<int> used(nu.size(), 0);

    // Cell list in reading order; values are 1-based row indices into nu.
    struct Cell {
        std::size_t r;
        int c;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < rows; ++r) {
        int from = (r < mu.size()) ? mu[r] : 0;
        for (int c = lambda[r] - 1; c >= from; --c) cells.push_back({r, c});
    }

    BigInt count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            count += 1;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= static_cast<int>(nu.size()); ++v) {
            if (used[v - 1] >= nu[v - 1]) continue;
            // lattice: after placing v, #v <= #(v-1)
            if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
            // row weakly increasing left to right: right neighbor filled already
            if (c + 1 < lambda[r] && fill[r][c + 1] < v) continue;
            // column strictly increasing over skew cells; cells of mu are absent
            if (r > 0) {
                int mu_above = ((r - 1) < mu.size()) ? mu[r - 1] : 0;
                if (c >= mu_above && fill[r - 1][c] >= v) continue;
            }
            fill[r][c] = v;
            ++used[v - 1];
            rec(idx + 1);
            --used[v - 1];
            fill[r][c] = 0;
        }
    };
    rec(0);
    return count;
}

}  // namespace

BigInt lr_coefficient(const HighestWeight& mu, const HighestWeight& nu,
                      const HighestWeight& lambda) {
    if (!mu.is_valid() || !nu.is_valid() || !lambda.is_valid())
        throw std::invalid_argument("lr_coefficient: not dominant");
    if (mu.size() + nu.size() != lambda.size()) return 0;
    auto l = shape_of(lambda), m = shape_of(mu), v = shape_of(nu);
    if (!shape_contains(l, m)) return 0;
    if (v.empty()) return l == m ? 1 : 0;
    thread_local std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, BigInt>
        cache;
    auto key = std::make_tuple(l, m, v);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    BigInt res = lr_count(l, m, v);
    cache.emplace(std::move(key), res);
    return res;
}

namespace {

// Sub-partitions of lambda with the given size (candidates for an
// intermediate step of an iterated LR composition).
void enumerate_subpartitions(const std::vector<int>& lambda, int target_size,
                             std::vector<int>& cur, std::size_t row, int remaining,
                             const std::function<void(const std::vector<int>&)>& emit) {
    if (row == lambda.size()) {
        if (remaining == 0) emit(cur);
        return;
    }
    int cap = lambda[row];
    if (row > 0) cap = std::min(cap, cur[row - 1]);
    for (int v = std::min(cap, remaining); v >= 0; --v) {
        cur.push_back(v);
        enumerate_subpartitions(lambda, target_size, cur, row + 1, remaining - v, emit);
        cur.pop_back();
        if (v == 0) break;  // rows below would be 0 too
    }
}

}  // namespace

BigInt generalized_lr(const std::vector<HighestWeight>& mus, const HighestWeight& lambda) {
    if (mus.empty()) return lambda.size() == 0 ? 1 : 0;
    if (mus.size() == 1) return shape_of(mus[0]) == shape_of(lambda) ? 1 : 0;
    std::vector<HighestWeight> rest(mus.begin(), mus.end() - 1);
    const HighestWeight& last = mus.back();
    int inner_size = lambda.size() - last.size();
    if (inner_size < 0) return 0;
    BigInt total = 0;
    std::vector<int> cur;
    auto lshape = shape_of(lambda);
    enumerate_subpartitions(lshape, inner_size, cur, 0, inner_size,
                            [&](const std::vector<int>& tau_shape) {
                                HighestWeight tau{tau_shape};
                                BigInt outer = lr_coefficient(tau, last, lambda);
                                if (outer == 0) return;
                                total += generalized_lr(rest, tau) * outer;
                            });
    return total;
}

namespace {

// All partitions of total with at most max_rows rows.
void enumerate_partitions(int total, int max_rows, int max_first, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        emit(cur);
        return;
    }
    if (max_rows == 0) return;
    for (int v = std::min(total, max_first); v >= 1; --v) {
        cur.push_back(v);
        enumerate_partitions(total - v, max_rows - 1, v, cur, emit);
        cur.pop_back();
    }
}

std::vector<int> padded(const std::vector<int>& shape, std::size_t n) {
    std::vector<int> out = shape;
    out.resize(n, 0);
    return out;
}

}  // namespace

BranchingResult restrict_diagonal(const HighestWeight& lambda, std::size_t k, std::size_t n) {
    if (lambda.rank() != k * n)
        throw std::invalid_argument("restrict_diagonal: rank(lambda) != k*n");
    if (!lambda.is_valid()) throw std::invalid_argument("restrict_diagonal: not dominant");

    BranchingResult out;
    out.ambient_rank = k * n;
    out.target_rank = n;

    const int total = lambda.size();
    // Candidate mu's: partitions with at most n rows and size <= |lambda|.
    std::vector<HighestWeight> candidates;
    for (int sz = 0; sz <= total; ++sz) {
        std::vector<int> cur;
        enumerate_partitions(sz, static_cast<int>(n), sz, cur,
                             [&](const std::vector<int>& s) { candidates.push_back({s}); });
    }

    // Enumerate k-tuples with total size |lambda|; prune on the first
    // generalized coefficient.
    std::vector<HighestWeight> tuple(k);
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int remaining) {
        if (slot == k) {
            if (remaining != 0) return;
            BigInt inner = generalized_lr(tuple, lambda);
            if (inner == 0) return;
            for (const auto& nu : candidates) {
                if (nu.size() != total) continue;
                BigInt outer = generalized_lr(tuple, HighestWeight{padded(nu.entries, n)});
                if (outer == 0) continue;
                out.multiplicities[HighestWeight{padded(nu.entries, n)}] += inner * outer;
            }
            return;
        }
        for (const auto& mu : candidates) {
            if (mu.size() > remaining) continue;
            tuple[slot] = mu;
            rec(slot + 1, remaining - mu.size());
        }
    };
    rec(0, total);
    return out;
}

std::map<std::vector<int>, BigInt> character_multiset(const HighestWeight& lambda) {
    if (!lambda.is_valid()) throw std::invalid_argument("character_multiset: not dominant");
    const std::size_t n = lambda.rank();
    auto shape = shape_of(lambda);
    std::map<std::vector<int>, BigInt> out;
    if (shape.empty()) {
        out[std::vector<int>(n, 0)] = 1;
        return out;
    }
    // Semistandard fillings with entries 1..n; content vector is the weight.
    const std::size_t rows = shape.size();
    std::vector<std::vector<int>> fill(rows);
    for (std::size_t r = 0; r < rows; ++r) fill[r].assign(static_cast<std::size_t>(shape[r]), 0);
    std::vector<int> content(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int c) {
        if (r == rows) {
            out[content] += 1;
            return;
        }
        std::size_t nr = r;
        int nc = c + 1;
        if (nc >= shape[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(n); ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            rec(nr, nc);
            --content[v - 1];
        }
        fill[r][c] = 0;
    };
    rec(0, 0);
    return out;
}

BranchingResult decompose_by_characters(const std::map<std::vector<int>, BigInt>& module_weights,
                                        std::size_t target_rank,
                                        const std::vector<WeightLabel>& weight_map) {
    if (target_rank > 6) throw OracleTooLarge("decompose_by_characters: rank > 6");
    BigInt dim = 0;
    for (const auto& [w, m] : module_weights) dim += m;
    if (dim > 5000) throw OracleTooLarge("decompose_by_characters: dimension > 5000");

    // Pushforward.
    std::map<std::vector<int>, BigInt> bag;
    for (const auto& [w, m] : module_weights) {
        if (w.size() != weight_map.size())
            throw std::invalid_argument("decompose_by_characters: weight/label length mismatch");
        std::vector<int> tau(target_rank, 0);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& lab = weight_map[i];
            if (lab.sign == 0) continue;
            tau.at(static_cast<std::size_t>(lab.target_index)) += lab.sign * w[i];
        }
        bag[tau] += m;
    }

    BranchingResult out;
    out.target_rank = target_rank;
    out.ambient_rank = weight_map.size();
    while (!bag.empty()) {
        auto it = std::prev(bag.end());  // lexicographically greatest weight
        std::vector<int> top = it->first;
        BigInt mult = it->second;
        if (mult <= 0) throw std::invalid_argument("decompose_by_characters: not a character");
        for (std::size_t i = 0; i + 1 < top.size(); ++i)
            if (top[i] < top[i + 1])
                throw std::invalid_argument("decompose_by_characters: top weight not dominant");

        int shift = top.empty() ? 0 : top.back();
        std::vector<int> part = top;
        for (int& e : part) e -= shift;
        auto ch = character_multiset(HighestWeight{part});
        for (const auto& [w, m] : ch) {
            std::vector<int> back = w;
            for (int& e : back) e += shift;
            auto jt = bag.find(back);
            if (jt == bag.end() || jt->second < m * mult)
                throw std::invalid_argument("decompose_by_characters: not a character");
            jt->second -= m * mult;
            if (jt->second == 0) bag.erase(jt);
        }
        // Canonical nonnegative form; distinct GL classes that collapse to
        // one sl class merge here.
        std::vector<int> key = (shift >= 0) ? top : part;
        out.multiplicities[HighestWeight{key}] += mult;
    }
    return out;
}

BranchingResult restrict_along_signature(const HighestWeight& lambda, const SignatureTriple& sig,
                                         std::size_t n) {
    BigInt expected = sig.s() * n + sig.z;
    if (BigInt(lambda.rank()) != expected)
        throw std::invalid_argument("restrict_along_signature: rank(lambda) != (l+r)n + z");
    std::vector<WeightLabel> labels;
    for (BigInt copy = 0; copy < sig.l; ++copy)
        for (std::size_t j = 0; j < n; ++j) labels.push_back({static_cast<int>(j), +1});
    for (BigInt copy = 0; copy < sig.r; ++copy)
        for (std::size_t j = 0; j < n; ++j) labels.push_back({static_cast<int>(j), -1});
    for (BigInt t = 0; t < sig.z; ++t) labels.push_back({0, 0});
    return decompose_by_characters(character_multiset(lambda), n, labels);
}

BranchingResult restrict_further(const BranchingResult& b, const SignatureTriple& sig,
                                 std::size_t n) {
    BranchingResult out;
    out.ambient_rank = b.ambient_rank;
    out.target_rank = n;
    for (const auto& [w, m] : b.multiplicities) {
        BranchingResult piece = restrict_along_signature(w, sig, n);
        for (const auto& [v, c] : piece.multiplicities) out.multiplicities[v] += c * m;
    }
    return out;
}

Rational dynkin_index_module(const HighestWeight& w) {
    if (!w.is_valid()) throw std::invalid_argument("dynkin_index_module: not dominant");
    const std::size_t n = w.rank();
    if (n < 2) return 0;
    // <lambda, lambda + 2 rho> with the traceless shift
    // lt_j = lambda_j - |lambda|/n and 2 rho = (n-1, n-3, ..., -(n-1)).
    Rational total(w.size());
    Rational inner = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Rational lt = Rational(w.entries[j]) - total / Rational(n);
        Rational rho2 = Rational(static_cast<int>(n) - 1 - 2 * static_cast<int>(j));
        inner += lt * (lt + rho2);
    }
    BigInt dim_u = weyl_dim(w);
    BigInt dim_s = BigInt(n) * BigInt(n) - 1;
    return Rational(dim_u) / Rational(dim_s) * inner;
}

BigInt index_of_signature(const SignatureTriple& sig) { return sig.s(); }

int d_of(const BranchingResult& b) {
    if (b.multiplicities.empty()) throw std::invalid_argument("d_of: empty result");
    int best = 0;
    for (const auto& [w, m] : b.multiplicities) {
        if (w.entries.empty()) continue;
        best = std::max(best, w.entries.front() - w.entries.back());
    }
    return best;
}

}  // namespace dla
