#include "vsl/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "vsl/bounds.hpp"

namespace vsl {

namespace {

constexpr int kMarkowitzSearchCols = 4;

/// Columns of the block become rows: each has at most p nonzeros.
std::vector<SparseRow> transposed_rows(const KoszulBlockMatrix& m, Fp p)
{
    std::vector<SparseRow> rows(m.ncols());
    for (const auto& e : m.entries) {
        rows[e.col].cols.push_back(e.row);
        rows[e.col].vals.push_back(e.sign > 0 ? Fp(1) : p - 1);
    }
    for (auto& r : rows) {
        std::vector<std::size_t> order(r.cols.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return r.cols[a] < r.cols[b]; });
        SparseRow s;
        for (auto i : order) {
            if (!s.cols.empty() && s.cols.back() == r.cols[i]) {
                s.vals.back() = modp::add(s.vals.back(), r.vals[i], p);
                if (s.vals.back() == 0) {
                    s.cols.pop_back();
                    s.vals.pop_back();
                }
                continue;
            }
            s.cols.push_back(r.cols[i]);
            s.vals.push_back(r.vals[i]);
        }
        r = std::move(s);
    }
    return rows;
}

Fp value_at(const SparseRow& r, std::uint32_t c)
{
    auto it = std::lower_bound(r.cols.begin(), r.cols.end(), c);
    return (it != r.cols.end() && *it == c) ? r.vals[it - r.cols.begin()] : 0;
}

}  // namespace

std::size_t sparse_rank_mod(std::vector<SparseRow> rows, std::size_t ncols, Fp p)
{
    const std::size_t nr = rows.size();
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    std::vector<std::int64_t> col_count(ncols, 0), delta(ncols, 0);
    std::vector<char> alive(nr, 1), touched(ncols, 0);
    std::vector<std::uint32_t> touched_list;

    for (std::uint32_t r = 0; r < nr; ++r) {
        for (auto c : rows[r].cols) {
            col_rows[c].push_back(r);
            ++col_count[c];
        }
    }
    std::set<std::pair<std::int64_t, std::uint32_t>> queue;
    for (std::uint32_t c = 0; c < ncols; ++c) {
        if (col_count[c] > 0)
            queue.insert({col_count[c], c});
    }
    auto bump = [&](std::uint32_t c, std::int64_t by) {
        delta[c] += by;
        if (!touched[c]) {
            touched[c] = 1;
            touched_list.push_back(c);
        }
    };
    auto compact = [&](std::uint32_t c) {
        auto& lst = col_rows[c];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](std::uint32_t r) { return !alive[r] || value_at(rows[r], c) == 0; }),
                  lst.end());
    };

    std::size_t rank = 0;
    SparseRow merged;
    while (!queue.empty()) {
        std::tuple<std::uint64_t, std::uint32_t, std::uint32_t> best{~0ull, 0, 0};
        int examined = 0;
        for (auto it = queue.begin(); it != queue.end() && examined < kMarkowitzSearchCols; ++it, ++examined) {
            const std::uint32_t c = it->second;
            compact(c);
            const std::uint64_t cc = col_rows[c].size();
            for (auto r : col_rows[c]) {
                const std::uint64_t cost = (rows[r].cols.size() - 1) * (cc - 1);
                best = std::min(best, std::make_tuple(cost, r, c));
            }
        }
        const auto [cost, pr, pc] = best;
        (void)cost;
        const SparseRow& piv = rows[pr];
        const Fp pinv = modp::inv(value_at(piv, pc), p);

        for (auto r : col_rows[pc]) {
            if (r == pr)
                continue;
            SparseRow& row = rows[r];
            const Fp f = modp::mul(value_at(row, pc), pinv, p);
            merged.cols.clear();
            merged.vals.clear();
            std::size_t i = 0, j = 0;
            while (i < row.cols.size() || j < piv.cols.size()) {
                if (j == piv.cols.size() || (i < row.cols.size() && row.cols[i] < piv.cols[j])) {
                    merged.cols.push_back(row.cols[i]);
                    merged.vals.push_back(row.vals[i]);
                    ++i;
                }
                else if (i == row.cols.size() || piv.cols[j] < row.cols[i]) {
                    // fill-in
                    const std::uint32_t c = piv.cols[j];
                    merged.cols.push_back(c);
                    merged.vals.push_back(modp::neg(modp::mul(f, piv.vals[j], p), p));
                    col_rows[c].push_back(r);
                    bump(c, +1);
                    ++j;
                }
                else {
                    const std::uint32_t c = row.cols[i];
                    const Fp v = modp::sub(row.vals[i], modp::mul(f, piv.vals[j], p), p);
                    if (v != 0) {
                        merged.cols.push_back(c);
                        merged.vals.push_back(v);
                    }
                    else {
                        bump(c, -1);
                    }
                    ++i;
                    ++j;
                }
            }
            std::swap(row.cols, merged.cols);
            std::swap(row.vals, merged.vals);
        }
        for (auto c : piv.cols)
            bump(c, -1);
        alive[pr] = 0;
        ++rank;

        for (auto c : touched_list) {
            if (delta[c] != 0) {
                if (col_count[c] > 0)
                    queue.erase({col_count[c], c});
                col_count[c] += delta[c];
                if (col_count[c] > 0)
                    queue.insert({col_count[c], c});
            }
            delta[c] = 0;
            touched[c] = 0;
        }
        touched_list.clear();
        col_rows[pc].clear();
        rows[pr] = SparseRow{};
    }
    return rank;
}

std::size_t sparse_rank(const KoszulBlockMatrix& m, const FieldSpec& f)
{
    if (!f.is_prime_field())
        throw std::invalid_argument("sparse_rank: needs a prime field");
    if (m.entries.empty())
        return 0;
    const Fp p = f.characteristic();
    return sparse_rank_mod(transposed_rows(m, p), m.nrows(), p);
}

std::size_t rational_rank(const KoszulBlockMatrix& m, std::size_t dense_limit)
{
    if (m.nrows() > dense_limit || m.ncols() > dense_limit)
        throw DenseLimitExceeded("rational_rank: block " + std::to_string(m.nrows()) + "x" +
                                 std::to_string(m.ncols()) + " exceeds dense limit " + std::to_string(dense_limit));
    if (m.entries.empty())
        return 0;
    using Row = std::vector<std::pair<std::uint32_t, BigInt>>;
    std::vector<Row> input(m.ncols());
    for (const auto& e : m.entries)
        input[e.col].push_back({e.row, BigInt(e.sign)});

    std::map<std::uint32_t, Row> pivots;  // leading column -> reduced row
    for (auto& row : input) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        // merge duplicate coordinates (cannot occur for Koszul blocks, kept exact anyway)
        Row clean;
        for (auto& [c, v] : row) {
            if (!clean.empty() && clean.back().first == c)
                clean.back().second += v;
            else
                clean.push_back({c, v});
            if (clean.back().second == 0)
                clean.pop_back();
        }
        row = std::move(clean);

        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end())
                break;
            const Row& piv = it->second;
            const BigInt a = piv.front().second;
            const BigInt b = row.front().second;
            // row <- a*row - b*piv eliminates the leading entry without division
            Row next;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    next.push_back({row[i].first, a * row[i].second});
                    ++i;
                }
                else if (i == row.size() || piv[j].first < row[i].first) {
                    next.push_back({piv[j].first, -b * piv[j].second});
                    ++j;
                }
                else {
                    BigInt v = a * row[i].second - b * piv[j].second;
                    if (v != 0)
                        next.push_back({row[i].first, std::move(v)});
                    ++i;
                    ++j;
                }
            }
            BigInt g = 0;
            for (auto& [c, v] : next)
                g = gcd(g, abs(v));
            if (g > 1) {
                for (auto& [c, v] : next)
                    v /= g;
            }
            row = std::move(next);
        }
        if (!row.empty())
            pivots.emplace(row.front().first, std::move(row));
    }
    return pivots.size();
}

DenseMatrixModP::DenseMatrixModP(std::size_t rows, std::size_t cols, Fp p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
{
}

std::vector<std::size_t> DenseMatrixModP::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && (*this)(piv, c) == 0)
            ++piv;
        if (piv == rows_)
            continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(piv, j), (*this)(r, j));
        }
        const Fp inv = modp::inv((*this)(r, c), p_);
        for (std::size_t j = c; j < cols_; ++j)
            (*this)(r, j) = modp::mul((*this)(r, j), inv, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r)
                continue;
            const Fp f = (*this)(i, c);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols_; ++j) {
                const Fp v = (*this)(r, j);
                if (v != 0)
                    (*this)(i, j) = modp::sub((*this)(i, j), modp::mul(f, v, p_), p_);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t DenseMatrixModP::rank() const
{
    DenseMatrixModP copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Fp>> DenseMatrixModP::nullspace() const
{
    DenseMatrixModP red = *this;
    const auto pivots = red.rref();
    std::vector<char> is_pivot(cols_, 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<std::vector<Fp>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Fp> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = modp::neg(red(i, free), p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Fp>> DenseMatrixModP::solve(const std::vector<Fp>& b) const
{
    DenseMatrixModP aug(rows_, cols_ + 1, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i] % p_;
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    std::vector<Fp> x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, cols_);
    return x;
}

DenseMatrixModP DenseMatrixModP::from_block(const KoszulBlockMatrix& m, Fp p)
{
    DenseMatrixModP a(m.nrows(), m.ncols(), p);
    for (const auto& e : m.entries)
        a(e.row, e.col) = modp::add(a(e.row, e.col), e.sign > 0 ? Fp(1) : p - 1, p);
    return a;
}

}  // namespace vsl
