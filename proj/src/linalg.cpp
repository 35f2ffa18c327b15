#include "koszul/linalg.hpp"

#include <algorithm>
#include <set>

namespace koszul {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw LinalgError("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c]);
    }
    return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    return from_dense(rows, cols);
}

SparseMatrix SparseMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    SparseMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw LinalgError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m.set(r, c, cols[c][r]);
    }
    return m;
}

std::size_t SparseMatrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_.size() || c >= cols_)
        throw LinalgError("matrix index out of range");
    if (sgn(value) == 0)
        rows_[r].erase(c);
    else
        rows_[r][c] = value;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_.size() || c >= cols_)
        throw LinalgError("matrix index out of range");
    if (sgn(value) == 0)
        return;
    auto [it, inserted] = rows_[r].try_emplace(c, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0)
            rows_[r].erase(it);
    }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const
{
    auto it = rows_.at(r).find(c);
    return it == rows_[r].end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r])
            t.rows_[c].emplace(r, v);
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
}

Vector SparseMatrix::multiply(const Vector& v) const
{
    if (v.size() != cols_)
        throw LinalgError("matrix-vector dimension mismatch");
    Vector out(rows_.size(), Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, x] : rows_[r])
            out[r] += x * v[c];
    return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t expected)
{
    if (labels.size() != expected)
        throw LinalgError("label count does not match the dimension");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw LinalgError("labels must be unique");
}

} // namespace

void SparseMatrix::set_row_labels(std::vector<std::string> labels)
{
    check_labels(labels, rows());
    row_labels_ = std::move(labels);
}

void SparseMatrix::set_col_labels(std::vector<std::string> labels)
{
    check_labels(labels, cols());
    col_labels_ = std::move(labels);
}

bool is_zero_vector(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

template <class F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::Elem>>;

template <class F>
struct Echelon {
    std::vector<std::size_t> pivot_cols;
    std::vector<SparseVec<F>> rows; // leading coefficient 1 at pivot_cols[i]
};

template <class F>
std::vector<SparseVec<F>> convert_rows(const F& f, const SparseMatrix& m)
{
    std::vector<SparseVec<F>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVec<F> v;
        for (const auto& [c, x] : m.row(r)) {
            auto e = f.from_rational(x);
            if (!f.is_zero(e))
                v.emplace_back(c, std::move(e));
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

// row <- row - factor * pivot
template <class F>
void axpy(const F& f, SparseVec<F>& row, const typename F::Elem& factor, const SparseVec<F>& pivot)
{
    SparseVec<F> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(std::move(row[i++]));
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, f.neg(f.mul(factor, pivot[j].second)));
            ++j;
        } else {
            auto v = f.sub(row[i].second, f.mul(factor, pivot[j].second));
            if (!f.is_zero(v))
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

template <class F>
void normalize(const F& f, SparseVec<F>& row)
{
    auto inv = f.inv(row.front().second);
    for (auto& [c, v] : row)
        v = f.mul(v, inv);
}

template <class F>
const typename F::Elem* find_entry(const SparseVec<F>& row, std::size_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Column-ascending elimination; the pivot for a column is the sparsest row
// leading there (ties broken by row index).
template <class F>
Echelon<F> echelon_sparse(const F& f, std::vector<SparseVec<F>> rows, std::size_t cols, bool reduce)
{
    std::vector<std::vector<std::size_t>> buckets(cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty())
            buckets[rows[r].front().first].push_back(r);
    Echelon<F> e;
    for (std::size_t col = 0; col < cols; ++col) {
        auto bucket = std::move(buckets[col]);
        if (bucket.empty())
            continue;
        std::size_t best = bucket.front();
        for (std::size_t r : bucket)
            if (rows[r].size() < rows[best].size() || (rows[r].size() == rows[best].size() && r < best))
                best = r;
        normalize(f, rows[best]);
        for (std::size_t r : bucket) {
            if (r == best)
                continue;
            auto factor = rows[r].front().second;
            axpy(f, rows[r], factor, rows[best]);
            if (!rows[r].empty())
                buckets[rows[r].front().first].push_back(r);
        }
        e.pivot_cols.push_back(col);
        e.rows.push_back(std::move(rows[best]));
    }
    if (reduce) {
        for (std::size_t i = e.rows.size(); i-- > 0;) {
            std::size_t pc = e.pivot_cols[i];
            for (std::size_t j = 0; j < i; ++j) {
                const auto* entry = find_entry<F>(e.rows[j], pc);
                if (entry) {
                    auto factor = *entry;
                    axpy(f, e.rows[j], factor, e.rows[i]);
                }
            }
        }
    }
    return e;
}

template <class F>
Echelon<F> echelon_dense(const F& f, const std::vector<SparseVec<F>>& sparse, std::size_t cols, bool reduce)
{
    using Elem = typename F::Elem;
    std::vector<std::vector<Elem>> a(sparse.size(), std::vector<Elem>(cols, f.zero()));
    for (std::size_t r = 0; r < sparse.size(); ++r)
        for (const auto& [c, v] : sparse[r])
            a[r][c] = v;
    std::vector<bool> used(a.size(), false);
    std::vector<std::size_t> pivot_rows;
    Echelon<F> e;
    auto nnz = [&](std::size_t r) {
        std::size_t n = 0;
        for (const auto& v : a[r])
            n += f.is_zero(v) ? 0 : 1;
        return n;
    };
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t best = a.size();
        std::size_t best_nnz = 0;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (used[r] || f.is_zero(a[r][col]))
                continue;
            std::size_t n = nnz(r);
            if (best == a.size() || n < best_nnz) {
                best = r;
                best_nnz = n;
            }
        }
        if (best == a.size())
            continue;
        used[best] = true;
        auto inv = f.inv(a[best][col]);
        for (auto& v : a[best])
            v = f.mul(v, inv);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == best || f.is_zero(a[r][col]))
                continue;
            if (used[r] && !reduce)
                continue;
            auto factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!f.is_zero(a[best][c]))
                    a[r][c] = f.sub(a[r][c], f.mul(factor, a[best][c]));
        }
        e.pivot_cols.push_back(col);
        pivot_rows.push_back(best);
    }
    for (std::size_t r : pivot_rows) {
        SparseVec<F> v;
        for (std::size_t c = 0; c < cols; ++c)
            if (!f.is_zero(a[r][c]))
                v.emplace_back(c, a[r][c]);
        e.rows.push_back(std::move(v));
    }
    return e;
}

template <class F>
Echelon<F> echelon(const F& f, const SparseMatrix& m, bool reduce, EliminationPath path)
{
    auto rows = convert_rows(f, m);
    bool dense = path == EliminationPath::dense
        || (path == EliminationPath::automatic && m.rows() < dense_threshold && m.cols() < dense_threshold);
    return dense ? echelon_dense(f, rows, m.cols(), reduce) : echelon_sparse(f, std::move(rows), m.cols(), reduce);
}

template <class F>
RowEchelon to_row_echelon(const F& f, const Echelon<F>& e, std::size_t cols)
{
    RowEchelon out;
    out.pivot_cols = e.pivot_cols;
    for (const auto& row : e.rows) {
        Vector v(cols, Rational(0));
        for (const auto& [c, x] : row)
            v[c] = f.to_rational(x);
        out.rows.push_back(std::move(v));
    }
    return out;
}

constexpr std::uint64_t screening_prime = 2305843009213693951ULL; // 2^61 - 1

template <class Fn>
auto with_field(const FieldContext& field, Fn&& fn)
{
    if (field.is_rational()) {
        try {
            return fn(SmallRationalField{});
        } catch (const SmallOverflow&) {
            return fn(RationalField{});
        }
    }
    return fn(PrimeField(field.characteristic()));
}

} // namespace

RowEchelon row_reduce_with(const SparseMatrix& m, const FieldContext& field, EliminationPath path)
{
    return with_field(field, [&](const auto& f) { return to_row_echelon(f, echelon(f, m, true, path), m.cols()); });
}

std::size_t rank_with(const SparseMatrix& m, const FieldContext& field, EliminationPath path)
{
    return with_field(field, [&](const auto& f) { return echelon(f, m, false, path).pivot_cols.size(); });
}

RowEchelon row_reduce(const SparseMatrix& m, const FieldContext& field)
{
    return row_reduce_with(m, field, EliminationPath::automatic);
}

std::size_t rank(const SparseMatrix& m, const FieldContext& field)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if (field.is_rational()) {
        // The rank mod p never exceeds the rational rank, so a full rank
        // mod p settles the rational rank exactly.
        const PrimeField fp(screening_prime);
        try {
            const std::size_t r = echelon(fp, m, false, EliminationPath::automatic).pivot_cols.size();
            if (r == std::min(m.rows(), m.cols()))
                return r;
        } catch (const FieldError&) {
        }
    }
    return rank_with(m, field, EliminationPath::automatic);
}

std::vector<Vector> kernel_basis(const SparseMatrix& m, const FieldContext& field)
{
    RowEchelon e = row_reduce(m, field);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols)
        is_pivot[c] = true;
    const bool prime = !field.is_rational();
    const Rational p = prime ? Rational(static_cast<unsigned long>(field.characteristic())) : Rational(0);
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            const Rational& x = e.rows[i][free];
            if (sgn(x) == 0)
                continue;
            v[e.pivot_cols[i]] = prime ? Rational(p - x) : Rational(-x);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanMembership in_span(const std::vector<Vector>& vectors, const Vector& target, const FieldContext& field)
{
    const std::size_t dim = target.size();
    for (const auto& v : vectors)
        if (v.size() != dim)
            throw LinalgError("span vectors and target have different lengths");
    SparseMatrix a(dim, vectors.size() + 1);
    for (std::size_t c = 0; c < vectors.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r)
            a.set(r, c, vectors[c][r]);
    for (std::size_t r = 0; r < dim; ++r)
        a.set(r, vectors.size(), target[r]);
    RowEchelon e = row_reduce(a, field);
    SpanMembership out;
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == vectors.size())
        return out;
    out.member = true;
    out.coefficients.assign(vectors.size(), Rational(0));
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        out.coefficients[e.pivot_cols[i]] = e.rows[i][vectors.size()];
    return out;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim, const FieldContext& field)
{
    if (vectors.empty() || dim == 0)
        return 0;
    return rank(SparseMatrix::from_rows(vectors, dim), field);
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim, const FieldContext& field)
{
    if (vectors.empty() || dim == 0)
        return {};
    return row_reduce(SparseMatrix::from_rows(vectors, dim), field).rows;
}

} // namespace koszul
