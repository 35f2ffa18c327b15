#ifndef KOSZUL_LINALG_HPP
#define KOSZUL_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/scalars.hpp"

namespace koszul {

class LinalgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Exact sparse matrix with optional row/column labels.
class SparseMatrix {
public:
    using Row = std::map<std::size_t, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
    /// Matrix whose rows are the given vectors.
    static SparseMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// Matrix whose columns are the given vectors.
    static SparseMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    void set(std::size_t r, std::size_t c, const Rational& value);
    void add(std::size_t r, std::size_t c, const Rational& value);
    Rational get(std::size_t r, std::size_t c) const;
    const Row& row(std::size_t r) const { return rows_[r]; }

    SparseMatrix transpose() const;
    Vector multiply(const Vector& v) const;

    void set_row_labels(std::vector<std::string> labels);
    void set_col_labels(std::vector<std::string> labels);
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

private:
    std::vector<Row> rows_;
    std::size_t cols_ = 0;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

/// Reduced row echelon form over the active field; values are returned as
/// rationals (residues in [0, p) for prime fields).
struct RowEchelon {
    std::vector<std::size_t> pivot_cols;
    std::vector<Vector> rows;
};

/// Blocks with fewer than this many rows and columns use dense elimination.
inline constexpr std::size_t dense_threshold = 64;

std::size_t rank(const SparseMatrix& m, const FieldContext& field = {});
RowEchelon row_reduce(const SparseMatrix& m, const FieldContext& field = {});
/// Right kernel, one vector per free column (read off the RREF).
std::vector<Vector> kernel_basis(const SparseMatrix& m, const FieldContext& field = {});

struct SpanMembership {
    bool member = false;
    /// target = sum coefficients[i] * vectors[i] when member.
    Vector coefficients;
};

/// Throws LinalgError on dimension mismatch.
SpanMembership in_span(const std::vector<Vector>& vectors, const Vector& target, const FieldContext& field = {});

/// Dimension of the span of vectors of length dim.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim, const FieldContext& field = {});
/// Canonical (RREF) basis of the span.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim, const FieldContext& field = {});

/// Selects the sparse or dense path explicitly; used by tests.
enum class EliminationPath { automatic, sparse, dense };
RowEchelon row_reduce_with(const SparseMatrix& m, const FieldContext& field, EliminationPath path);
std::size_t rank_with(const SparseMatrix& m, const FieldContext& field, EliminationPath path);

bool is_zero_vector(const Vector& v);

} // namespace koszul

#endif // KOSZUL_LINALG_HPP
