#pragma once

// Exact integer matrices, Smith normal form, and the quotient Z^n / B Z^n of
// a full-rank lattice given by the columns of B.

#include <leetile/abelian_group.hpp>
#include <leetile/bigint.hpp>
#include <leetile/errors.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace leetile {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    // Row-major initializer: IntMatrix::from_rows({{13, -5}, {0, 1}}).
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>> &rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw DimensionError("ragged matrix rows");
            }
            for (std::size_t j = 0; j < m.cols_; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<BigInt> column(std::size_t j) const {
        std::vector<BigInt> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out[i] = (*this)(i, j);
        }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }
    // row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const BigInt &factor) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(dst, j) += factor * (*this)(src, j);
        }
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt &factor) {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, dst) += factor * (*this)(i, src);
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(i, j) = -(*this)(i, j);
        }
    }

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product shape mismatch");
        }
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += a(i, k) * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntMatrix m) {
    if (!m.square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const auto n = m.rows();
    if (n == 0) {
        return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0) {
                ++swap_with;
            }
            if (swap_with == n) {
                return 0;
            }
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SmithForm {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;

    std::vector<BigInt> diagonal() const {
        std::vector<BigInt> out(D.rows());
        for (std::size_t i = 0; i < D.rows(); ++i) {
            out[i] = D(i, i);
        }
        return out;
    }
};

namespace detail {

// Floor division for BigInt (cpp_int divides toward zero).
inline BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline BigInt parse_bigint(std::string_view text) {
    text = trim(text);
    const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
        }
    }
    BigInt value(std::string(text.substr(start)));
    return text[0] == '-' ? BigInt(-value) : value;
}

} // namespace detail

// U * M * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, U and V unimodular.
// Pivot: smallest nonzero |entry| of the active block, ties broken by
// row-major position.
inline SmithForm smith_normal_form(const IntMatrix &M) {
    if (!M.square()) {
        throw DimensionError("smith_normal_form expects a square matrix");
    }
    const auto n = M.rows();
    SmithForm s{M, IntMatrix::identity(n), IntMatrix::identity(n)};
    auto &A = s.D;
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::optional<std::pair<std::size_t, std::size_t>> pivot;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (A(i, j) != 0 && (!pivot || abs(A(i, j)) < abs(A(pivot->first, pivot->second)))) {
                        pivot = {i, j};
                    }
                }
            }
            if (!pivot) {
                throw SingularMatrixError("matrix is singular");
            }
            if (pivot->first != t) {
                A.swap_rows(t, pivot->first);
                s.U.swap_rows(t, pivot->first);
            }
            if (pivot->second != t) {
                A.swap_cols(t, pivot->second);
                s.V.swap_cols(t, pivot->second);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (A(i, t) == 0) {
                    continue;
                }
                const BigInt q = detail::floor_div(A(i, t), A(t, t));
                A.add_row(i, t, -q);
                s.U.add_row(i, t, -q);
                clean = clean && A(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A(t, j) == 0) {
                    continue;
                }
                const BigInt q = detail::floor_div(A(t, j), A(t, t));
                A.add_col(j, t, -q);
                s.V.add_col(j, t, -q);
                clean = clean && A(t, j) == 0;
            }
            if (!clean) {
                continue;
            }
            // Enforce d_t | every remaining entry by folding an offending row in.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < n && !offending; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (A(i, j) % A(t, t) != 0) {
                        offending = i;
                        break;
                    }
                }
            }
            if (!offending) {
                break;
            }
            A.add_row(t, *offending, 1);
            s.U.add_row(t, *offending, 1);
        }
        if (A(t, t) < 0) {
            A.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

// Square integer matrix whose columns generate a full-rank sublattice of Z^n.
struct LatticeBasis {
    IntMatrix entries;

    std::size_t dimension() const noexcept { return entries.rows(); }
};

// Text: first token n, then n rows of n integers. JSON: {"rows": [[...], ...]}
// or a bare array of rows. Either way, columns are the lattice generators.
inline LatticeBasis parse_basis(std::string_view text) {
    const auto body = detail::trim(text);
    std::vector<std::vector<BigInt>> rows;
    if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(std::string("basis JSON: ") + e.what());
        }
        const auto &arr = doc.is_object() ? doc.at("rows") : doc;
        if (!arr.is_array()) {
            throw ParseError("basis JSON: expected an array of rows");
        }
        for (const auto &row : arr) {
            std::vector<BigInt> r;
            for (const auto &v : row) {
                if (v.is_number_integer()) {
                    r.emplace_back(v.get<std::int64_t>());
                } else if (v.is_string()) {
                    r.push_back(detail::parse_bigint(v.get<std::string>()));
                } else {
                    throw ParseError("basis JSON: entries must be integers");
                }
            }
            rows.push_back(std::move(r));
        }
        if (doc.is_object() && doc.contains("n") && doc.at("n").get<std::size_t>() != rows.size()) {
            throw ParseError("basis JSON: n does not match the number of rows");
        }
    } else {
        std::istringstream in{std::string(body)};
        std::string token;
        if (!(in >> token)) {
            throw ParseError("basis file is empty");
        }
        const auto n = detail::parse_int(token);
        if (n < 1) {
            throw ParseError("basis dimension must be >= 1");
        }
        rows.assign(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
        for (auto &row : rows) {
            for (auto &v : row) {
                if (!(in >> token)) {
                    throw ParseError("basis file ends early; expected " + std::to_string(n * n) + " entries");
                }
                v = detail::parse_bigint(token);
            }
        }
        if (in >> token) {
            throw ParseError("basis file has trailing data: '" + token + "'");
        }
    }
    if (rows.empty()) {
        throw ParseError("basis has no rows");
    }
    for (const auto &r : rows) {
        if (r.size() != rows.size()) {
            throw ParseError("basis must be square");
        }
    }
    return LatticeBasis{IntMatrix::from_rows(rows)};
}

struct QuotientMap {
    AbelianGroup group;
    // images[j] is the image of the j-th standard basis vector.
    std::vector<GroupElement> images;

    GroupElement project(std::span<const std::int64_t> x) const {
        if (x.size() != images.size()) {
            throw DimensionError("point dimension does not match the lattice");
        }
        auto acc = group.identity();
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] != 0) {
                acc = group.add(acc, group.scale(images[j], x[j]));
            }
        }
        return acc;
    }
};

// G = Z^n / (B Z^n) with trivial factors dropped, plus the images of e_1..e_n.
// With U B V = D, x maps to (U x)_i mod d_i.
inline QuotientMap quotient_map(const LatticeBasis &basis) {
    const auto &B = basis.entries;
    if (!B.square() || B.rows() == 0) {
        throw DimensionError("lattice basis must be a non-empty square matrix");
    }
    const auto snf = smith_normal_form(B);
    const auto n = B.rows();
    std::vector<std::size_t> kept;
    std::vector<std::int64_t> factors;
    for (std::size_t i = 0; i < n; ++i) {
        const auto &d = snf.D(i, i);
        if (d != 1) {
            if (!fits_int64(d)) {
                throw DomainError("quotient group factor exceeds 64 bits");
            }
            kept.push_back(i);
            factors.push_back(static_cast<std::int64_t>(d));
        }
    }
    QuotientMap q{AbelianGroup(factors), {}};
    for (std::size_t j = 0; j < n; ++j) {
        GroupElement g;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            const BigInt d = factors[k];
            BigInt r = snf.U(kept[k], j) % d;
            if (r < 0) {
                r += d;
            }
            g.residues.push_back(static_cast<std::int64_t>(r));
        }
        q.images.push_back(std::move(g));
    }
    return q;
}

} // namespace leetile
