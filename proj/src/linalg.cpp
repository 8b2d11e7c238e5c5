#include "cofrob/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "cofrob/error.hpp"

namespace cofrob {

Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw InvalidInput("vector addition: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw InvalidInput("vector subtraction: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator*(const Scalar& s, const Vector& v)
{
    Vector r = v;
    for (auto& x : r)
        x *= s;
    return r;
}

Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw InvalidInput("dot: length mismatch");
    Scalar acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc.add_product(a[i], b[i]);
    return acc;
}

std::string to_string(const Vector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].str();
    }
    return s + "]";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw InvalidInput("Matrix: entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidInput("Matrix: ragged initializer");
        for (long x : r)
            data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InvalidInput("Matrix::from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw InvalidInput("Matrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    return cofrob::is_zero(data_);
}

bool Matrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix addition: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix subtraction: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidInput("matrix product: inner dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j).add_product(aik, b(k, j));
        }
    return p;
}

Matrix operator*(const Scalar& s, Matrix m)
{
    for (auto& x : m.data_)
        x *= s;
    return m;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size())
        throw InvalidInput("matrix-vector product: dimension mismatch");
    Vector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            r[i].add_product(a(i, k), v[k]);
    return r;
}

Vector operator*(const Vector& v, const Matrix& a)
{
    if (a.rows() != v.size())
        throw InvalidInput("vector-matrix product: dimension mismatch");
    Vector r(a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (v[k].is_zero())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[j].add_product(v[k], a(k, j));
    }
    return r;
}

std::string Matrix::str() const
{
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            s += ",";
        s += to_string(row(r));
    }
    return s + "]";
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

Matrix linear_combination(std::span<const Matrix> mats, std::span<const Scalar> coeffs)
{
    if (mats.empty() || mats.size() != coeffs.size())
        throw InvalidInput("linear_combination: need matching non-empty inputs");
    Matrix acc(mats[0].rows(), mats[0].cols());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        if (mats[i].rows() != acc.rows() || mats[i].cols() != acc.cols())
            throw InvalidInput("linear_combination: shape mismatch");
        for (std::size_t r = 0; r < acc.rows(); ++r)
            for (std::size_t c = 0; c < acc.cols(); ++c)
                acc(r, c).add_product(coeffs[i], mats[i](r, c));
    }
    return acc;
}

// ------------------------------------------------------------ RowReducer

namespace {

SparseRow to_sparse(const Vector& v)
{
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            r.emplace_back(i, v[i]);
    return r;
}

// a - f * b, both sorted by column.
SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        }
        else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        }
        else {
            Scalar v = a[i].second;
            v.sub_product(f, b[j].second);
            if (!v.is_zero())
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const Scalar* find_entry(const SparseRow& row, std::size_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != col)
        return nullptr;
    return &it->second;
}

}  // namespace

RowReducer::RowReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

SparseRow RowReducer::reduce(SparseRow v) const
{
    std::size_t pos = 0;
    while (pos < v.size()) {
        std::size_t col = v[pos].first;
        std::ptrdiff_t pr = pivot_row_[col];
        if (pr < 0) {
            ++pos;
            continue;
        }
        Scalar f = v[pos].second;
        v = axpy(v, f, rows_[static_cast<std::size_t>(pr)]);
    }
    return v;
}

bool RowReducer::add(SparseRow row)
{
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow clean;
    for (auto& e : row) {
        if (e.first >= cols_)
            throw InvalidInput("RowReducer: column index out of range");
        if (!clean.empty() && clean.back().first == e.first)
            clean.back().second += e.second;
        else
            clean.push_back(std::move(e));
    }
    std::erase_if(clean, [](const auto& e) { return e.second.is_zero(); });

    SparseRow r = reduce(std::move(clean));
    if (r.empty())
        return false;
    Scalar lead = r.front().second;
    if (!lead.is_one())
        for (auto& e : r)
            e.second /= lead;
    pivot_row_[r.front().first] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool RowReducer::add(const Vector& row)
{
    if (row.size() != cols_)
        throw InvalidInput("RowReducer: row length mismatch");
    return add(to_sparse(row));
}

void RowReducer::back_substitute(std::vector<SparseRow>& rows) const
{
    std::sort(rows.begin(), rows.end(),
              [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
    for (std::size_t i = rows.size(); i-- > 0;) {
        std::size_t p = rows[i].front().first;
        for (std::size_t j = 0; j < i; ++j) {
            const Scalar* e = find_entry(rows[j], p);
            if (!e)
                continue;
            Scalar f = *e;
            rows[j] = axpy(rows[j], f, rows[i]);
        }
    }
}

Echelon RowReducer::echelon() const
{
    std::vector<SparseRow> rows = rows_;
    back_substitute(rows);
    Echelon e{Matrix(rows.size(), cols_), {}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        e.pivots.push_back(rows[r].front().first);
        for (const auto& [c, v] : rows[r])
            e.rows(r, c) = v;
    }
    return e;
}

Subspace RowReducer::nullspace() const
{
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    RowReducer basis(cols_);
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        SparseRow v;
        v.emplace_back(f, Scalar(1));
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.rows(r, f).is_zero())
                v.emplace_back(e.pivots[r], -e.rows(r, f));
        basis.add(std::move(v));
    }
    return Subspace::from_echelon(cols_, basis.echelon());
}

// ----------------------------------------------------------- dense entry points

Echelon rref(const Matrix& m)
{
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        red.add(m.row(r));
    return red.echelon();
}

std::size_t rank(const Matrix& m)
{
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        red.add(m.row(r));
    return red.rank();
}

Subspace kernel(const Matrix& a)
{
    RowReducer red(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        red.add(a.row(r));
    return red.nullspace();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw InvalidInput("solve: row count mismatch");
    const std::size_t n = a.cols();
    RowReducer red(n + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Vector row = a.row(r);
        Vector rhs = b.row(r);
        row.insert(row.end(), rhs.begin(), rhs.end());
        red.add(row);
    }
    Echelon e = red.echelon();
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n)
            return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(e.pivots[r], c) = e.rows(r, n + c);
    }
    return x;
}

Scalar det(const Matrix& a)
{
    if (!a.is_square())
        throw InvalidInput("det: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return Scalar(1);

    // Clear denominators row by row, then Bareiss on integers.
    std::vector<mpz_class> m(n * n);
    mpq_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
        scale *= l;
        for (std::size_t c = 0; c < n; ++c)
            m[r * n + c] = a(r, c).raw().get_num() * (l / a(r, c).raw().get_den());
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap * n + k] == 0)
                ++swap;
            if (swap == n)
                return Scalar(0);
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m[k * n + c], m[swap * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    mpq_class d(m[n * n - 1] * sign);
    d /= scale;
    return Scalar(d);
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (!a.is_square())
        throw InvalidInput("inverse: matrix is not square");
    const std::size_t n = a.rows();
    RowReducer red(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < n; ++c)
            if (!a(r, c).is_zero())
                row.emplace_back(c, a(r, c));
        row.emplace_back(n + r, Scalar(1));
        red.add(std::move(row));
    }
    Echelon e = red.echelon();
    for (std::size_t r = 0; r < n; ++r)
        if (e.pivots[r] != r)
            return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.rows(r, n + c);
    return inv;
}

// -------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots))
{
}

Subspace Subspace::zero(std::size_t ambient)
{
    return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient)
{
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        piv[i] = i;
    return Subspace(ambient, Matrix::identity(ambient), std::move(piv));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    RowReducer red(ambient);
    for (const auto& v : vectors)
        red.add(v);
    return from_echelon(ambient, red.echelon());
}

Subspace Subspace::row_space(const Matrix& m)
{
    return from_echelon(m.cols(), rref(m));
}

Subspace Subspace::from_echelon(std::size_t ambient, Echelon e)
{
    if (e.rows.cols() != ambient)
        throw InvalidInput("Subspace: basis width does not match ambient dimension");
    return Subspace(ambient, std::move(e.rows), std::move(e.pivots));
}

std::vector<Vector> Subspace::vectors() const
{
    std::vector<Vector> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        out.push_back(basis_.row(r));
    return out;
}

void Subspace::require_same_ambient(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw InvalidInput("subspace operation: ambient dimension mismatch");
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_)
        throw InvalidInput("Subspace::contains: vector length mismatch");
    Vector w = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        Scalar f = v[pivots_[r]];
        if (f.is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            w[c].sub_product(f, basis_(r, c));
    }
    return cofrob::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const
{
    require_same_ambient(other);
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    require_same_ambient(other);
    auto vs = vectors();
    auto ws = other.vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(ambient_, vs);
}

Subspace Subspace::annihilator() const
{
    RowReducer red(ambient_);
    for (std::size_t r = 0; r < dim(); ++r)
        red.add(basis_.row(r));
    return red.nullspace();
}

Subspace Subspace::intersection(const Subspace& other) const
{
    require_same_ambient(other);
    return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::image(const Matrix& map) const
{
    if (map.cols() != ambient_)
        throw InvalidInput("Subspace::image: map domain mismatch");
    std::vector<Vector> imgs;
    for (std::size_t r = 0; r < dim(); ++r)
        imgs.push_back(map * basis_.row(r));
    return span(map.rows(), imgs);
}

Subspace Subspace::preimage(const Matrix& map) const
{
    if (map.rows() != ambient_)
        throw InvalidInput("Subspace::preimage: map codomain mismatch");
    Subspace ann = annihilator();
    if (ann.dim() == 0)
        return full(map.cols());
    return kernel(ann.basis() * map);
}

Subspace Subspace::tensor_right_full(std::size_t m) const
{
    // rows w_r (x) e_j, ordered by (r, j); already reduced.
    Matrix b(dim() * m, ambient_ * m);
    std::vector<std::size_t> piv;
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t row = r * m + j;
            for (std::size_t i = 0; i < ambient_; ++i)
                if (!basis_(r, i).is_zero())
                    b(row, i * m + j) = basis_(r, i);
            piv.push_back(pivots_[r] * m + j);
        }
    return Subspace(ambient_ * m, std::move(b), std::move(piv));
}

Subspace Subspace::tensor_left_full(std::size_t m) const
{
    // rows e_i (x) w_r, ordered by (i, r); already reduced.
    Matrix b(m * dim(), m * ambient_);
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t r = 0; r < dim(); ++r) {
            std::size_t row = i * dim() + r;
            for (std::size_t t = 0; t < ambient_; ++t)
                if (!basis_(r, t).is_zero())
                    b(row, i * ambient_ + t) = basis_(r, t);
            piv.push_back(i * ambient_ + pivots_[r]);
        }
    return Subspace(m * ambient_, std::move(b), std::move(piv));
}

}  // namespace cofrob

namespace cofrob {

std::vector<Scalar> characteristic_polynomial(const Matrix& a)
{
    if (!a.is_square())
        throw InvalidInput("characteristic_polynomial: matrix is not square");
    // Faddeev-LeVerrier: M_k = a M_{k-1} + p_{n-k+1} I, p_{n-k} = -tr(a M_k) / k.
    const std::size_t n = a.rows();
    std::vector<Scalar> p(n + 1);
    p[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) += p[n - k + 1];
        Matrix am = a * m;
        Scalar tr;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        p[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return p;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v, unsigned long trial_limit)
{
    v = abs(v);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (unsigned long d = 2; d <= trial_limit && mpz_class(d) * d <= v; ++d) {
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e)
            factors.emplace_back(mpz_class(d), e);
    }
    if (v > 1)
        factors.emplace_back(v, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& x)
{
    Scalar acc;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc *= x;
        acc += poly[i];
    }
    return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly, unsigned long trial_limit)
{
    std::vector<Scalar> p = poly;
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    std::vector<Scalar> roots;
    if (p.size() <= 1)
        return roots;
    std::size_t low = 0;
    while (p[low].is_zero())
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    if (low + 1 == p.size())
        return roots;

    mpz_class lcm_den = 1;
    for (const auto& c : p)
        lcm_den = lcm(lcm_den, c.denominator());
    mpz_class a0 = p[low].numerator() * (lcm_den / p[low].denominator());
    mpz_class an = p.back().numerator() * (lcm_den / p.back().denominator());

    auto nums = positive_divisors(a0, trial_limit);
    auto dens = positive_divisors(an, trial_limit);
    for (const auto& q : dens)
        for (const auto& r : nums)
            for (int s : {1, -1}) {
                mpq_class v(mpz_class(s * r), q);
                v.canonicalize();
                Scalar cand(v);
                if (evaluate(p, cand).is_zero())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace cofrob
