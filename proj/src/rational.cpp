#include "numindex/rational.hpp"

#include "numindex/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace numindex {

std::string to_fraction(const Rat& value)
{
    std::ostringstream out;
    out << value;
    return out.str();
}

Rat parse_fraction(const std::string& text)
{
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)))
            trimmed.push_back(c);
    }
    if (trimmed.empty())
        throw PreconditionError("empty rational literal");

    const auto slash = trimmed.find('/');
    const std::string num = trimmed.substr(0, slash);
    const std::string den =
        (slash == std::string::npos) ? "1" : trimmed.substr(slash + 1);

    auto is_integer = [](const std::string& s) {
        std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        return std::all_of(s.begin() + i, s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
    };
    if (!is_integer(num) || !is_integer(den))
        throw PreconditionError("malformed rational literal: " + text);

    // GMP's string reader rejects an explicit plus sign.
    auto drop_plus = [](const std::string& s) {
        return s.front() == '+' ? s.substr(1) : s;
    };
    boost::multiprecision::mpz_int n(drop_plus(num)), d(drop_plus(den));
    if (d == 0)
        throw PreconditionError("zero denominator in rational literal: " + text);
    return Rat(n, d);
}

double to_double(const Rat& value)
{
    return value.convert_to<double>();
}

Rat rat_from_double(double value)
{
    return Rat(value);
}

int lex_compare(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i))
            return -1;
        if (a(i) > b(i))
            return 1;
    }
    return 0;
}

bool lex_less(const RatVec& a, const RatVec& b)
{
    return lex_compare(a, b) < 0;
}

std::vector<RatVec> sorted_unique(std::vector<RatVec> rows)
{
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const RatVec& a, const RatVec& b) {
                               return lex_compare(a, b) == 0;
                           }),
               rows.end());
    return rows;
}

RatMat stack_rows(const std::vector<RatVec>& rows, Eigen::Index cols)
{
    RatMat m(static_cast<Eigen::Index>(rows.size()), cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != cols)
            throw PreconditionError("ragged row list");
        m.row(i) = rows[static_cast<std::size_t>(i)].transpose();
    }
    return m;
}

std::vector<RatVec> split_rows(const RatMat& m)
{
    std::vector<RatVec> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i).transpose());
    return rows;
}

RatVec rat_vec(std::initializer_list<Rat> coords)
{
    RatVec v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const Rat& c : coords)
        v(i++) = c;
    return v;
}

RatMat rat_mat(std::initializer_list<std::initializer_list<Rat>> rows)
{
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c =
        r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    RatMat m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != c)
            throw PreconditionError("ragged matrix literal");
        Eigen::Index j = 0;
        for (const Rat& entry : row)
            m(i, j++) = entry;
        ++i;
    }
    return m;
}

Eigen::VectorXd to_float(const RatVec& v)
{
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = to_double(v(i));
    return out;
}

Eigen::MatrixXd to_float(const RatMat& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = to_double(m(i, j));
    return out;
}

RatMat rat_from_float(const Eigen::MatrixXd& m)
{
    RatMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = rat_from_double(m(i, j));
    return out;
}

namespace {

// Row echelon by exact elimination; returns rank, optionally records the
// pivot column of every eliminated row.
Eigen::Index echelon(RatMat& m, std::vector<Eigen::Index>* pivot_cols)
{
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            m.row(pivot).swap(m.row(row));
        const Rat inv = Rat(1) / m(row, col);
        for (Eigen::Index c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Rat factor = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(row, c);
        }
        if (pivot_cols)
            pivot_cols->push_back(col);
        ++row;
    }
    return row;
}

}   // namespace

Eigen::Index rat_rank(RatMat m)
{
    return echelon(m, nullptr);
}

std::optional<RatVec> rat_nullspace_vector(const RatMat& m)
{
    RatMat reduced = m;
    std::vector<Eigen::Index> pivots;
    const Eigen::Index rank = echelon(reduced, &pivots);
    if (rank == m.cols())
        return std::nullopt;

    Eigen::Index free_col = -1;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
            free_col = c;
            break;
        }
    }
    RatVec x = RatVec::Zero(m.cols());
    x(free_col) = 1;
    for (Eigen::Index r = 0; r < rank; ++r)
        x(pivots[static_cast<std::size_t>(r)]) = -reduced(r, free_col);
    return x;
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b)
{
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw PreconditionError("rat_solve expects a square system");
    RatMat aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    std::vector<Eigen::Index> pivots;
    const Eigen::Index rank = echelon(aug, &pivots);
    if (rank < a.cols() || (!pivots.empty() && pivots.back() >= a.cols()))
        return std::nullopt;
    RatVec x(a.cols());
    for (Eigen::Index r = 0; r < rank; ++r)
        x(pivots[static_cast<std::size_t>(r)]) = aug(r, a.cols());
    return x;
}

}   // namespace numindex
