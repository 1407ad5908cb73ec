#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <string>
#include <vector>

namespace numindex {

using Rat = boost::multiprecision::mpq_rational;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/** Render a rational as "p/q", or "p" when the denominator is one. */
std::string to_fraction(const Rat& value);

/**
 * Parse "p/q" or "p" with optional sign.  Throws PreconditionError on
 * malformed input or a zero denominator.
 */
Rat parse_fraction(const std::string& text);

double to_double(const Rat& value);

/** Exact conversion; every finite double is a rational. */
Rat rat_from_double(double value);

/** Three-way lexicographic comparison by coordinates. */
int lex_compare(const RatVec& a, const RatVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

/** Sort rows lexicographically and drop exact duplicates. */
std::vector<RatVec> sorted_unique(std::vector<RatVec> rows);

/** Convert between a list of row vectors and a stacked matrix. */
RatMat stack_rows(const std::vector<RatVec>& rows, Eigen::Index cols);
std::vector<RatVec> split_rows(const RatMat& m);

RatVec rat_vec(std::initializer_list<Rat> coords);
RatMat rat_mat(std::initializer_list<std::initializer_list<Rat>> rows);

Eigen::VectorXd to_float(const RatVec& v);
Eigen::MatrixXd to_float(const RatMat& m);
RatMat rat_from_float(const Eigen::MatrixXd& m);

/** Rank by exact Gaussian elimination. */
Eigen::Index rat_rank(RatMat m);

/** Any nonzero solution of m·x = 0, or nullopt when the kernel is trivial. */
std::optional<RatVec> rat_nullspace_vector(const RatMat& m);

/** Solve a square system exactly; nullopt when singular. */
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

}   // namespace numindex
