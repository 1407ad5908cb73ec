#pragma once

#include "numindex/geometry.hpp"
#include "numindex/operators.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace numindex {

/**
 * JSON conventions: rationals travel as "p/q" strings (or plain JSON
 * integers on input), so round-trips are exact.  A JSON float anywhere
 * in a matrix downgrades the whole matrix to float entries, which
 * routes the computation to the sampling paths.
 */
Rat rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rat& value);
nlohmann::json vec_to_json(const RatVec& v);
nlohmann::json mat_to_json(const RatMat& m);
nlohmann::json float_vec_to_json(const Eigen::VectorXd& v);
nlohmann::json float_mat_to_json(const Eigen::MatrixXd& m);

struct ParsedSpace {
    Space space;
    std::vector<std::string> warnings;
};

/**
 * Space schema:
 *   {"name": str?, "kind": "polytope", "vertices": [[rat, ...], ...],
 *    "symmetrize": bool?}
 *   {"name": str?, "kind": "lp", "dim": int, "p": number}
 *
 * With "symmetrize": true a half vertex list is closed under negation
 * (with a warning); otherwise an asymmetric list is an error.
 */
ParsedSpace space_from_json(const nlohmann::json& j);

/**
 * Accepts a builtin alias (linf:N, l1:N, l2:N, lp:N:P, octagon), an
 * inline JSON object, or a path to a JSON file.
 */
ParsedSpace parse_space_arg(const std::string& arg);

nlohmann::json space_to_json(const Space& s);

struct ParsedMatrix {
    bool exact = false;
    RatMat rational;
    Eigen::MatrixXd floating;
};

/** A JSON 2-d array; see the rational conventions above. */
ParsedMatrix matrix_from_json(const nlohmann::json& j);

/** Inline JSON (leading '[') or a path to a JSON file. */
ParsedMatrix parse_matrix_arg(const std::string& arg);

Operator make_operator(const Space& s, const ParsedMatrix& m);

/** The uniform report envelope emitted by the CLI in JSON mode. */
nlohmann::json make_report(const std::string& command, const Space& space,
                           nlohmann::json inputs, nlohmann::json result,
                           nlohmann::json certifications,
                           nlohmann::json provenance);

}   // namespace numindex
