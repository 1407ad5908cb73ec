#include "numindex/io.hpp"

#include "numindex/errors.hpp"

#include <fstream>
#include <sstream>

namespace numindex {

namespace {

nlohmann::json load_json(const std::string& text, const char* what)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string(what) + ": " + e.what());
    }
}

nlohmann::json load_json_file(const std::string& path, const char* what)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError(std::string(what) + ": cannot open '" + path +
                                "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_json(buffer.str(), what);
}

bool json_is_exact_scalar(const nlohmann::json& j)
{
    return j.is_number_integer() || j.is_number_unsigned() || j.is_string();
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

Eigen::Index parse_dim(const std::string& text)
{
    try {
        const long d = std::stol(text);
        if (d < 1 || d > 16)
            throw PreconditionError("dimension out of range: " + text);
        return static_cast<Eigen::Index>(d);
    } catch (const std::logic_error&) {
        throw PreconditionError("malformed dimension: " + text);
    }
}

}   // namespace

Rat rational_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    if (j.is_number_unsigned())
        return Rat(j.get<unsigned long long>());
    if (j.is_string())
        return parse_fraction(j.get<std::string>());
    throw PreconditionError(
        "expected an integer or a \"p/q\" string, got: " + j.dump());
}

nlohmann::json rational_to_json(const Rat& value)
{
    return to_fraction(value);
}

nlohmann::json vec_to_json(const RatVec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(rational_to_json(v(i)));
    return out;
}

nlohmann::json mat_to_json(const RatMat& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        out.push_back(vec_to_json(m.row(i).transpose()));
    return out;
}

nlohmann::json float_vec_to_json(const Eigen::VectorXd& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v(i));
    return out;
}

nlohmann::json float_mat_to_json(const Eigen::MatrixXd& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        out.push_back(float_vec_to_json(m.row(i).transpose()));
    return out;
}

ParsedSpace space_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw PreconditionError("space description must be a JSON object");
    const std::string kind = j.value("kind", "polytope");
    const std::string name = j.value("name", "space");

    if (kind == "lp") {
        if (!j.contains("dim") || !j["dim"].is_number_integer())
            throw PreconditionError("lp space needs an integer \"dim\"");
        if (!j.contains("p") || !j["p"].is_number())
            throw PreconditionError("lp space needs a numeric \"p\"");
        return {Space::lp_space(name, j["dim"].get<long>(),
                                j["p"].get<double>()),
                {}};
    }
    if (kind != "polytope")
        throw PreconditionError("unknown space kind: " + kind);

    if (!j.contains("vertices") || !j["vertices"].is_array() ||
        j["vertices"].empty())
        throw PreconditionError("polytope space needs a nonempty \"vertices\" array");

    std::vector<RatVec> rows;
    Eigen::Index dim = -1;
    for (const nlohmann::json& row : j["vertices"]) {
        if (!row.is_array() || row.empty())
            throw PreconditionError("vertex rows must be nonempty arrays");
        if (dim < 0)
            dim = static_cast<Eigen::Index>(row.size());
        if (static_cast<Eigen::Index>(row.size()) != dim)
            throw PreconditionError("vertex rows have inconsistent lengths");
        RatVec v(dim);
        Eigen::Index i = 0;
        for (const nlohmann::json& entry : row) {
            if (!json_is_exact_scalar(entry))
                throw PreconditionError(
                    "vertex coordinates must be exact (integers or \"p/q\"), got: " +
                    entry.dump());
            v(i++) = rational_from_json(entry);
        }
        rows.push_back(std::move(v));
    }
    if (j.contains("dim") && j["dim"].is_number_integer() &&
        j["dim"].get<long>() != dim)
        throw PreconditionError("declared dim does not match the vertex rows");

    std::vector<std::string> warnings;
    if (j.value("symmetrize", false)) {
        const std::size_t before = rows.size();
        std::vector<RatVec> closed = rows;
        for (const RatVec& v : rows)
            closed.push_back(-v);
        closed = sorted_unique(std::move(closed));
        if (closed.size() != sorted_unique(rows).size())
            warnings.push_back("vertex list closed under negation (" +
                               std::to_string(before) + " -> " +
                               std::to_string(closed.size()) + " vertices)");
        rows = std::move(closed);
    }
    return {Space::polytope(name, stack_rows(rows, dim)), std::move(warnings)};
}

ParsedSpace parse_space_arg(const std::string& arg)
{
    if (arg == "octagon")
        return {Space::octagon(), {}};
    const std::vector<std::string> parts = split(arg, ':');
    if (parts.size() >= 2 &&
        (parts[0] == "linf" || parts[0] == "l1" || parts[0] == "l2" ||
         parts[0] == "lp")) {
        if (parts[0] == "lp") {
            if (parts.size() != 3)
                throw PreconditionError("lp alias is lp:<dim>:<p>");
            const Eigen::Index d = parse_dim(parts[1]);
            double p = 0.0;
            try {
                p = std::stod(parts[2]);
            } catch (const std::logic_error&) {
                throw PreconditionError("malformed exponent: " + parts[2]);
            }
            return {Space::lp_space(arg, d, p), {}};
        }
        if (parts.size() != 2)
            throw PreconditionError("alias takes one dimension: " + arg);
        const Eigen::Index d = parse_dim(parts[1]);
        if (parts[0] == "linf")
            return {Space::cube(d), {}};
        if (parts[0] == "l1")
            return {Space::cross_polytope(d), {}};
        return {Space::lp_space(arg, d, 2.0), {}};
    }
    if (!arg.empty() && arg.front() == '{')
        return space_from_json(load_json(arg, "inline space"));
    return space_from_json(load_json_file(arg, "space file"));
}

nlohmann::json space_to_json(const Space& s)
{
    nlohmann::json out;
    out["name"] = s.name();
    out["dim"] = static_cast<long>(s.dim());
    if (s.is_polytope()) {
        out["kind"] = "polytope";
        out["vertices"] = mat_to_json(s.vertices());
    } else {
        out["kind"] = "lp";
        out["p"] = s.p_exponent();
    }
    return out;
}

ParsedMatrix matrix_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty())
        throw PreconditionError("matrix must be a nonempty JSON 2-d array");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    bool exact = true;
    for (const nlohmann::json& row : j) {
        if (!row.is_array() || row.empty())
            throw PreconditionError("matrix rows must be nonempty arrays");
        if (cols < 0)
            cols = static_cast<Eigen::Index>(row.size());
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw PreconditionError("matrix rows have inconsistent lengths");
        for (const nlohmann::json& entry : row) {
            if (entry.is_number_float())
                exact = false;
            else if (!json_is_exact_scalar(entry))
                throw PreconditionError("matrix entries must be numbers or \"p/q\" strings");
        }
    }

    ParsedMatrix out;
    out.exact = exact;
    if (exact) {
        out.rational = RatMat(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index k = 0; k < cols; ++k)
                out.rational(i, k) = rational_from_json(j[i][k]);
        out.floating = to_float(out.rational);
    } else {
        out.floating = Eigen::MatrixXd(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index k = 0; k < cols; ++k) {
                const nlohmann::json& entry = j[i][k];
                out.floating(i, k) = entry.is_number_float()
                                         ? entry.get<double>()
                                         : to_double(rational_from_json(entry));
            }
        }
    }
    return out;
}

ParsedMatrix parse_matrix_arg(const std::string& arg)
{
    if (!arg.empty() && arg.front() == '[')
        return matrix_from_json(load_json(arg, "inline matrix"));
    return matrix_from_json(load_json_file(arg, "matrix file"));
}

Operator make_operator(const Space& s, const ParsedMatrix& m)
{
    if (m.exact)
        return Operator(s, m.rational);
    return Operator(s, m.floating);
}

nlohmann::json make_report(const std::string& command, const Space& space,
                           nlohmann::json inputs, nlohmann::json result,
                           nlohmann::json certifications,
                           nlohmann::json provenance)
{
    nlohmann::json report;
    report["command"] = command;
    report["space"] = space_to_json(space);
    report["inputs"] = std::move(inputs);
    report["result"] = std::move(result);
    report["certifications"] = std::move(certifications);
    report["provenance"] = std::move(provenance);
    return report;
}

}   // namespace numindex
