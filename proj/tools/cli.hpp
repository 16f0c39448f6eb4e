#pragma once

// onsager-kit: command line front end. Every subcommand builds a report
// struct; text and JSON output are both rendered from it.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace onsager::cli {

struct Options {
    std::string command;
    std::optional<std::string> preset;
    std::optional<std::string> matrix_file;
    long a = -2;
    unsigned rmax = 5;
    std::optional<int> height;
    std::optional<unsigned> jmax;
    bool json = false;
    std::string expr;
};

/// c holds decimal strings; JSON writes them as integers when they fit in 64 bits.
struct CoeffRowOut {
    long a = 0;
    unsigned r = 0;
    std::vector<std::string> c;
    friend bool operator==(const CoeffRowOut&, const CoeffRowOut&) = default;
};

struct CoeffsReport {
    int schema = 1;
    std::string command = "coeffs";
    long a = 0;
    std::vector<CoeffRowOut> rows;
    friend bool operator==(const CoeffsReport&, const CoeffsReport&) = default;
};

struct RelationOut {
    int i = 0;
    int j = 0;
    int a_ij = 0;
    std::string relation;
    friend bool operator==(const RelationOut&, const RelationOut&) = default;
};

struct RelationsReport {
    int schema = 1;
    std::string command = "relations";
    std::string type;
    std::vector<std::vector<int>> matrix;
    std::vector<RelationOut> relations;
    friend bool operator==(const RelationsReport&, const RelationsReport&) = default;
};

struct RootOut {
    std::string root;
    std::vector<int> coords;
    int level = 0;
    int height = 0;
    int multiplicity = 1;
    friend bool operator==(const RootOut&, const RootOut&) = default;
};

struct RootsReport {
    int schema = 1;
    std::string command = "roots";
    std::string type;
    std::string kind;
    int max_height = 0;
    std::vector<RootOut> roots;
    friend bool operator==(const RootsReport&, const RootsReport&) = default;
};

struct TermOut {
    std::string idx;
    long coeff = 0;
    friend bool operator==(const TermOut&, const TermOut&) = default;
};

struct StructEntryOut {
    std::vector<std::string> lhs;
    std::vector<TermOut> rhs;
    bool closed_form = true;
    friend bool operator==(const StructEntryOut&, const StructEntryOut&) = default;
};

struct StructReport {
    int schema = 1;
    std::string command = "structconst";
    std::string type;
    std::string basis;
    std::vector<StructEntryOut> entries;
    bool ok = true;
    friend bool operator==(const StructReport&, const StructReport&) = default;
};

struct CheckOut {
    std::string name;
    bool ok = false;
    std::string detail;
    friend bool operator==(const CheckOut&, const CheckOut&) = default;
};

struct VerifyReport {
    int schema = 1;
    std::string command = "verify";
    std::string type;
    std::vector<CheckOut> checks;
    bool ok = false;
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct CharRowOut {
    std::string idx;
    int height = 0;
    std::vector<std::string> values;
    friend bool operator==(const CharRowOut&, const CharRowOut&) = default;
};

struct CharsReport {
    int schema = 1;
    std::string command = "chars";
    std::string type;
    std::vector<int> even_columns;
    int window = 0;
    std::size_t dimension = 0;
    /// One column per j in E_A: the character with chi(Y_j) = 1, chi(Y_k) = 0 otherwise.
    std::vector<std::string> columns;
    std::vector<CharRowOut> rows;
    /// "match", "mismatch" or "none" (no closed form for this type).
    std::string closed_form = "none";
    bool ok = false;
    friend bool operator==(const CharsReport&, const CharsReport&) = default;
};

struct EvalReport {
    int schema = 1;
    std::string command = "eval";
    std::string type;
    std::string expr;
    std::string element;
    std::vector<TermOut> expansion;
    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

void to_json(nlohmann::json& j, const CoeffRowOut& row);
void from_json(const nlohmann::json& j, CoeffRowOut& row);
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CoeffsReport, schema, command, a, rows)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RelationOut, i, j, a_ij, relation)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RelationsReport, schema, command, type, matrix, relations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RootOut, root, coords, level, height, multiplicity)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RootsReport, schema, command, type, kind, max_height, roots)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TermOut, idx, coeff)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StructEntryOut, lhs, rhs, closed_form)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StructReport, schema, command, type, basis, entries, ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckOut, name, ok, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyReport, schema, command, type, checks, ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CharRowOut, idx, height, values)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CharsReport, schema, command, type, even_columns, window, dimension, columns, rows, closed_form, ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EvalReport, schema, command, type, expr, element, expansion)

/// Raised for bad flags or inputs; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CoeffsReport coeffs(const Options& o);
RelationsReport relations(const Options& o);
RootsReport roots(const Options& o);
StructReport structconst(const Options& o);
VerifyReport verify(const Options& o);
CharsReport chars(const Options& o);
EvalReport eval(const Options& o);

/// Parses argv, runs the subcommand and prints the report. Returns the exit
/// status: 0 pass, 1 a check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace onsager::cli
