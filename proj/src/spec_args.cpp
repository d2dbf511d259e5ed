#include "seqspace/spec_args.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seqspace/errors.hpp"

namespace seqspace {

namespace {

using nlohmann::json;

bool uses_vars(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Var: return true;
        case ExprKind::Number: return false;
        default: break;
    }
    if (e.a && uses_vars(*e.a)) return true;
    if (e.b && uses_vars(*e.b)) return true;
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError(ValidationError::Code::InvalidSpec, "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/// "list:1,0,3/4;tail=zero|const:c|repeat" -> explicit prefix + tail rule.
SeqSpec parse_list_shorthand(const std::string& body) {
    std::string values_part = body;
    Tail tail = Tail::zero();
    std::size_t semi = body.find(';');
    if (semi != std::string::npos) {
        values_part = body.substr(0, semi);
        std::string tail_part = strip(body.substr(semi + 1));
        if (tail_part.rfind("tail=", 0) != 0)
            throw ValidationError(ValidationError::Code::InvalidSpec,
                                  "list shorthand expects ;tail=zero|const:c|repeat");
        std::string rule = tail_part.substr(5);
        if (rule == "zero")
            tail = Tail::zero();
        else if (rule == "repeat")
            tail = Tail::repeat_last();
        else if (rule.rfind("const:", 0) == 0)
            tail = Tail::constant_of(Rational::parse(strip(rule.substr(6))));
        else
            throw ValidationError(ValidationError::Code::InvalidSpec,
                                  "unknown tail rule \"" + rule + "\"");
    }
    std::vector<Rational> prefix;
    std::stringstream ss(values_part);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (!item.empty()) prefix.push_back(Rational::parse(item));
    }
    if (prefix.empty())
        throw ValidationError(ValidationError::Code::InvalidSpec, "list shorthand has no values");
    return SeqSpec::explicit_list(std::move(prefix), tail);
}

/// CSV produced by the sequence commands: optional header, last field of
/// each row is the value. Becomes an explicit prefix with a zero tail.
SeqSpec parse_csv_values(const std::string& text) {
    std::vector<Rational> vals;
    std::stringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        line = strip(line);
        if (line.empty()) continue;
        std::size_t comma = line.rfind(',');
        std::string cell = strip(comma == std::string::npos ? line : line.substr(comma + 1));
        if (first) {
            first = false;
            bool numeric = !cell.empty() && (std::isdigit(static_cast<unsigned char>(cell[0])) ||
                                             cell[0] == '-' || cell[0] == '+' || cell[0] == '.');
            if (!numeric) continue;  // header row
        }
        vals.push_back(Rational::parse(cell));
    }
    if (vals.empty())
        throw ValidationError(ValidationError::Code::InvalidSpec, "no values found in CSV input");
    return SeqSpec::explicit_list(std::move(vals), Tail::zero());
}

double infer_bound(const SeqSpec& spec, double flag, const char* which) {
    if (flag > 0.0) return flag;
    if (spec.kind() == SeqSpec::Kind::ClosedForm && !uses_vars(*spec.expr()))
        return spec.value_f64(0);
    if (spec.kind() == SeqSpec::Kind::Explicit) {
        double best = 0.0;
        for (const Rational& r : spec.prefix()) best = std::max(best, r.to_double());
        if (spec.tail().rule == Tail::Rule::Constant)
            best = std::max(best, spec.tail().constant.to_double());
        return best;
    }
    throw ValidationError(ValidationError::Code::InvalidSpec,
                          std::string("cannot infer a bound for a non-constant ") + which +
                              " expression; pass --" + which + "-bound");
}

}  // namespace

SeqSpec parse_seq_arg(const std::string& raw) {
    std::string arg = strip(raw);
    if (arg.empty())
        throw ValidationError(ValidationError::Code::InvalidSpec, "empty sequence spec");
    if (arg[0] == '@') {
        std::string text = read_file(arg.substr(1));
        std::string t = strip(text);
        if (!t.empty() && t[0] == '{') return parse_seq_spec(json::parse(t));
        return parse_csv_values(text);
    }
    if (arg[0] == '{') return parse_seq_spec(json::parse(arg));
    if (arg.rfind("list:", 0) == 0) return parse_list_shorthand(arg.substr(5));
    return SeqSpec::closed_form(arg);
}

MatrixSpec parse_matrix_arg(const std::string& raw) {
    std::string arg = strip(raw);
    if (arg.empty())
        throw ValidationError(ValidationError::Code::InvalidSpec, "empty matrix spec");
    if (arg[0] == '@') return parse_matrix_spec(json::parse(read_file(arg.substr(1))));
    if (arg[0] == '{') return parse_matrix_spec(json::parse(arg));
    if (arg == "zero") return MatrixSpec::banded({});
    if (arg == "identity") return MatrixSpec::banded({{0, Expr::number(1)}});
    if (arg.rfind("diag:", 0) == 0)
        return MatrixSpec::banded({{0, parse_expr(arg.substr(5))}});
    if (arg.rfind("triangle:", 0) == 0) return MatrixSpec::triangle(parse_expr(arg.substr(9)));
    return MatrixSpec::closed_form(parse_expr(arg));
}

ExponentSeq parse_exponent_arg(const std::string& raw, double bound_flag, const char* which) {
    SeqSpec spec = parse_seq_arg(raw);
    double bound = infer_bound(spec, bound_flag, which);
    return ExponentSeq(std::move(spec), bound);
}

}  // namespace seqspace
