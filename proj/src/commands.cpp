#include "rigidcalc/commands.hpp"

#include "rigidcalc/convolution.hpp"
#include "rigidcalc/hypergeometric.hpp"
#include "rigidcalc/json_io.hpp"
#include "rigidcalc/purity.hpp"
#include "rigidcalc/table1.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rigidcalc::cli {

using io::Json;

namespace {

constexpr long kDefaultPrecisionBits = 256;

std::string read_source(const std::string& source)
{
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '['))
        return source;
    if (source == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(source);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + source + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MonodromyTuple load_tuple(const std::string& source) { return io::tuple_from_json(io::parse(read_source(source))); }

std::string jordan_or_note(const ExactMatrix& m, long order)
{
    try {
        return jordan_type(m, order).notation();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotQuasiUnipotent)
            throw;
        return "<not quasi-unipotent of order dividing " + std::to_string(order) + ">";
    }
}

void print_summary(const MonodromyTuple& t, std::ostream& out)
{
    out << "rank " << t.rank() << " over Q(zeta" << t.order() << ")\n";
    const auto punctures = t.all_punctures();
    const auto locals = t.all_local_monodromies();
    for (std::size_t k = 0; k < locals.size(); ++k)
        out << "at " << punctures[k].label() << ": " << jordan_or_note(locals[k], t.order()) << "\n";
}

void emit_tuple(const MonodromyTuple& t, bool json, const std::string& output_path, std::ostream& out)
{
    const std::string document = io::dump(io::to_json(t));
    if (!output_path.empty()) {
        std::ofstream file(output_path);
        if (!file)
            throw Error(ErrorCode::InvalidArgument, "cannot write '" + output_path + "'");
        file << document << "\n";
    }
    if (json)
        out << document << "\n";
    else
        print_summary(t, out);
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    if (!current.empty() || !out.empty())
        out.push_back(current);
    return out;
}

std::vector<RootOfUnity> parse_roots(const std::string& text)
{
    std::vector<RootOfUnity> out;
    for (const auto& item : split_list(text))
        out.push_back(RootOfUnity::parse(item));
    return out;
}

long precision_bits()
{
    if (const char* env = std::getenv("RIGIDCALC_PRECISION_BITS")) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || bits < 128)
            throw Error(ErrorCode::InvalidArgument, "RIGIDCALC_PRECISION_BITS must be an integer >= 128");
        return bits;
    }
    return kDefaultPrecisionBits;
}

} // namespace

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotRigid:
    case ErrorCode::NotIrreducible:
    case ErrorCode::NotQuasiUnipotent:
    case ErrorCode::NoProgress:
    case ErrorCode::RootFindingFailure:
    case ErrorCode::AlreadyRankOne:
        return kCheckFailed;
    default:
        return kInputError;
    }
}

std::vector<long> parse_integer_polynomial(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c == 'x' ? 'X' : c);
    auto bad = [&] { return Error(ErrorCode::ParseError, "cannot parse polynomial '" + text + "'"); };
    if (s.empty())
        throw bad();
    std::vector<long> coeffs;
    std::size_t pos = 0;
    auto read_digits = [&](long& value) {
        const std::size_t start = pos;
        value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            value = value * 10 + (s[pos++] - '0');
        return pos > start;
    };
    while (pos < s.size()) {
        long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw bad();
        }
        long coefficient = 1;
        long digits = 0;
        const bool has_number = read_digits(digits);
        if (has_number)
            coefficient = digits;
        long degree = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_number)
                throw bad();
            ++pos;
            if (pos >= s.size() || s[pos] != 'X')
                throw bad();
        }
        if (pos < s.size() && s[pos] == 'X') {
            ++pos;
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (!read_digits(degree))
                    throw bad();
            }
        } else if (!has_number) {
            throw bad();
        }
        if (coeffs.size() <= static_cast<std::size_t>(degree))
            coeffs.resize(static_cast<std::size_t>(degree) + 1, 0);
        coeffs[static_cast<std::size_t>(degree)] += sign * coefficient;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0)
        coeffs.pop_back();
    return coeffs;
}

CycNumber parse_scalar(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{')
        return io::cyc_from_json(io::parse(text));
    return RootOfUnity::parse(text).to_cyc();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with rigid local systems on the punctured projective line", "rigidcalc"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string input;
    std::string output_path;
    auto add_common = [&](CLI::App* sub, bool needs_tuple) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        if (needs_tuple)
            sub->add_option("--input,-i", input, "Tuple JSON file, inline JSON, or - for stdin")->required();
    };

    auto* jordan = app.add_subcommand("jordan", "Jordan type of the local monodromies");
    add_common(jordan, true);
    std::string point;
    jordan->add_option("--point", point, "Puncture label (0, 1, inf, ...); default all");

    auto* rigidity = app.add_subcommand("rigidity", "Rigidity index and centralizer dimensions");
    add_common(rigidity, true);
    bool expect_rigid = false;
    rigidity->add_flag("--expect-rigid", expect_rigid, "Exit 1 unless the index is 2");

    auto* irreducible = app.add_subcommand("irreducible", "Absolute irreducibility (Burnside)");
    add_common(irreducible, true);

    auto* regular = app.add_subcommand("regular", "Somewhere-maximal regularity certificate");
    add_common(regular, true);

    auto* mc = app.add_subcommand("mc", "Middle convolution MC_lambda");
    add_common(mc, true);
    std::string lambda_text;
    mc->add_option("--lambda", lambda_text, "Root of unity (1, -1, zeta3^2) or CycNumber JSON")->required();
    mc->add_option("--output,-o", output_path, "Also write the tuple JSON to this file");

    auto* twist = app.add_subcommand("twist", "Tensor with a rank-one system");
    add_common(twist, true);
    std::string scalars_text;
    twist->add_option("--scalars", scalars_text, "Comma-separated roots of unity, one per finite puncture")->required();
    twist->add_option("--output,-o", output_path, "Also write the tuple JSON to this file");

    auto* table1 = app.add_subcommand("table1", "Rebuild F_0..F_max and compare with the expected local monodromy");
    add_common(table1, false);
    long max_i = 8;
    table1->add_option("--max-i", max_i, "Largest index (0..12)");

    auto* family = app.add_subcommand("family", "Emit the tuple F_i");
    add_common(family, false);
    long family_index = 0;
    family->add_option("--i", family_index, "Index i >= 0")->required();
    family->add_option("--output,-o", output_path, "Also write the tuple JSON to this file");

    auto* hypergeom = app.add_subcommand("hypergeom", "Hypergeometric tuple from parameters or a multiplicity function");
    add_common(hypergeom, false);
    std::string a_text, b_text, m_text;
    long field_order = 0;
    hypergeom->add_option("--a", a_text, "Comma-separated roots of unity");
    hypergeom->add_option("--b", b_text, "Comma-separated roots of unity");
    hypergeom->add_option("--N", field_order, "Cyclotomic order (default: lcm of parameter orders)");
    hypergeom->add_option("--m", m_text, "Multiplicity function JSON (file or inline)");
    hypergeom->add_option("--output,-o", output_path, "Also write the tuple JSON to this file");

    auto* katz = app.add_subcommand("katz-reduce", "Katz rank reduction down to rank one");
    add_common(katz, true);

    auto* weil = app.add_subcommand("weil", "Weil-number check of a Frobenius polynomial");
    add_common(weil, false);
    std::string poly_text, q_text;
    long weight = 0;
    double tolerance = 1e-20;
    weil->add_option("--poly", poly_text, "Polynomial JSON or integer polynomial such as X^2-3X+2")->required();
    weil->add_option("--q", q_text, "Residue field size (prime power)")->required();
    weil->add_option("--w", weight, "Weight")->required();
    weil->add_option("--tol", tolerance, "Relative tolerance on |alpha|^2 = q^w");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }
    const bool json = format == "json";

    try {
        if (jordan->parsed()) {
            const MonodromyTuple t = load_tuple(input);
            std::vector<Puncture> points;
            if (point.empty())
                points = t.all_punctures();
            else
                points.push_back(Puncture::parse(point));
            Json results = Json::array();
            for (const auto& p : points) {
                const JordanType jt = jordan_type(t.monodromy_at(p), t.order());
                if (json)
                    results.push_back({{"point", p.label()}, {"jordan", io::to_json(jt)}, {"notation", jt.notation()}});
                else if (point.empty())
                    out << "at " << p.label() << ": " << jt.notation() << "\n";
                else
                    out << jt.notation() << "\n";
            }
            if (json)
                out << io::dump(point.empty() ? results : results.front()) << "\n";
            return kSuccess;
        }
        if (rigidity->parsed()) {
            const MonodromyTuple t = load_tuple(input);
            const long index = rigidity_index(t);
            const auto punctures = t.all_punctures();
            const auto locals = t.all_local_monodromies();
            Json dims = Json::array();
            for (std::size_t k = 0; k < locals.size(); ++k) {
                const std::size_t d = centralizer_dim(locals[k]);
                if (json)
                    dims.push_back({{"point", punctures[k].label()}, {"centralizer_dim", d}});
                else
                    out << "centralizer at " << punctures[k].label() << ": " << d << "\n";
            }
            if (json)
                out << io::dump({{"rigidity_index", index}, {"centralizers", dims}}) << "\n";
            else
                out << "rigidity index: " << index << "\n";
            return expect_rigid && index != 2 ? kCheckFailed : kSuccess;
        }
        if (irreducible->parsed()) {
            const bool result = is_absolutely_irreducible(load_tuple(input));
            if (json)
                out << io::dump({{"absolutely_irreducible", result}}) << "\n";
            else
                out << (result ? "absolutely irreducible" : "reducible") << "\n";
            return kSuccess;
        }
        if (regular->parsed()) {
            const RegularityCertificate cert = certify_regular(load_tuple(input));
            if (json)
                out << io::dump({{"certificate", cert.to_string()},
                                 {"witness", cert.witness ? Json(cert.witness->label()) : Json(nullptr)}})
                    << "\n";
            else
                out << cert.to_string() << "\n";
            return kSuccess;
        }
        if (mc->parsed()) {
            emit_tuple(middle_convolution(load_tuple(input), parse_scalar(lambda_text)), json, output_path, out);
            return kSuccess;
        }
        if (twist->parsed()) {
            RankOneData data;
            for (const auto& s : split_list(scalars_text))
                data.scalars.push_back(parse_scalar(s));
            emit_tuple(tensor_rank_one(load_tuple(input), data), json, output_path, out);
            return kSuccess;
        }
        if (table1->parsed()) {
            const Table1Report report = run_table1(max_i);
            out << (json ? io::dump(to_json(report)) + "\n" : render_text(report));
            return report.all_match() ? kSuccess : kCheckFailed;
        }
        if (family->parsed()) {
            emit_tuple(build_F(family_index), json, output_path, out);
            return kSuccess;
        }
        if (hypergeom->parsed()) {
            MonodromyTuple t = [&] {
                if (!m_text.empty()) {
                    if (!a_text.empty() || !b_text.empty())
                        throw Error(ErrorCode::InvalidArgument, "use either --m or --a/--b");
                    long order = 0;
                    const MultiplicityFunction m = io::multiplicity_from_json(io::parse(read_source(m_text)), order);
                    return from_multiplicity_function(m, field_order > 0 ? field_order : order);
                }
                if (a_text.empty() || b_text.empty())
                    throw Error(ErrorCode::EmptyParameters, "--a and --b are required without --m");
                const auto a = parse_roots(a_text);
                const auto b = parse_roots(b_text);
                long order = field_order;
                if (order <= 0) {
                    order = 1;
                    for (const auto* list : {&a, &b})
                        for (const auto& x : *list)
                            order = lcm_long(order, x.order());
                }
                return hypergeometric_tuple(a, b, order);
            }();
            emit_tuple(t, json, output_path, out);
            return kSuccess;
        }
        if (katz->parsed()) {
            const MonodromyTuple t = load_tuple(input);
            const ReductionTrace trace = katz_reduce(t);
            if (json) {
                out << io::dump(io::to_json(trace)) << "\n";
            } else {
                out << "start rank " << t.rank() << "\n";
                for (const auto& step : trace.steps) {
                    out << "twist (";
                    for (std::size_t k = 0; k < step.twist.scalars.size(); ++k)
                        out << (k ? ", " : "") << step.twist.scalars[k].to_string();
                    out << "), lambda " << step.lambda.to_string() << " -> rank " << step.resulting_rank << "\n";
                }
            }
            return kSuccess;
        }
        if (weil->parsed()) {
            WeilPolynomial p;
            const auto first = poly_text.find_first_not_of(" \t");
            if (first != std::string::npos && poly_text[first] == '{') {
                p.coeffs = io::polynomial_from_json(io::parse(poly_text));
            } else {
                for (long c : parse_integer_polynomial(poly_text))
                    p.coeffs.emplace_back(c);
            }
            const Rational q = parse_rational(q_text);
            if (q.get_den() != 1)
                throw Error(ErrorCode::InvalidArgument, "q must be an integer");
            p.q = q.get_num();
            p.weight = weight;
            const WeilVerdict verdict = weil_check(p, tolerance, precision_bits());
            if (json)
                out << io::dump({{"verdict", to_string(verdict)}, {"q", p.q.get_str()}, {"w", weight}}) << "\n";
            else
                out << to_string(verdict) << "\n";
            return verdict == WeilVerdict::Pass ? kSuccess : kCheckFailed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace rigidcalc::cli
