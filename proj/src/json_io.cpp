#include "rigidcalc/json_io.hpp"

#include "rigidcalc/errors.hpp"

namespace rigidcalc::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        schema_error(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        schema_error(std::string("missing key '") + key + "'");
    return *it;
}

long integer_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        schema_error(std::string("'") + key + "' must be an integer");
    return v.get<long>();
}

mpz_class integer_text(const Json& v)
{
    if (v.is_number_integer())
        return mpz_class(v.get<long>());
    if (!v.is_string())
        schema_error("integers are encoded as decimal strings");
    const Rational r = parse_rational(v.get<std::string>());
    if (r.get_den() != 1)
        schema_error("expected an integer, got '" + v.get<std::string>() + "'");
    return r.get_num();
}

} // namespace

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string dump(const Json& j) { return j.dump(); }

Json to_json(const CycNumber& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return {{"N", x.order()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const Json& j)
{
    const long order = integer_field(j, "N");
    if (order < 1)
        throw Error(ErrorCode::InvalidOrder, "N must be >= 1");
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array())
        schema_error("'coeffs' must be an array");
    std::vector<Rational> values;
    for (const auto& c : coeffs) {
        if (!c.is_array() || c.size() != 2)
            schema_error("each coefficient is a [numerator, denominator] pair");
        const mpz_class num = integer_text(c[0]);
        const mpz_class den = integer_text(c[1]);
        if (den <= 0)
            schema_error("denominators must be positive");
        Rational r(num, den);
        r.canonicalize();
        values.push_back(r);
    }
    const auto degree = static_cast<std::size_t>(euler_phi(order));
    if (values.size() == degree) {
        // Already in the reduced basis; pad to length N and normalize (a no-op
        // on reduced input).
        values.resize(static_cast<std::size_t>(order), Rational(0));
        return CycNumber::normalize(values, order);
    }
    if (values.size() == static_cast<std::size_t>(order))
        return CycNumber::normalize(values, order);
    schema_error("coefficient count " + std::to_string(values.size()) + " is neither phi(N) nor N");
}

Json to_json(const ExactMatrix& m)
{
    Json entries = Json::array();
    for (const auto& e : m.entries())
        entries.push_back(to_json(e));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const Json& j)
{
    const long rows = integer_field(j, "rows");
    const long cols = integer_field(j, "cols");
    if (rows < 1 || cols < 1)
        schema_error("matrix dimensions must be positive");
    const Json& entries = field(j, "entries");
    if (!entries.is_array())
        schema_error("'entries' must be an array");
    std::vector<CycNumber> values;
    for (const auto& e : entries)
        values.push_back(cyc_from_json(e));
    if (values.size() != static_cast<std::size_t>(rows * cols))
        throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(values)};
}

Json to_json(const MonodromyTuple& t)
{
    Json punctures = Json::array();
    for (const auto& p : t.finite_punctures())
        punctures.push_back(p.label());
    Json matrices = Json::array();
    for (const auto& m : t.matrices())
        matrices.push_back(to_json(m));
    return {{"N", t.order()}, {"n", t.rank()}, {"punctures", punctures}, {"matrices", matrices}};
}

MonodromyTuple tuple_from_json(const Json& j)
{
    const long order = integer_field(j, "N");
    const long n = integer_field(j, "n");
    const Json& punctures = field(j, "punctures");
    const Json& matrices = field(j, "matrices");
    if (!punctures.is_array() || !matrices.is_array())
        schema_error("'punctures' and 'matrices' must be arrays");
    std::vector<Puncture> labels;
    for (const auto& p : punctures) {
        if (!p.is_string())
            schema_error("puncture labels are strings");
        labels.push_back(Puncture::parse(p.get<std::string>()));
    }
    std::vector<ExactMatrix> mats;
    for (const auto& m : matrices) {
        mats.push_back(matrix_from_json(m));
        if (mats.back().rows() != static_cast<std::size_t>(n))
            throw Error(ErrorCode::DimensionMismatch, "matrix size does not match n = " + std::to_string(n));
    }
    return MonodromyTuple::make(order, std::move(labels), std::move(mats));
}

Json to_json(const JordanType& jt)
{
    Json out = Json::array();
    for (const auto& b : jt.blocks())
        out.push_back({{"eigenvalue", to_json(b.eigenvalue.to_cyc())}, {"size", b.size}, {"mult", b.multiplicity}});
    return out;
}

Json to_json(const ReductionTrace& trace)
{
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json twist = Json::array();
        for (const auto& x : s.twist.scalars)
            twist.push_back(to_json(x));
        steps.push_back({{"twist", twist}, {"lambda", to_json(s.lambda)}, {"rank", s.resulting_rank}});
    }
    return {{"steps", steps}};
}

std::vector<CycNumber> polynomial_from_json(const Json& j)
{
    const long order = integer_field(j, "N");
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty())
        schema_error("'coeffs' must be a nonempty array");
    std::vector<CycNumber> out;
    for (const auto& c : coeffs) {
        const CycNumber x = cyc_from_json(c);
        out.push_back(x.lift(lcm_long(order, x.order())));
    }
    return out;
}

Json polynomial_to_json(const std::vector<CycNumber>& coeffs)
{
    long order = 1;
    for (const auto& c : coeffs)
        order = lcm_long(order, c.order());
    Json list = Json::array();
    for (const auto& c : coeffs)
        list.push_back(to_json(c.lift(order)));
    return {{"N", order}, {"coeffs", list}};
}

MultiplicityFunction multiplicity_from_json(const Json& j, long& order)
{
    order = integer_field(j, "N");
    if (order < 1)
        throw Error(ErrorCode::InvalidOrder, "N must be >= 1");
    const Json& entries = field(j, "m");
    if (!entries.is_array())
        schema_error("'m' must be an array");
    MultiplicityFunction m;
    for (const auto& e : entries) {
        const Json& zeta = field(e, "zeta");
        if (!zeta.is_string())
            schema_error("'zeta' must be a string such as \"zeta3^2\"");
        const long mult = integer_field(e, "mult");
        if (mult < 0)
            schema_error("multiplicities must be non-negative");
        if (mult > 0)
            m[RootOfUnity::parse(zeta.get<std::string>())] += static_cast<std::size_t>(mult);
    }
    return m;
}

} // namespace rigidcalc::io
