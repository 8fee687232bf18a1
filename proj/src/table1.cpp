#include "rigidcalc/table1.hpp"

#include "rigidcalc/convolution.hpp"
#include "rigidcalc/errors.hpp"

#include <sstream>

namespace rigidcalc {

namespace {

JordanBlock unipotent(std::size_t size, long mult) { return {RootOfUnity::one(), size, static_cast<std::size_t>(mult)}; }
JordanBlock minus(std::size_t size, long mult) { return {RootOfUnity::minus_one(), size, static_cast<std::size_t>(mult)}; }

} // namespace

std::array<JordanType, 3> table1_expectation(long i)
{
    if (i < 0)
        throw Error(ErrorCode::NegativeIndex, "table index must be >= 0");
    const auto top = static_cast<std::size_t>(i + 1);
    const JordanType at_inf({unipotent(top, 1)});
    switch (i % 4) {
    case 0:
        return {JordanType({unipotent(1, i / 2), minus(1, i / 2 + 1)}),
                JordanType({minus(1, 1), unipotent(2, i / 2)}), at_inf};
    case 1:
        return {JordanType({unipotent(2, (i + 1) / 2)}),
                JordanType({minus(2, 1), minus(1, (i - 1) / 2), unipotent(1, (i - 1) / 2)}), at_inf};
    case 2:
        return {JordanType({unipotent(1, i / 2), minus(1, i / 2 + 1)}),
                JordanType({unipotent(3, 1), unipotent(2, (i - 2) / 2)}), at_inf};
    default:
        return {JordanType({unipotent(2, (i + 1) / 2)}),
                JordanType({unipotent(2, 1), unipotent(1, (i - 3) / 2), minus(1, (i + 1) / 2)}), at_inf};
    }
}

bool Table1Report::all_match() const
{
    for (const auto& row : rows)
        if (!row.matches_paper)
            return false;
    return true;
}

Table1Report run_table1(long max_i)
{
    if (max_i < 0 || max_i > kTable1MaxIndex)
        throw Error(ErrorCode::InvalidArgument,
                    "max_i must lie in [0, " + std::to_string(kTable1MaxIndex) + "], got " + std::to_string(max_i));
    Table1Report report;
    for (long i = 0; i <= max_i; ++i) {
        const MonodromyTuple f = build_F(i);
        Table1Row row;
        row.i = i;
        row.rank = f.rank();
        const auto locals = f.all_local_monodromies();
        for (std::size_t k = 0; k < 3; ++k)
            row.computed[k] = jordan_type(locals[k], f.order());
        row.rigidity_index = rigidity_index(f);
        row.irreducible = is_absolutely_irreducible(f);
        row.regular = certify_regular(f);
        row.matches_paper = row.rank == static_cast<std::size_t>(i + 1) && row.computed == table1_expectation(i);
        report.rows.push_back(std::move(row));
    }
    return report;
}

io::Json to_json(const Table1Report& report)
{
    io::Json rows = io::Json::array();
    for (const auto& row : report.rows) {
        rows.push_back({
            {"i", row.i},
            {"rank", row.rank},
            {"jordan_at_0", row.computed[0].notation()},
            {"jordan_at_1", row.computed[1].notation()},
            {"jordan_at_inf", row.computed[2].notation()},
            {"rigidity_index", row.rigidity_index},
            {"irreducible", row.irreducible},
            {"regular_certificate", row.regular.to_string()},
            {"matches_paper", row.matches_paper},
        });
    }
    return {{"rows", rows}, {"all_match", report.all_match()}};
}

std::string render_text(const Table1Report& report)
{
    std::ostringstream os;
    for (const auto& row : report.rows) {
        os << "i=" << row.i << " rank=" << row.rank << " | at 0: " << row.computed[0].notation()
           << " | at 1: " << row.computed[1].notation() << " | at inf: " << row.computed[2].notation()
           << " | index=" << row.rigidity_index << " irreducible=" << (row.irreducible ? "yes" : "no") << " "
           << row.regular.to_string() << " " << (row.matches_paper ? "MATCH" : "MISMATCH") << "\n";
    }
    os << (report.all_match() ? "all rows match" : "MISMATCH against expected table") << "\n";
    return os.str();
}

} // namespace rigidcalc
