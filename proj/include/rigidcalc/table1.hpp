#pragma once

#include "rigidcalc/json_io.hpp"
#include "rigidcalc/monodromy.hpp"

#include <array>
#include <string>
#include <vector>

namespace rigidcalc {

/// Local monodromy of F_i at 0, 1 and infinity as tabulated for the family,
/// one row per residue of i mod 4 with multiplicities depending on i.
std::array<JordanType, 3> table1_expectation(long i);

struct Table1Row {
    long i = 0;
    std::size_t rank = 0;
    std::array<JordanType, 3> computed; // at 0, 1, infinity
    long rigidity_index = 0;
    bool irreducible = false;
    RegularityCertificate regular;
    bool matches_paper = false;
};

struct Table1Report {
    std::vector<Table1Row> rows;

    bool all_match() const;
};

constexpr long kTable1MaxIndex = 12;

/// Builds F_0..F_max_i and compares each against table1_expectation.
/// Throws InvalidArgument unless 0 <= max_i <= 12.
Table1Report run_table1(long max_i);

io::Json to_json(const Table1Report& report);
std::string render_text(const Table1Report& report);

} // namespace rigidcalc
