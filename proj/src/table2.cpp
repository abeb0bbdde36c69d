#include "garnier/table2.hpp"

#include <stdexcept>

namespace garnier {

namespace {
// index, orbit size, group order (-1 = infinite), p1 p2 p3 p4 pinf p21 p31 p32 p41 p42 p43
// phi = (1+sqrt5)/2, psi = (-1+sqrt5)/2, r2 = sqrt2
const std::vector<Table2Row> kRows = {
    {1, 36, 24, {"1", "0", "r2", "0", "0", "-1", "0", "-r2", "0", "r2", "1"}},
    {2, 36, 12, {"1", "0", "1", "0", "0", "1", "0", "1", "1", "0", "1"}},
    {3, 40, 24, {"-1", "1", "r2", "1", "-r2", "-1", "-r2", "0", "1", "1", "r2"}},
    {4, 40, 60, {"psi", "psi", "phi", "psi", "-phi", "-psi", "0", "1", "-psi", "-psi", "0"}},
    {5, 40, 60, {"-phi", "-phi", "phi", "-psi", "-psi", "psi", "-phi", "-phi", "1", "1", "-1"}},
    {6, 45, 60, {"psi", "psi", "psi", "-psi", "phi", "-psi", "-psi", "-phi", "-1", "psi", "psi"}},
    {7, 45, 60, {"phi", "phi", "phi", "phi", "psi", "phi", "1", "phi", "1", "2", "1"}},
    {8, 48, 24, {"r2", "0", "0", "0", "r2", "r2", "-1", "r2", "0", "0", "1"}},
    {9, 72, 24, {"0", "0", "-1", "0", "0", "r2", "-r2", "1", "-1", "0", "0"}},
    {10, 72, 24, {"-r2", "0", "0", "-1", "-r2", "0", "-1", "-1", "r2", "-r2", "0"}},
    {11, 81, 60, {"psi", "-psi", "-1", "psi", "phi", "psi", "1", "-1", "-psi", "-1", "0"}},
    {12, 81, 60, {"phi", "phi", "-1", "-phi", "psi", "phi", "-psi", "-phi", "-1", "-1", "1"}},
    {13, 96, 24, {"r2", "0", "0", "0", "0", "1", "-r2", "r2", "1", "-2", "r2"}},
    {14, 96, 60, {"-psi", "-psi", "-psi", "-psi", "-psi", "-psi", "-phi", "-psi", "-psi", "-psi", "-psi"}},
    {15, 96, 60, {"-phi", "-phi", "phi", "-phi", "-phi", "phi", "-phi", "-phi", "2", "1", "-1"}},
    {16, 96, 24, {"0", "0", "1", "0", "-1", "2", "0", "0", "-r2", "r2", "-1"}},
    {17, 105, 60, {"-phi", "1", "phi", "-1", "psi", "-phi", "-1", "phi", "phi", "psi", "-1"}},
    {18, 105, 60, {"1", "-psi", "-psi", "-1", "phi", "-psi", "-psi", "-phi", "-1", "0", "0"}},
    {19, 108, 60, {"phi", "1", "-phi", "-phi", "phi", "phi", "-psi", "-phi", "-2", "0", "2"}},
    {20, 108, 60, {"psi", "-psi", "psi", "1", "-psi", "-1", "-psi", "-2", "psi", "-psi", "0"}},
    {21, 120, 24, {"1", "0", "-1", "0", "-1", "0", "-1", "r2", "-r2", "-1", "0"}},
    {22, 144, 60, {"psi", "1", "-psi", "-psi", "-1", "psi", "-1", "-psi", "-1", "-psi", "-phi"}},
    {23, 144, 60, {"-1", "-phi", "-1", "-phi", "phi", "1", "phi", "1", "1", "psi", "1"}},
    {24, 144, 24, {"0", "1", "0", "0", "r2", "0", "2", "0", "1", "-r2", "-1"}},
    {25, 192, -1, {"2", "2", "-2", "-2", "-2", "-psi", "-1", "psi", "-phi", "-phi", "1"}},
    {26, 192, 24, {"0", "0", "0", "0", "0", "-r2", "-2", "-r2", "-1", "-r2", "-1"}},
    {27, 200, 60, {"0", "0", "-psi", "phi", "-psi", "psi", "1", "1", "-psi", "-psi", "psi"}},
    {28, 200, 60, {"phi", "0", "0", "psi", "phi", "-psi", "0", "phi", "1", "phi", "-phi"}},
    {29, 205, 60, {"-1", "1", "1", "phi", "-psi", "0", "-1", "phi", "-phi", "phi", "0"}},
    {30, 216, 24, {"-1", "0", "0", "0", "0", "0", "r2", "1", "-r2", "0", "1"}},
    {31, 220, 60, {"-1", "1", "psi", "-1", "psi", "-1", "-phi", "psi", "-psi", "0", "-phi"}},
    {32, 220, 60, {"-phi", "-1", "-1", "-phi", "1", "phi", "psi", "phi", "phi", "psi", "psi"}},
    {33, 240, 60, {"1", "-1", "-psi", "0", "psi", "0", "-phi", "psi", "1", "psi", "phi"}},
    {34, 240, 60, {"-psi", "0", "-psi", "0", "-psi", "0", "1", "0", "-phi", "-psi", "0"}},
    {35, 240, 60, {"1", "-1", "-phi", "phi", "0", "-1", "-psi", "0", "psi", "-phi", "-phi"}},
    {36, 240, 60, {"0", "phi", "-phi", "0", "-phi", "1", "0", "-1", "phi", "-1", "0"}},
    {37, 300, 60, {"phi", "1", "1", "1", "1", "1", "0", "1", "1", "phi", "1"}},
    {38, 300, 60, {"1", "psi", "1", "1", "-1", "-1", "-psi", "-1", "0", "0", "-psi"}},
    {39, 360, 60, {"0", "psi", "0", "-1", "psi", "-1", "-1", "-1", "1", "1", "0"}},
    {40, 360, 60, {"-psi", "0", "0", "-phi", "1", "phi", "-phi", "2", "1", "0", "0"}},
    {41, 360, 60, {"1", "0", "-phi", "0", "-phi", "-1", "0", "0", "0", "phi", "psi"}},
    {42, 480, 60, {"1", "-1", "1", "1", "-1", "-1", "0", "0", "-psi", "-1", "1"}},
    {43, 480, 60, {"0", "0", "0", "psi", "psi", "-phi", "0", "1", "0", "1", "-1"}},
    {44, 480, 60, {"0", "0", "phi", "0", "phi", "0", "1", "0", "psi", "-phi", "-psi"}},
    {45, 580, 60, {"-psi", "0", "0", "0", "phi", "0", "phi", "-1", "0", "-2", "-1"}},
    {46, 600, 60, {"0", "-1", "0", "-psi", "-1", "0", "-psi", "1", "-phi", "0", "-1"}},
    {47, 600, 60, {"-phi", "1", "0", "0", "1", "-1", "psi", "-1", "psi", "-1", "-2"}},
    {48, 900, 60, {"0", "0", "0", "-1", "psi", "0", "phi", "psi", "-psi", "-phi", "1"}},
    {49, 900, 60, {"0", "0", "0", "-1", "-phi", "0", "1", "psi", "-phi", "psi", "psi"}},
    {50, 1200, 60, {"0", "0", "-psi", "0", "0", "psi", "1", "1", "-1", "-1", "1"}},
    {51, 1200, 60, {"0", "phi", "0", "0", "0", "-psi", "1", "psi", "1", "0", "1"}},
    {52, 2160, 60, {"1", "0", "0", "0", "-1", "0", "0", "2", "-1", "-phi", "phi"}},
    {53, 2160, 60, {"0", "0", "0", "-1", "0", "psi", "psi", "-2", "0", "1", "1"}},
    {54, 3072, 60, {"0", "0", "0", "0", "0", "-phi", "0", "-1", "-phi", "-psi", "1"}},
};
}  // namespace

const std::vector<Table2Row>& table2_rows() { return kRows; }

const Table2Row& table2_row(int index) {
    if (index < 1 || index > static_cast<int>(kRows.size())) throw std::out_of_range("Table 2 has rows 1..54");
    return kRows[index - 1];
}

Number table2_symbol(const std::string& token) {
    const Field* k = field_sqrt2_sqrt5();
    std::string t = token;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    Number v(k);
    if (t == "r2") {
        v = Number(field_sqrt2(), ZPoly{0, 1}, 1).lift_to(k);
    } else if (t == "phi" || t == "psi") {
        Number s5 = Number(field_sqrt5(), ZPoly{0, 1}, 1).lift_to(k);
        v = (s5 + Number(k, t == "phi" ? 1 : -1)) * Number(k, mpq_class(1, 2));
    } else {
        v = Number(k, std::stol(t));
    }
    return neg ? -v : v;
}

PartialPoint table2_partial(const Table2Row& row) {
    PartialPoint p;
    for (int i = 0; i < 11; ++i) p[i] = table2_symbol(row.entries[i]);
    return p;
}

std::vector<Point> table2_completions(const Table2Row& row) { return complete_point(table2_partial(row)); }

}  // namespace garnier
