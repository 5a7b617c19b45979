#include "svlab/table.hpp"

#include "svlab/kernels.hpp"

#include <cmath>
#include <sstream>

namespace svlab {

namespace {

double powg(long g, int e) { return std::pow(static_cast<double>(g), e); }

TableRow row_from(const std::string& stratum, const std::string& mult, const std::string& loops,
                  const std::string& orders, const std::string& fixed, const std::string& formula,
                  const PiLaurent& coeff, int g_power, long g, ErrorClass err,
                  const std::string& ref) {
    TableRow r;
    r.stratum = stratum;
    r.multiplicity = mult;
    r.loops = loops;
    r.zero_orders = orders;
    r.fixed_any = fixed;
    r.formula = formula;
    r.coefficient = coeff.str();
    r.g_power = g_power;
    r.value = coeff.to_double() * powg(g, g_power);
    r.error = err;
    r.reference = ref;
    return r;
}

TableRow bound_row(const std::string& stratum, const std::string& mult, const std::string& loops,
                   const std::string& orders, const std::string& fixed,
                   const std::string& formula, const std::string& ref) {
    TableRow r;
    r.stratum = stratum;
    r.multiplicity = mult;
    r.loops = loops;
    r.zero_orders = orders;
    r.fixed_any = fixed;
    r.formula = "<= C^p * " + formula;
    r.coefficient = "bound-only";
    r.error = ErrorClass::BoundOnly;
    r.reference = ref;
    return r;
}

}  // namespace

std::vector<TableRow> generate_table(long g) {
    if (g < 4) throw std::invalid_argument("table needs g >= 4");
    std::vector<TableRow> rows;
    const long l_principal = 2 * g - 2;
    const int p_inst = 2;

    // block 1: any stratum / odd / even / non-hyp component
    const std::string any = "any stratum or odd/even/non-hyp component";
    rows.push_back(row_from(any, "1/any", "distinct", "m1,m2 (inst. 1,1)", "fixed",
                            "(m1+1)*(m2+1)",
                            asym_distinct_any_multiplicity(1, 1).coefficient, 0, g,
                            ErrorClass::OneOverG, "distinct-any"));
    rows.push_back(row_from(any, "p<=min(m1,m2)+1 (inst. p=2)", "distinct",
                            "m1,m2 (inst. 1,1; l=2g-2)", "fixed",
                            "(pi^2/6)^(p-1)*(m1+1)*(m2+1)/(2g+l-2p)^(2p-2)",
                            asym_distinct_fixed(1, 1, p_inst, g, l_principal).coefficient, 0, g,
                            ErrorClass::OneOverGTimesCp, "distinct-fixed-p"));
    rows.push_back(row_from(any, ">=min(m1,m2)+2", "distinct", "m1,m2", "fixed", "0",
                            PiLaurent::zero(), 0, g, ErrorClass::Exact, "distinct-fixed-zero"));
    rows.push_back(row_from(any, "1/any", "loops", "m (inst. 1)", "fixed", "(m+1)^2/2",
                            asym_loop(1, 1, LoopMode::OneFixedZeroTotal, g, l_principal).coefficient,
                            0, g, ErrorClass::OneOverG, "loop-any"));
    rows.push_back(bound_row(any, "p>=1", "loops", "m", "fixed",
                             "(m+1)*(m-2p+1)/(2g+l-3)^(2p-2)", "loop-fixed-bound"));
    {
        StratumSignature principal(std::vector<int>(static_cast<std::size_t>(l_principal), 1));
        rows.push_back(row_from(any, "1/any", "any", "(inst. principal)", "any",
                                "(2g+l-2)^2/2", asym_total(principal).coefficient, 0, g,
                                ErrorClass::OneOverG, "all-saddle-connections"));
    }

    // block 2: principal stratum
    const std::string prin = "H(1,...,1)";
    rows.push_back(row_from(prin, "1/any", "distinct", "", "any", "8*g^2",
                            PiLaurent(Rational(8)), 2, g, ErrorClass::OneOverG,
                            "principal-distinct"));
    rows.push_back(row_from(prin, "2", "distinct", "", "any", "pi^2/12",
                            PiLaurent::monomial(make_rational(1, 12), 2), 0, g,
                            ErrorClass::OneOverG, "principal-distinct-p2"));
    rows.push_back(row_from(prin, "1/any", "loops", "", "any", "2*g",
                            PiLaurent(Rational(2)), 1, g, ErrorClass::OneOverG,
                            "principal-loops"));
    rows.push_back(row_from(prin, "p>=1 (inst. p=2)", "loops", "", "any",
                            "(1/2)*(pi^2/3)^(p-1)/(4g-5)^(2p-3)",
                            asym_principal_loops(p_inst, g).coefficient, 0, g,
                            ErrorClass::OneOverGTimesCp, "principal-loops-p"));

    // block 3: H(g-1,g-1) and its odd/even/non-hyp components
    const std::string gm1 = "H(g-1,g-1) or odd/even/non-hyp component";
    rows.push_back(row_from(gm1, "1/any", "distinct", "", "fixed/any", "g^2",
                            PiLaurent::one(), 2, g, ErrorClass::OneOverG, "gm1gm1-distinct"));
    rows.push_back(row_from(gm1, "p<=g (inst. p=2)", "distinct", "", "fixed/any",
                            "(1/4)*(pi^2/6)^(p-1)/(2g-1)^(2p-4)",
                            asym_special_families(SpecialFamily::Gm1Gm1Distinct, p_inst, g).coefficient,
                            0, g, ErrorClass::OneOverGTimesCp, "gm1gm1-distinct-p"));
    rows.push_back(row_from(gm1, "1/any", "loops", "", "fixed", "g^2/2",
                            PiLaurent(make_rational(1, 2)), 2, g, ErrorClass::OneOverG,
                            "gm1gm1-loops-fixed"));
    rows.push_back(row_from(gm1, "p>=1 (inst. p=2)", "loops", "", "fixed",
                            "(1/8)*(pi^2/6)^(p-1)/(2g-1)^(2p-4)",
                            asym_special_families(SpecialFamily::Gm1Gm1LoopsFixed, p_inst, g).coefficient,
                            0, g, ErrorClass::OneOverGTimesCp, "gm1gm1-loops-fixed-p"));
    rows.push_back(row_from(gm1, "p>=1 (inst. p=2)", "loops", "", "any",
                            "(1/4)*(pi^2/6)^(p-1)/(2g-1)^(2p-4)",
                            asym_special_families(SpecialFamily::Gm1Gm1LoopsAny, p_inst, g).coefficient,
                            0, g, ErrorClass::OneOverGTimesCp, "gm1gm1-loops-any-p"));

    // block 4: H^hyp(g-1,g-1)
    const std::string hyp2 = "H^hyp(g-1,g-1)";
    rows.push_back(row_from(hyp2, "1", "distinct", "", "fixed/any", "(2/pi)*g^2",
                            PiLaurent::monomial(Rational(2), -1), 2, g, ErrorClass::OneOverG,
                            "hyp-gm1gm1-distinct-p1"));
    rows.push_back(row_from(hyp2, "2", "distinct", "", "fixed/any", "(1-2/pi)*g^2",
                            PiLaurent::one() - PiLaurent::monomial(Rational(2), -1), 2, g,
                            ErrorClass::OneOverGQuarter, "hyp-gm1gm1-distinct-p2"));
    rows.push_back(row_from(hyp2, ">=3", "distinct", "", "fixed/any", "0", PiLaurent::zero(), 0,
                            g, ErrorClass::Exact, "hyp-gm1gm1-distinct-p3"));
    rows.push_back(row_from(hyp2, "1", "loops", "", "fixed/any", "(2/pi^2)*g^2",
                            PiLaurent::monomial(Rational(2), -2), 2, g, ErrorClass::OneOverG,
                            "hyp-gm1gm1-loops-p1"));
    rows.push_back(row_from(hyp2, "2", "loops", "", "fixed/any", "(1/2-2/pi^2)*g^2",
                            PiLaurent(make_rational(1, 2)) - PiLaurent::monomial(Rational(2), -2),
                            2, g, ErrorClass::OneOverGQuarter, "hyp-gm1gm1-loops-p2"));
    rows.push_back(row_from(hyp2, ">=3", "loops", "", "fixed/any", "0", PiLaurent::zero(), 0, g,
                            ErrorClass::Exact, "hyp-gm1gm1-loops-p3"));

    // block 5: H(2g-2) and its odd/even components
    const std::string minimal = "H(2g-2) or odd/even component";
    rows.push_back(row_from(minimal, "1/any", "loops", "", "fixed/any", "2*g^2",
                            PiLaurent(Rational(2)), 2, g, ErrorClass::OneOverG, "minimal-loops"));
    rows.push_back(row_from(minimal, "p>=1 (inst. p=2)", "loops", "", "fixed/any",
                            "(1/2)*(pi^2/6)^(p-1)/(2g-2)^(2p-4)",
                            asym_special_families(SpecialFamily::MinimalLoops, p_inst, g).coefficient,
                            0, g, ErrorClass::OneOverGTimesCp, "minimal-loops-p"));

    // block 6: H^hyp(2g-2)
    const std::string hypm = "H^hyp(2g-2)";
    rows.push_back(row_from(hypm, "1", "loops", "", "fixed/any", "(2/pi+2/pi^2)*g^2",
                            PiLaurent::monomial(Rational(2), -1) + PiLaurent::monomial(Rational(2), -2),
                            2, g, ErrorClass::OneOverG, "hyp-minimal-loops-p1"));
    rows.push_back(row_from(hypm, "2", "loops", "", "fixed/any", "(3/2-2/pi-2/pi^2)*g^2",
                            PiLaurent(make_rational(3, 2)) - PiLaurent::monomial(Rational(2), -1) -
                                PiLaurent::monomial(Rational(2), -2),
                            2, g, ErrorClass::OneOverGQuarter, "hyp-minimal-loops-p2"));
    rows.push_back(row_from(hypm, ">=3", "loops", "", "fixed/any", "0", PiLaurent::zero(), 0, g,
                            ErrorClass::Exact, "hyp-minimal-loops-p3"));

    // bound-only rows carry no numeric value
    for (auto& r : rows)
        if (r.error == ErrorClass::BoundOnly) r.value.reset();
    return rows;
}

namespace {
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "stratum,multiplicity,loops,zero_orders,fixed_any,formula,coefficient,g_power,value,"
           "error_class,reference\n";
    out.precision(12);
    for (const auto& r : rows) {
        out << csv_escape(r.stratum) << "," << csv_escape(r.multiplicity) << ","
            << csv_escape(r.loops) << "," << csv_escape(r.zero_orders) << ","
            << csv_escape(r.fixed_any) << "," << csv_escape(r.formula) << ","
            << csv_escape(r.coefficient) << "," << r.g_power << ",";
        if (r.value) out << *r.value;
        out << "," << csv_escape(to_string(r.error)) << "," << csv_escape(r.reference) << "\n";
    }
    return out.str();
}

std::string table_to_json(const std::vector<TableRow>& rows, long g) {
    std::ostringstream out;
    out.precision(12);
    out << "{\"g\":" << g << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) out << ",";
        out << "{\"stratum\":\"" << r.stratum << "\",\"multiplicity\":\"" << r.multiplicity
            << "\",\"loops\":\"" << r.loops << "\",\"zero_orders\":\"" << r.zero_orders
            << "\",\"fixed_any\":\"" << r.fixed_any << "\",\"formula\":\"" << r.formula
            << "\",\"coefficient\":\"" << r.coefficient << "\",\"g_power\":" << r.g_power
            << ",\"value\":";
        if (r.value) {
            out << *r.value;
        } else {
            out << "null";
        }
        out << ",\"error_class\":\"" << to_string(r.error) << "\",\"reference\":\"" << r.reference
            << "\"}";
    }
    out << "]}";
    return out.str();
}

}  // namespace svlab
