#include "qseries/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "qseries/parser.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

namespace qseries {

namespace {

IdentityCase dsl_case(std::string id, std::string label, long default_order,
                      const std::string& lhs, const std::string& rhs,
                      bool require_zero = false) {
    IdentityCase c;
    c.id = std::move(id);
    c.label = std::move(label);
    c.description = lhs + "  =  " + rhs;
    c.default_order = default_order;
    c.require_zero = require_zero;
    const ExprPtr l = parse(lhs);
    const ExprPtr r = parse(rhs);
    c.build = [l, r](long order) {
        return std::make_pair(evaluate(l, order), evaluate(r, order));
    };
    return c;
}

IdentityCase oracle_case(std::string id, std::string label, long default_order,
                         const std::string& series, PartitionWeight variant,
                         std::string description) {
    IdentityCase c;
    c.id = std::move(id);
    c.label = std::move(label);
    c.description = std::move(description);
    c.default_order = default_order;
    const ExprPtr e = parse(series);
    c.build = [e, variant](long order) {
        return std::make_pair(evaluate(e, order),
                              TruncatedSeries(dp_signed_sums(order, variant)));
    };
    return c;
}

std::vector<IdentityCase> make_registry() {
    std::vector<IdentityCase> reg;

    // Triple-product vs bilateral-sum forms of the theta family.
    for (long k = 0; k <= 4; ++k) {
        const std::string lo = std::to_string(5 - k), hi = std::to_string(5 + k);
        const std::string mono_lo = 5 - k == 1 ? "q" : "q^" + lo;
        reg.push_back(dsl_case("eq:JTP.u" + std::to_string(k), "eq:JTP", 2000,
                               "u_" + std::to_string(k),
                               "(" + mono_lo + ",q^" + hi + ",q^10;q^10)"));
        reg.push_back(dsl_case("eq:JTP.udag" + std::to_string(k), "eq:JTP", 2000,
                               "udag_" + std::to_string(k),
                               "(-" + mono_lo + ",-q^" + hi + ",q^10;q^10)"));
        reg.push_back(dsl_case("eq:Uk.U" + std::to_string(k), "eq:Uk", 2000,
                               "U_" + std::to_string(k),
                               "(q^" + std::to_string(50 - 10 * k) + ",q^" +
                                   std::to_string(50 + 10 * k) + ",q^100;q^100)"));
    }
    reg.push_back(dsl_case("eq:Uk.U0Phi", "eq:Uk", 2000, "U_0", "Phi"));
    reg.push_back(dsl_case("eq:Uk.U5zero", "eq:Uk", 2000, "U_5", "0", true));

    // Generating functions against the partition dynamic program.
    reg.push_back(oracle_case("eq:qseriesXY.p5", "eq:qseriesXY", 500, "1/X",
                              PartitionWeight::Plain,
                              "coefficients of 1/X  =  Legendre-signed partition sums"));
    reg.push_back(oracle_case("eq:qseriesXY.p5dag", "eq:qseriesXY", 500, "1/Y",
                              PartitionWeight::Dagger,
                              "coefficients of 1/Y  =  dagger-signed partition sums"));

    reg.push_back(dsl_case("sec1.XYprod", "sec1", 1000, "X*Y", "(q^2,q^4,q^6,q^8;q^10)"));
    reg.push_back(dsl_case("sec1.XYeuler", "sec1", 1000, "(q^2,q^4,q^6,q^8;q^10)",
                           "(q^2;q^2)/(q^10;q^10)"));

    reg.push_back(dsl_case("eq:XYrels.1", "eq:XYrels", 1000, "1/X",
                           "Y*(q^10;q^10)/(q^2;q^2)"));
    reg.push_back(dsl_case("eq:XYrels.2", "eq:XYrels", 1000, "1/Y",
                           "X*(q^10;q^10)/(q^2;q^2)"));

    reg.push_back(dsl_case(
        "eq:phiR", "eq:phiR", 1000, "1/phi",
        "phi_25^5/phi_5^6*((R@(q->q^5))^-4 + q*(R@(q->q^5))^-3 + 2*q^2*(R@(q->q^5))^-2"
        " + 3*q^3*(R@(q->q^5))^-1 + 5*q^4 - 3*q^5*(R@(q->q^5)) + 2*q^6*(R@(q->q^5))^2"
        " - q^7*(R@(q->q^5))^3 + q^8*(R@(q->q^5))^4)"));
    reg.push_back(dsl_case(
        "eq:phi2R", "eq:phi2R", 1000, "1/phi_2",
        "phi_50^5/phi_10^6*(Rcal^-4 + q^2*Rcal^-3 + 2*q^4*Rcal^-2 + 3*q^6*Rcal^-1"
        " + 5*q^8 - 3*q^10*Rcal + 2*q^12*Rcal^2 - q^14*Rcal^3 + q^16*Rcal^4)"));

    reg.push_back(dsl_case("eq:R.sub10", "eq:R", 1000, "R@(q->q^10)", "Rcal"));
    reg.push_back(dsl_case("eq:RU", "eq:RU", 1000, "Rcal", "U_1*U_4/(U_2*U_3)"));

    reg.push_back(dsl_case("eq:XYR.X", "eq:XYR", 1000, "X", "(q^4,q^6;q^10)*R"));
    reg.push_back(dsl_case("eq:XYR.Y", "eq:XYR", 1000, "Y", "(q^2,q^8;q^10)*R^-1"));

    reg.push_back(dsl_case("eq:XYfracs.X", "eq:XYfracs", 1000, "phi_10^3/X",
                           "Y*phi_10^4/phi_2"));
    reg.push_back(dsl_case("eq:XYfracs.Y", "eq:XYfracs", 1000, "phi_10^3/Y",
                           "X*phi_10^4/phi_2"));

    reg.push_back(dsl_case("sec3.Xphi10", "sec3", 2000, "X*phi_10^4",
                           "u_1*udag_2*udag_3*u_4"));
    reg.push_back(dsl_case("sec3.Yphi10", "sec3", 2000, "Y*phi_10^4",
                           "udag_1*u_2*u_3*udag_4"));

    reg.push_back(dsl_case("eq:XYinv-u.X", "eq:XYinv-u", 1000, "phi_10^3/X",
                           "udag_1*u_2*u_3*udag_4/phi_2"));
    reg.push_back(dsl_case("eq:XYinv-u.Y", "eq:XYinv-u", 1000, "phi_10^3/Y",
                           "u_1*udag_2*udag_3*u_4/phi_2"));

    // The four 10-dissection displays.
    reg.push_back(dsl_case("lem:uiDissections.u1u3dag", "lem:uiDissections", 1000,
                           "u_1*udag_3",
                           "(U_1 + q^2*U_1*Rcal - q^4*U_3 - 2*q^6*U_2*U_3/Phi + 0*q^8)*Phi"));
    reg.push_back(dsl_case("lem:uiDissections.u1dagu3", "lem:uiDissections", 1000,
                           "udag_1*u_3",
                           "(U_1 - q^2*U_3*Rcal^-1 + q^4*U_3 + 0*q^6 - 2*q^8*U_1*U_4/Phi)*Phi"));
    reg.push_back(dsl_case("lem:uiDissections.u2u4dag", "lem:uiDissections", 1000,
                           "u_2*udag_4",
                           "U_1^2 + q*U_2*Phi + 0*q^2 - q^3*U_2^2 - q^4*U_1*U_3 - q^15*U_4^2"
                           " + 0*q^6 - q^7*U_4*Phi - q^8*U_3^2 + q^9*U_2*U_4"));
    reg.push_back(dsl_case("lem:uiDissections.u2dagu4", "lem:uiDissections", 1000,
                           "udag_2*u_4",
                           "U_1^2 - q*U_2*Phi + 0*q^2 + q^3*U_2^2 - q^4*U_1*U_3 + q^15*U_4^2"
                           " + 0*q^6 + q^7*U_4*Phi - q^8*U_3^2 - q^9*U_2*U_4"));

    // Even-support product form and the raw 50-modulus expansion behind it.
    reg.push_back(dsl_case("sec3.u1u3dagProduct", "sec3", 1000, "u_1*udag_3",
                           "(-q^2,q^4,q^6,-q^8,q^10,q^10;q^10)"));
    reg.push_back(dsl_case(
        "eq:u1-u3dgRaw", "eq:u1-u3dgRaw", 1000, "u_1*udag_3",
        "(-q^20,q^20,-q^30,q^30,q^50,q^50;q^50)"
        " - q^6*(-1,q^20,q^30,-q^50,q^50,q^50;q^50)"
        " + q^2*(q^10,-q^20,-q^30,q^40,q^50,q^50;q^50)"
        " + q^8*(1,-q^10,-q^40,q^50,q^50;q^50)"
        " - q^4*(-q^10,q^10,-q^40,q^40,q^50,q^50;q^50)"));
    reg.push_back(dsl_case("sec3.u1u3dagCoeff2", "sec3", 1000,
                           "(q^10,-q^20,-q^30,q^40,q^50,q^50;q^50)", "U_1*Rcal*Phi"));
    reg.push_back(dsl_case("sec3.u1u3dagCoeff6", "sec3", 1000,
                           "(-1,q^20,q^30,-q^50,q^50,q^50;q^50)", "2*U_2*U_3"));
    reg.push_back(dsl_case("sec3.minusOneHalves", "sec3", 1000, "(-1;q^50)",
                           "2*(-q^50;q^50)"));

    reg.push_back(dsl_case("lem:Udiff.minus", "lem:Udiff", 1000, "U_1*Phi*Rcal",
                           "U_1*U_2 - q^10*U_3*U_4"));
    reg.push_back(dsl_case("lem:Udiff.plus", "lem:Udiff", 1000, "U_3*Phi*Rcal^-1",
                           "U_1*U_2 + q^10*U_3*U_4"));

    reg.push_back(dsl_case(
        "hirschhorn.41.2.1", "hirschhorn", 1000, "(q,-q^2,-q^3,q^4,q^5,q^5;q^5)",
        "(q^3,q^4,q^6,q^7,q^10,q^10;q^10) - q*(q,q^2,q^8,q^9,q^10,q^10;q^10)"));
    reg.push_back(dsl_case(
        "hirschhorn.41.2.2", "hirschhorn", 1000, "(-q,q^2,q^3,-q^4,q^5,q^5;q^5)",
        "(q^3,q^4,q^6,q^7,q^10,q^10;q^10) + q*(q,q^2,q^8,q^9,q^10,q^10;q^10)"));
    reg.push_back(dsl_case("hirschhorn.41.2.1u", "hirschhorn", 1000, "X*phi_5^2",
                           "u_1*u_2 - q*u_3*u_4"));
    reg.push_back(dsl_case("hirschhorn.41.2.2u", "hirschhorn", 1000, "Y*phi_5^2",
                           "u_1*u_2 + q*u_3*u_4"));

    reg.push_back(dsl_case("sec3.XuR", "sec3", 1000, "X", "u_1*R/phi_10"));
    reg.push_back(dsl_case("sec3.YuR", "sec3", 1000, "Y", "u_3/R/phi_10"));

    reg.push_back(dsl_case("eq:Rpmalpha.1", "eq:Rpmalpha", 1000, "alpha*Phi*Rcal",
                           "alpha*beta - q^10*gamma*delta"));
    reg.push_back(dsl_case("eq:Rpmalpha.2", "eq:Rpmalpha", 1000, "gamma*Phi*Rcal^-1",
                           "alpha*beta + q^10*gamma*delta"));
    reg.push_back(dsl_case("eq:Ralpha", "eq:Ralpha", 1000, "Rcal",
                           "alpha*delta/(beta*gamma)"));

    reg.push_back(dsl_case("cor:Adiff0", "cor:Adiff0", 1000,
                           "alpha^3*delta^2*(alpha*beta + q^10*gamma*delta)"
                           " - beta^2*gamma^3*(alpha*beta - q^10*gamma*delta)",
                           "0", true));

    // Component consistency: pulling the 10-supported prefactor out of the
    // dissection, at the residues the two theorems live on.
    reg.push_back(dsl_case(
        "eq:XXYYdef.X", "eq:XXYYdef", 1000,
        "(1/X)[[0]]%10*(phi_10^9/phi_50^5) + q^2*((1/X)[[2]]%10*(phi_10^9/phi_50^5))"
        " + q^8*((1/X)[[8]]%10*(phi_10^9/phi_50^5))",
        "(phi_10^9/(X*phi_50^5))[[0]]%10 + q^2*((phi_10^9/(X*phi_50^5))[[2]]%10)"
        " + q^8*((phi_10^9/(X*phi_50^5))[[8]]%10)"));
    reg.push_back(dsl_case(
        "eq:XXYYdef.Y", "eq:XXYYdef", 1000,
        "(1/Y)[[0]]%10*(phi_10^9/phi_50^5) + q^6*((1/Y)[[6]]%10*(phi_10^9/phi_50^5))"
        " + q^8*((1/Y)[[8]]%10*(phi_10^9/phi_50^5))",
        "(phi_10^9/(Y*phi_50^5))[[0]]%10 + q^6*((phi_10^9/(Y*phi_50^5))[[6]]%10)"
        " + q^8*((phi_10^9/(Y*phi_50^5))[[8]]%10)"));

    // The type-2 component chain.
    const std::string x2 = "(phi_10^9/(X*phi_50^5))[[2]]%10";
    reg.push_back(dsl_case("eq:XXp2.mid1", "eq:XXp2", 1000, x2 + " * Rcal^-2",
                           "(Y*phi_10^4*(phi_10^6/(phi_2*phi_50^5)))[[2]]%10 * Rcal^-2"));
    reg.push_back(dsl_case("eq:XXp2.mid2", "eq:XXp2", 1000, x2 + " * Rcal^-2",
                           "(udag_1*u_2*u_3*udag_4*(phi_10^6/(phi_2*phi_50^5)))[[2]]%10"
                           " * Rcal^-2"));
    reg.push_back(dsl_case(
        "eq:XXp2", "eq:XXp2", 1000, x2 + " * Rcal^-2",
        "2*q^10*alpha^2*gamma*delta*Rcal^-6 - 4*q^10*alpha^3*delta*Rcal^-4"
        " + 6*q^20*alpha*gamma^2*delta*Rcal^-3 - 6*q^20*alpha^2*gamma*delta*Rcal^-1"
        " + 2*q^20*alpha^3*delta*Rcal + 2*q^30*alpha*gamma^2*delta*Rcal^2"
        " + alpha^3*Phi*Rcal^-5 + 2*q^10*alpha^3*Phi + 3*q^20*gamma^2*alpha*Phi*Rcal"
        " + (-alpha^2*Rcal^-6 - q^10*alpha*gamma*Rcal^-3 + 3*q^10*alpha^2*Rcal^-1"
        " + 5*q^20*gamma^2)*gamma*Phi*Rcal^-1"));
    reg.push_back(dsl_case(
        "eq:XXp3", "eq:XXp3", 1000, x2 + " * Rcal^-2",
        "-alpha^3*beta*Rcal^-6 + q^10*alpha^2*gamma*delta*Rcal^-6"
        " - 4*q^10*alpha^3*delta*Rcal^-4 - q^10*alpha^2*beta*gamma*Rcal^-3"
        " + 5*q^20*alpha*gamma^2*delta*Rcal^-3 + 3*q^10*alpha^3*beta*Rcal^-1"
        " - 3*q^20*alpha^2*gamma*delta*Rcal^-1 + 8*q^20*alpha*beta*gamma^2"
        " + 2*q^30*gamma^3*delta + 2*q^20*alpha^3*delta*Rcal"
        " + 2*q^30*alpha*gamma^2*delta*Rcal^2 + alpha^3*Phi*Rcal^-5"
        " + 2*q^10*alpha^3*Phi"));
    reg.push_back(dsl_case(
        "thm:X2Y6.X2R4", "thm:X2Y6", 1000, x2 + " * Rcal^4",
        "-4*q^10*alpha^3*delta*Rcal^2 - q^10*alpha^2*beta*gamma*Rcal^3"
        " + 5*q^20*alpha*gamma^2*delta*Rcal^3 + 5*q^10*alpha^3*beta*Rcal^5"
        " - 5*q^20*alpha^2*gamma*delta*Rcal^5 + 8*q^20*alpha*beta*gamma^2*Rcal^6"
        " + 2*q^30*gamma^3*delta*Rcal^6 + 2*q^20*alpha^3*delta*Rcal^7"
        " + 2*q^30*alpha*gamma^2*delta*Rcal^8"));
    reg.push_back(dsl_case(
        "thm:X2Y6.X", "thm:X2Y6", 1000, x2 + " * Rcal^4",
        "(alpha^3*delta^2*(alpha*beta + q^10*gamma*delta)"
        " - beta^2*gamma^3*(alpha*beta - q^10*gamma*delta))"
        "*(5*q^10*alpha^4*delta^3/(beta^5*gamma^5)"
        " + 2*q^20*alpha^6*delta^6/(beta^8*gamma^7))",
        true));

    // The type-6 component chain.
    const std::string y6 = "(phi_10^9/(Y*phi_50^5))[[6]]%10";
    reg.push_back(dsl_case("thm:X2Y6.Ymid1", "thm:X2Y6", 1000, y6 + " * Rcal^-4",
                           "(X*phi_10^4*(phi_10^6/(phi_2*phi_50^5)))[[6]]%10 * Rcal^-4"));
    reg.push_back(dsl_case("thm:X2Y6.Ymid2", "thm:X2Y6", 1000, y6 + " * Rcal^-4",
                           "(u_1*udag_2*udag_3*u_4*(phi_10^6/(phi_2*phi_50^5)))[[6]]%10"
                           " * Rcal^-4"));
    reg.push_back(dsl_case(
        "thm:X2Y6.Ypre", "thm:X2Y6", 1000, y6 + " * Rcal^-4",
        "-2*alpha^2*beta*gamma*Rcal^-8 + 2*q^10*beta*gamma^3*Rcal^-7"
        " + 6*q^10*alpha*beta*gamma^2*Rcal^-5 + 6*q^10*alpha^2*beta*gamma*Rcal^-3"
        " + 4*q^20*beta*gamma^3*Rcal^-2 + 2*q^20*alpha*beta*gamma^2"
        " + 5*alpha^3*Phi*Rcal^-5 - q^20*gamma^2*alpha*Phi*Rcal"
        " + (-3*alpha^2*Rcal^-6 + 2*q^10*gamma^2*Rcal^-5 - 3*q^10*alpha*gamma*Rcal^-3"
        " - q^10*alpha^2*Rcal^-1 - q^20*gamma^2)*gamma*Phi*Rcal^-1"));
    reg.push_back(dsl_case(
        "eq:YYp3", "eq:YYp3", 1000, y6 + " * Rcal^-4",
        "-2*alpha^2*beta*gamma*Rcal^-8 + 2*q^10*beta*gamma^3*Rcal^-7"
        " - 3*alpha^3*beta*Rcal^-6 - 3*q^10*alpha^2*gamma*delta*Rcal^-6"
        " + 8*q^10*alpha*beta*gamma^2*Rcal^-5 + 2*q^20*gamma^3*delta*Rcal^-5"
        " + 3*q^10*alpha^2*beta*gamma*Rcal^-3 - 3*q^20*alpha*gamma^2*delta*Rcal^-3"
        " + 4*q^20*beta*gamma^3*Rcal^-2 - q^10*alpha^3*beta*Rcal^-1"
        " - q^20*alpha^2*gamma*delta*Rcal^-1 + 5*alpha^3*Phi*Rcal^-5"));
    reg.push_back(dsl_case(
        "thm:X2Y6.Y6R2", "thm:X2Y6", 1000, y6 + " * Rcal^2",
        "-2*alpha^2*beta*gamma*Rcal^-2 + 2*q^10*beta*gamma^3*Rcal^-1 + 2*alpha^3*beta"
        " - 8*q^10*alpha^2*gamma*delta + 8*q^10*alpha*beta*gamma^2*Rcal"
        " + 2*q^20*gamma^3*delta*Rcal + 3*q^10*alpha^2*beta*gamma*Rcal^3"
        " - 3*q^20*alpha*gamma^2*delta*Rcal^3 + 4*q^20*beta*gamma^3*Rcal^4"
        " - q^10*alpha^3*beta*Rcal^5 - q^20*alpha^2*gamma*delta*Rcal^5"));
    reg.push_back(dsl_case(
        "thm:X2Y6.Y", "thm:X2Y6", 1000, y6 + " * Rcal^2",
        "(alpha^3*delta^2*(alpha*beta + q^10*gamma*delta)"
        " - beta^2*gamma^3*(alpha*beta - q^10*gamma*delta))"
        "*(2/(alpha*delta^2) + 2*q^10*alpha*delta/(beta^3*gamma^2)"
        " - q^10*alpha^4*delta^3/(beta^5*gamma^5))",
        true));

    // The type-0 and type-8 component combinations.
    const std::string x0 = "(phi_10^9/(X*phi_50^5))[[0]]%10";
    const std::string y0 = "(phi_10^9/(Y*phi_50^5))[[0]]%10";
    const std::string x8 = "(phi_10^9/(X*phi_50^5))[[8]]%10";
    const std::string y8 = "(phi_10^9/(Y*phi_50^5))[[8]]%10";
    reg.push_back(dsl_case(
        "thm:XY8-XY0.diff0", "thm:XY8-XY0", 1000, x0 + " - " + y0,
        "-2*q^10*alpha*beta*gamma^2*Rcal^-4 - 2*q^10*alpha^3*delta*Rcal^-3"
        " + 4*q^10*alpha^2*beta*gamma*Rcal^-2 + 4*q^20*alpha*gamma^2*delta*Rcal^-2"
        " - 6*q^20*beta*gamma^3*Rcal^-1 + 10*q^20*alpha^2*gamma*delta"
        " + 6*q^20*alpha*beta*gamma^2*Rcal - 4*q^20*alpha^3*delta*Rcal^2"
        " - 2*q^20*alpha^2*beta*gamma*Rcal^3 - 2*q^30*alpha*gamma^2*delta*Rcal^3"
        " - 2*q^30*beta*gamma^3*Rcal^4"
        " + (q^10*gamma^2*Rcal^-4 + q^10*alpha*gamma*Rcal^-2 + 3*q^10*alpha^2)"
        "*gamma*Phi*Rcal^-1 - 13*q^20*gamma^3*Phi"
        " - (5*q^10*alpha^2 + 8*q^20*gamma^2*Rcal - q^20*alpha*gamma*Rcal^3)"
        "*alpha*Phi*Rcal"));
    reg.push_back(dsl_case(
        "thm:XY8-XY0.X0Y0", "thm:XY8-XY0", 1000,
        "(" + x0 + " - " + y0 + ")*Rcal^-1",
        "(alpha^3*delta^2*(alpha*beta + q^10*gamma*delta)"
        " - beta^2*gamma^3*(alpha*beta - q^10*gamma*delta))"
        "*(beta^3*gamma^4/(alpha^5*delta^5) - 5*q^10/(beta^2*gamma)"
        " - 2*beta*gamma/(alpha^2*delta^3))",
        true));
    reg.push_back(dsl_case(
        "thm:XY8-XY0.sum8", "thm:XY8-XY0", 1000, x8 + " + " + y8,
        "-2*alpha^3*delta*Rcal^-4 - 2*alpha^2*beta*gamma*Rcal^-3"
        " + 2*q^10*alpha*gamma^2*delta*Rcal^-3 + 4*q^10*beta*gamma^3*Rcal^-2"
        " + 6*q^10*alpha^2*gamma*delta*Rcal^-1 + 10*q^10*alpha*beta*gamma^2"
        " + 6*q^10*alpha^3*delta*Rcal - 4*q^10*alpha^2*beta*gamma*Rcal^2"
        " + 4*q^20*alpha*gamma^2*delta*Rcal^2 - 2*q^20*beta*gamma^3*Rcal^3"
        " + 2*q^20*alpha^2*gamma*delta*Rcal^4"
        " - (alpha*gamma*Rcal^-3 + 8*alpha^2*Rcal^-1 - 5*q^10*gamma^2)"
        "*gamma*Phi*Rcal^-1 + 13*alpha^3*Phi"
        " + (3*q^10*gamma^2 - q^10*alpha*gamma*Rcal^2 + q^10*alpha^2*Rcal^4)"
        "*alpha*Phi*Rcal"));
    reg.push_back(dsl_case(
        "thm:XY8-XY0.X8Y8", "thm:XY8-XY0", 1000,
        "(" + x8 + " + " + y8 + ")*Rcal",
        "(alpha^3*delta^2*(alpha*beta + q^10*gamma*delta)"
        " - beta^2*gamma^3*(alpha*beta - q^10*gamma*delta))"
        "*(5/(alpha*delta^2) + 2*q^10*alpha*delta/(beta^3*gamma^2)"
        " + q^10*alpha^4*delta^3/(beta^5*gamma^5))",
        true));

    // Coefficient scans for the two theorems, as registered identities so the
    // thm:* filter reaches them.
    reg.push_back(dsl_case("thm:X2Y6.scan2", "thm:X2Y6", 2000, "(1/X)[[2]]%10", "0", true));
    reg.push_back(dsl_case("thm:X2Y6.scan6", "thm:X2Y6", 2000, "(1/Y)[[6]]%10", "0", true));
    reg.push_back(dsl_case("thm:XY8-XY0.scan0", "thm:XY8-XY0", 2000, "(1/Y)[[0]]%10",
                           "(1/X)[[0]]%10"));
    reg.push_back(dsl_case("thm:XY8-XY0.scan8", "thm:XY8-XY0", 2000, "(1/Y)[[8]]%10",
                           "-((1/X)[[8]]%10)"));

    return reg;
}

bool glob_match(const char* pattern, const char* text) {
    for (; *pattern; ++pattern) {
        switch (*pattern) {
            case '*':
                while (*(pattern + 1) == '*') ++pattern;
                if (!*(pattern + 1)) return true;
                for (const char* t = text; *t; ++t)
                    if (glob_match(pattern + 1, t)) return true;
                return glob_match(pattern + 1, text);
            case '?':
                if (!*text) return false;
                ++text;
                break;
            default:
                if (*pattern != *text) return false;
                ++text;
                break;
        }
    }
    return !*text;
}

} // namespace

const std::vector<IdentityCase>& registry() {
    static const std::vector<IdentityCase> reg = make_registry();
    return reg;
}

std::vector<const IdentityCase*> match_identities(const std::string& glob) {
    std::vector<const IdentityCase*> out;
    for (const IdentityCase& c : registry())
        if (glob_match(glob.c_str(), c.id.c_str())) out.push_back(&c);
    return out;
}

IdentityReport verify(const IdentityCase& c, long order) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.id = c.id;
    rep.order = order;
    rep.pass = true;

    const auto [lhs, rhs] = c.build(order);
    const long n = std::min({order, lhs.order(), rhs.order()});
    for (long i = 0; i <= n; ++i) {
        const mpz_class& a = lhs.coeff(i);
        const mpz_class& b = rhs.coeff(i);
        if (a != b) {
            rep.pass = false;
            rep.first_mismatch = Mismatch{i, a, b};
            break;
        }
        if (c.require_zero && mpz_sgn(a.get_mpz_t()) != 0) {
            rep.pass = false;
            rep.first_mismatch = Mismatch{i, a, mpz_class(0)};
            break;
        }
    }
    rep.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

IdentityReport verify(const std::string& id, long order) {
    for (const IdentityCase& c : registry())
        if (c.id == id) return verify(c, order);
    throw UnknownIdentity("no identity registered under '" + id + "'");
}

int default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("QS_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return static_cast<int>(n);
}

namespace {

std::vector<IdentityReport> run_cases(std::vector<const IdentityCase*> cases,
                                      long order, int threads, bool raise_to_default) {
    std::sort(cases.begin(), cases.end(),
              [](const IdentityCase* a, const IdentityCase* b) { return a->id < b->id; });
    if (threads <= 0) threads = default_thread_count();
    threads = std::min<int>(threads, static_cast<int>(cases.size()));
    if (threads < 1) threads = 1;

    std::vector<IdentityReport> reports(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            const long n =
                raise_to_default ? std::max(order, cases[i]->default_order) : order;
            reports[i] = verify(*cases[i], n);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return reports;
}

} // namespace

std::vector<IdentityReport> verify_all(long order, int threads) {
    std::vector<const IdentityCase*> cases;
    for (const IdentityCase& c : registry()) cases.push_back(&c);
    return run_cases(std::move(cases), order, threads, true);
}

std::vector<IdentityReport> verify_matching(const std::string& glob, long order,
                                            int threads) {
    return run_cases(match_identities(glob), order, threads, true);
}

IdentityReport theorem_scan(Theorem which, long n_max) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.order = n_max;
    rep.pass = true;

    const TruncatedSeries px = invert(named("X", n_max));
    const TruncatedSeries py = invert(named("Y", n_max));
    const auto fail = [&rep](long exponent, mpz_class got, mpz_class want) {
        if (!rep.pass) return;
        rep.pass = false;
        rep.first_mismatch = Mismatch{exponent, std::move(got), std::move(want)};
    };

    if (which == Theorem::CoefficientVanishing) {
        rep.id = "thm:X2Y6.scan";
        for (long e = 2; e <= n_max && rep.pass; e += 10)
            if (mpz_sgn(px.coeff(e).get_mpz_t()) != 0) fail(e, px.coeff(e), 0);
        for (long e = 6; e <= n_max && rep.pass; e += 10)
            if (mpz_sgn(py.coeff(e).get_mpz_t()) != 0) fail(e, py.coeff(e), 0);
    } else {
        rep.id = "thm:XY8-XY0.scan";
        for (long e = 0; e <= n_max && rep.pass; e += 10)
            if (py.coeff(e) != px.coeff(e)) fail(e, py.coeff(e), px.coeff(e));
        for (long e = 8; e <= n_max && rep.pass; e += 10)
            if (py.coeff(e) != -px.coeff(e)) fail(e, py.coeff(e), -px.coeff(e));
    }
    rep.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

namespace {

TruncatedSeries pad_to(const TruncatedSeries& s, long order) {
    std::vector<mpz_class> v(static_cast<std::size_t>(order) + 1);
    for (long i = 0; i <= std::min(order, s.order()); ++i)
        v[static_cast<std::size_t>(i)] = s.coeff(i);
    return TruncatedSeries(std::move(v));
}

} // namespace

ComponentSeries scaled_component(char series, long residue, long rcal_power, long order) {
    if (series != 'X' && series != 'Y') throw Error("series must be 'X' or 'Y'");
    const long inner = order + residue;
    const std::string base(1, series);
    const TruncatedSeries quotient =
        pow(named("phi_10", inner), 9) *
        invert(named(base, inner) * pow(named("phi_50", inner), 5));
    TruncatedSeries component = pad_to(dissect(quotient, 10, residue), order);
    TruncatedSeries multiplied = component * pow(named("Rcal", order), rcal_power);
    return {series, residue, std::move(component), std::move(multiplied), rcal_power};
}

IdentityReport component_factorization_check(Factorization which, long order) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> chain;
    std::string id;
    TruncatedSeries combination = TruncatedSeries::zero(order);
    bool consistent = true;

    // Rebuilds each component from a plain dissection and checks it against
    // the prefactor pull-out route before trusting the chain's left sides.
    const auto component = [&](char series, long residue, long rcal_power) {
        const ComponentSeries cs = scaled_component(series, residue, rcal_power, order);
        const TruncatedSeries pulled =
            pad_to(dissect(invert(named(std::string(1, series), order + residue)), 10,
                           residue),
                   order) *
            (pow(named("phi_10", order), 9) * invert(pow(named("phi_50", order), 5)));
        consistent = consistent && cs.component == pulled;
        return cs.rcal_multiplied;
    };

    switch (which) {
        case Factorization::X2:
            id = "factorization.X2";
            chain = {"eq:XXp2.mid1", "eq:XXp2.mid2", "eq:XXp2", "eq:XXp3",
                     "thm:X2Y6.X2R4", "thm:X2Y6.X"};
            combination = component('X', 2, 4);
            break;
        case Factorization::Y6:
            id = "factorization.Y6";
            chain = {"thm:X2Y6.Ymid1", "thm:X2Y6.Ymid2", "thm:X2Y6.Ypre", "eq:YYp3",
                     "thm:X2Y6.Y6R2", "thm:X2Y6.Y"};
            combination = component('Y', 6, 2);
            break;
        case Factorization::X0Y0:
            id = "factorization.X0Y0";
            chain = {"thm:XY8-XY0.diff0", "thm:XY8-XY0.X0Y0"};
            combination = component('X', 0, -1) - component('Y', 0, -1);
            break;
        case Factorization::X8Y8:
            id = "factorization.X8Y8";
            chain = {"thm:XY8-XY0.sum8", "thm:XY8-XY0.X8Y8"};
            combination = component('X', 8, 1) + component('Y', 8, 1);
            break;
    }

    IdentityReport rep;
    rep.id = id;
    rep.order = order;
    rep.pass = consistent;
    for (long e = 0; e <= order && rep.pass; ++e) {
        if (mpz_sgn(combination.coeff(e).get_mpz_t()) != 0) {
            rep.pass = false;
            rep.first_mismatch = Mismatch{e, combination.coeff(e), mpz_class(0)};
        }
    }
    for (const std::string& link : chain) {
        IdentityReport r = verify(link, order);
        if (!r.pass && rep.pass) {
            rep.pass = false;
            rep.first_mismatch = r.first_mismatch;
        }
    }
    rep.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

} // namespace qseries
